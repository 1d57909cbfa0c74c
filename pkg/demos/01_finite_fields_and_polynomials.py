"""
Exact arithmetic: prime fields, matrices, and Groebner bases
============================================================

Everything in this package is computed over F_p with no floating point
error anywhere.  This script walks the two layers that make that work:
matrices over a prime field, and multivariate polynomial ideals.
"""

from grassvar import (
    MatrixFp,
    PolyRing,
    PrimeField,
    buchberger_reduced,
    eliminate,
    ideal,
    normal_form,
)

# a prime field is just modular arithmetic with checked inverses
F5 = PrimeField(5)
print("3 * inv(3) =", 3 * F5.inv(3) % 5)

# matrices reduce, invert and factor exactly
A = MatrixFp(F5, [[1, 2, 3], [4, 0, 1], [2, 2, 2]])
print("det A =", A.det())
print("rank A =", A.rank())

K = MatrixFp(F5, [[1, 2, 0], [2, 4, 0]])
print("kernel of K:", K.kernel_columns())

# polynomial rings carry a monomial order; grevlex is the default
ring = PolyRing(F5, ["x", "y", "z"])
x, y, z = ring.gens()

# the twisted cubic: eliminate the parameter to find the curve's equation
I = ideal(ring, [y - x**2, z - x**3])
print("curve in the (y, z) plane:", eliminate(I, {"x"}))

# a reduced Groebner basis is a canonical form for the whole ideal
J = buchberger_reduced(ideal(ring, [x**2 + y**2, x * y]))
print("reduced basis:", J)

# normal forms decide ideal membership
probe = x**3
print("x^3 mod J =", normal_form(probe, J))
print("x^3 in J:", normal_form(probe, J).is_zero())
