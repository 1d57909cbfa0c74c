"""
Rank varieties of modules and pairs
===================================

The rank variety of M lives in affine c-space: a nonzero point a is in
it when M fails to be free over the line through a.  It is cut out by
determinantal equations, minors of the generic action raised to the
(p-1)st power, and this script computes those ideals exactly.
"""

from grassvar import (
    PrimeField,
    direct_sum,
    dual,
    pair_variety_ideal,
    point_in_rank_variety,
    quotient_by_linear_forms,
    rank_variety_ideal,
    rational_points,
    regular_module,
    syzygy_step,
)

F2 = PrimeField(2)
Rx = quotient_by_linear_forms(F2, 3, [(1, 0, 0)])
Ry = quotient_by_linear_forms(F2, 3, [(0, 1, 0)])
diag = quotient_by_linear_forms(F2, 3, [(1, 1, 0)])

# killing x1 leaves the variety {a : a2 = a3 = 0}, the line through e1
V = rank_variety_ideal(Rx)
print("ideal of V(kE/(x1)):", V.gb)
print("its rational points:", rational_points(V))

# a free module is free on every line, so only 0 satisfies the equations
print("V(kE):", rank_variety_ideal(regular_module(F2, 3)).gb)

# direct sums take unions; the product equation says exactly that
S = rank_variety_ideal(direct_sum(Rx, Ry))
print("V(Rx + Ry):", S.gb)
print("points:", rational_points(S))

# pairs take intersections
P = pair_variety_ideal(Rx, diag)
print("V(Rx, kE/(x1+x2)):", P.gb, "points:", rational_points(P))

# the variety is an invariant of the stable module: syzygies and duals
# do not move it
omega = syzygy_step(Rx)[1]
print("V(syzygy of Rx):", rank_variety_ideal(omega).gb)
print("V(dual of Rx):  ", rank_variety_ideal(dual(Rx)).gb)

# membership testing evaluates the reduced basis at the point
print("(1,0,0) in V(Rx):", point_in_rank_variety(V, (1, 0, 0)))
print("(0,1,0) in V(Rx):", point_in_rank_variety(V, (0, 1, 0)))
