"""
Minimal resolutions, Betti numbers, and Ext
===========================================

Over the local algebra kE every module has a minimal free resolution.
Its ranks are the Betti numbers, and applying Hom(-, N) to it computes
the dimensions of Ext^i(M, N).  Whether those dimensions die out is the
homological side of every variety computed by this package.
"""

from grassvar import (
    PrimeField,
    betti_numbers,
    ext_dims,
    ext_eventually_zero,
    quotient_by_linear_forms,
    regular_module,
    resolve,
)

F2 = PrimeField(2)
k = quotient_by_linear_forms(F2, 2, [(1, 0), (0, 1)])
Rx = quotient_by_linear_forms(F2, 2, [(1, 0)])
Ry = quotient_by_linear_forms(F2, 2, [(0, 1)])
kE = regular_module(F2, 2)

# the residue field has linearly growing Betti numbers: complexity 2
print("betti(k):", betti_numbers(k, 6))

# a free module resolves instantly
print("betti(kE):", betti_numbers(kE, 6))

# kE/(x1) is periodic: complexity 1
print("betti(kE/(x1)):", betti_numbers(Rx, 6))

# the full resolution object exposes the syzygies and the differentials
res = resolve(k, 3, keep_differentials=True)
print("syzygy dims:", [S.n for S in res.syzygies])
print("first differential:")
print(res.differentials[0])

# Ext tables against different targets
print("ext(kE/(x1), k):     ", list(ext_dims(Rx, k, 6)))
print("ext(kE/(x1), kE/(x2)):", list(ext_dims(Rx, Ry, 6)))
print("ext(kE/(x1), itself): ", list(ext_dims(Rx, Rx, 6)))

# eventual vanishing is the yes/no question the varieties encode:
# it holds exactly when the two support varieties meet only at 0
print("ext(Rx, Ry) eventually zero:", ext_eventually_zero(Rx, Ry))
print("ext(Rx, Rx) eventually zero:", ext_eventually_zero(Rx, Rx))

# a precomputed resolution can be reused across many targets
shared = resolve(Rx, 13)
for name, N in [("k", k), ("kE", kE), ("Ry", Ry)]:
    table = ext_dims(Rx, N, 12, resolution=shared)
    print(f"ext(Rx, {name}) through degree 12:", list(table))
