"""Grassmannians over F_p and higher support varieties in Pluecker coordinates.

A d-subspace of k^c is stored by its reduced-row-echelon basis, embedded in
projective space by its d x d minors, and the Grassmannian itself is cut out
by the quadratic shuffle relations among those minors.  Given the ideal Z of
a rank variety in k^c, the locus of d-planes meeting Z away from the origin
is the image of the incidence correspondence

    { (u, W) : u in Z, u in W, u != 0 }

under the second projection.  Its ideal is computed exactly: saturate the
incidence ideal to discard the locus u = 0, then eliminate the u-coordinates.
Saturation with respect to (x1, .., xc) splits as the intersection of the
saturations at each xi, and elimination commutes with that intersection, so
the default route works one variable at a time on smaller bases; the direct
route is kept for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

import numpy as np

from .errors import SubspaceLimitError
from .fp import MatrixFp, PrimeField, _rref
from .homology import ext_eventually_zero
from .modules import KEModule, restrict_to_subspace
from .poly import (
    Ideal,
    Polynomial,
    PolyRing,
    buchberger_reduced,
    eliminate,
    ideal,
    ideal_dimension,
    ideal_intersect,
    saturate,
    saturate_wrt_ideal,
)
from .rankvariety import VarietyIdeal1, pair_variety_ideal, point_in_rank_variety

DEFAULT_SUBSPACE_CAP = 10_000


def _subsets(c: int, d: int) -> list[tuple[int, ...]]:
    return list(combinations(range(c), d))


def _subset_name(S: tuple[int, ...]) -> str:
    return "p_" + "".join(str(i + 1) for i in S)


def pluecker_ring(field: PrimeField, c: int, d: int) -> PolyRing:
    """F_p[p_S : S a d-subset of {1..c}], subsets in lexicographic order."""
    if not 1 <= d <= c:
        raise ValueError(f"need 1 <= d <= c, got d={d}, c={c}")
    if c > 9:
        raise ValueError("coordinate names use single digits; c must be at most 9")
    return PolyRing(field, [_subset_name(S) for S in _subsets(c, d)])


def gaussian_binomial(c: int, d: int, p: int) -> int:
    """Number of d-subspaces of F_p^c."""
    num = 1
    den = 1
    for i in range(d):
        num *= p ** (c - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class Subspace:
    """A d-dimensional subspace of k^c with its canonical echelon basis."""

    field: PrimeField
    c: int
    d: int
    basis: MatrixFp

    def __post_init__(self) -> None:
        if self.basis.rows != self.d or self.basis.cols != self.c:
            raise ValueError("basis must be a d x c matrix")
        if self.basis.field != self.field:
            raise ValueError("basis field mismatch")
        red, piv = _rref(self.basis.array, self.field.p)
        if len(piv) != self.d or not np.array_equal(red, self.basis.array):
            raise ValueError("basis must be a full-rank reduced echelon matrix")

    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in row) for row in self.basis.array]

    def __str__(self) -> str:
        return "span" + str(tuple(self.rows()))


def subspace_from_rows(field: PrimeField, rows) -> Subspace:
    """The subspace spanned by the given independent row vectors."""
    arr = np.array([[int(x) for x in row] for row in rows], dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError("rows must form a matrix")
    d, c = arr.shape
    red, piv = _rref(arr, field.p)
    if len(piv) != d:
        raise ValueError("rows are not linearly independent")
    return Subspace(field, c, d, MatrixFp(field, red[: len(piv)]))


def enumerate_subspaces(
    field: PrimeField, c: int, d: int, cap: int = DEFAULT_SUBSPACE_CAP
) -> list[Subspace]:
    """All d-subspaces of F_p^c, by pivot pattern then free entries."""
    if not 1 <= d <= c:
        raise ValueError(f"need 1 <= d <= c, got d={d}, c={c}")
    p = field.p
    count = gaussian_binomial(c, d, p)
    if count > cap:
        raise SubspaceLimitError(
            f"{count} subspaces of dimension {d} in F_{p}^{c}, over the cap {cap}"
        )
    out = []
    for piv in combinations(range(c), d):
        pivset = set(piv)
        free_pos = [
            (r, j) for r in range(d) for j in range(piv[r] + 1, c) if j not in pivset
        ]
        for assignment in product(range(p), repeat=len(free_pos)):
            mat = np.zeros((d, c), dtype=np.int64)
            for r, j in zip(range(d), piv):
                mat[r, j] = 1
            for (r, j), val in zip(free_pos, assignment):
                mat[r, j] = val
            out.append(Subspace(field, c, d, MatrixFp(field, mat)))
    assert len(out) == count
    return out


@dataclass(frozen=True)
class PlueckerPoint:
    """A projective point of the Pluecker embedding of G_d(k^c), scaled so the
    first nonzero coordinate is 1."""

    field: PrimeField
    c: int
    d: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = comb(self.c, self.d)
        coords = tuple(int(x) % self.field.p for x in self.coords)
        if len(coords) != expected:
            raise ValueError(f"expected {expected} coordinates, got {len(coords)}")
        lead = next((x for x in coords if x), None)
        if lead is None:
            raise ValueError("projective point needs a nonzero coordinate")
        if lead != 1:
            inv = self.field.inv(lead)
            coords = tuple(x * inv % self.field.p for x in coords)
        object.__setattr__(self, "coords", coords)

    def __str__(self) -> str:
        return "(" + " : ".join(str(x) for x in self.coords) + ")"


def pluecker_embed(W: Subspace) -> PlueckerPoint:
    """The point of P^(C(c,d)-1) whose coordinates are the d-minors of a basis."""
    coords = []
    for S in _subsets(W.c, W.d):
        sub = W.basis.array[:, list(S)]
        coords.append(MatrixFp(W.field, sub).det())
    return PlueckerPoint(W.field, W.c, W.d, tuple(coords))


def beta_frobenius(pt: PlueckerPoint) -> PlueckerPoint:
    """Coordinatewise p-th power; fixes exactly the F_p-rational points."""
    p = pt.field.p
    return PlueckerPoint(pt.field, pt.c, pt.d, tuple(pow(x, p, p) for x in pt.coords))


def pluecker_relations(ring: PolyRing, c: int, d: int) -> list[Polynomial]:
    """The quadratic shuffle relations cutting out G_d(k^c) in P^(C(c,d)-1).

    For each (d-1)-subset S and (d+1)-subset T the alternating sum of
    p_(S+t) * p_(T-t) over t in T vanishes on every embedded subspace.
    Degenerate parameters (d = 1 or d >= c - 1) yield no relations.
    """
    pos = {S: i for i, S in enumerate(_subsets(c, d))}
    gens_list = ring.gens()
    seen = {}
    for S in combinations(range(c), d - 1):
        for T in combinations(range(c), d + 1):
            rel = ring.zero
            for k, t in enumerate(T):
                if t in S:
                    continue
                insert_at = sum(1 for s in S if s < t)
                sign = (-1) ** (k + len(S) - insert_at)
                A = tuple(sorted(S + (t,)))
                B = tuple(x for x in T if x != t)
                term = gens_list[pos[A]] * gens_list[pos[B]]
                rel = rel + term * sign
            if not rel.is_zero():
                canon = rel.monic()
                seen.setdefault(canon.terms, canon)
    return sorted(seen.values(), key=lambda f: f.terms)


def incidence_ring(field: PrimeField, c: int, d: int) -> PolyRing:
    """Pluecker coordinates followed by the point coordinates x1..xc."""
    base = pluecker_ring(field, c, d)
    return base.extend([f"x{i + 1}" for i in range(c)])


def incidence_ideal(Z: VarietyIdeal1, d: int) -> Ideal:
    """Ideal of { (u, W) : u in Z, u in W } inside Pluecker-by-point space.

    Membership of u in W is the vanishing of the wedge of u with a basis of
    W: for every (d+1)-subset J, the alternating sum of x_j * p_(J-j) over
    j in J.
    """
    c = Z.c
    field = Z.ring.field
    ring = incidence_ring(field, c, d)
    npl = comb(c, d)
    pos = {S: i for i, S in enumerate(_subsets(c, d))}
    gens: list[Polynomial] = list(pluecker_relations(ring, c, d))
    z_map = [npl + i for i in range(c)]
    gens.extend(g.map_to(ring, z_map) for g in Z.gb.gens)
    for J in combinations(range(c), d + 1):
        rel = ring.zero
        for k, j in enumerate(J):
            x_j = ring.var(f"x{j + 1}")
            p_rest = ring.var(pos[tuple(s for s in J if s != j)])
            term = x_j * p_rest
            rel = rel + term * ((-1) ** k)
        gens.append(rel)
    return ideal(ring, gens)


@dataclass(frozen=True)
class VarietyIdealD:
    """The ideal of a higher support variety inside the Pluecker space of
    G_d(k^c), held as a reduced Groebner basis."""

    ring: PolyRing
    c: int
    d: int
    gb: Ideal

    def is_empty(self) -> bool:
        return self.gb.is_unit_ideal()

    def is_full(self) -> bool:
        return self.gb.is_zero_ideal()


def project_incidence(
    Z: VarietyIdeal1,
    d: int,
    budget: int | None = None,
    method: str = "split",
) -> VarietyIdealD:
    """Ideal of the d-planes meeting the punctured cone of Z.

    method "split" saturates and eliminates one x-variable at a time and
    intersects the results; method "direct" saturates with respect to the
    whole irrelevant ideal first.  Both return the same reduced basis.
    """
    c = Z.c
    if not 1 <= d <= c:
        raise ValueError(f"need 1 <= d <= c, got d={d}, c={c}")
    field = Z.ring.field
    inc = incidence_ideal(Z, d)
    ring = inc.ring
    x_names = [f"x{i + 1}" for i in range(c)]
    small = pluecker_ring(field, c, d)

    if method == "direct":
        irrelevant = ideal(ring, [ring.var(n) for n in x_names])
        sat = saturate_wrt_ideal(inc, irrelevant, budget)
        projected = eliminate(sat, x_names, budget)
        return VarietyIdealD(small, c, d, projected)
    if method != "split":
        raise ValueError(f"unknown method {method!r}")

    factors = []
    for name in x_names:
        sat = saturate(inc, ring.var(name), budget)
        if sat.is_unit_ideal():
            continue
        part = eliminate(sat, x_names, budget)
        if part.is_unit_ideal():
            continue
        factors.append(part)
    if not factors:
        unit = ideal(small, [small.one])
        return VarietyIdealD(small, c, d, buchberger_reduced(unit, budget))
    result = factors[0]
    for part in factors[1:]:
        result = ideal_intersect(result, part, budget)
    return VarietyIdealD(small, c, d, result)


def higher_variety_ideal(
    M: KEModule,
    N: KEModule,
    d: int,
    budget: int | None = None,
    method: str = "split",
) -> VarietyIdealD:
    """Ideal of the d-th support variety of the pair (M, N) in G_d(k^c)."""
    Z = pair_variety_ideal(M, N, budget)
    return project_incidence(Z, d, budget, method)


def point_on_variety(V: VarietyIdealD, pt: PlueckerPoint) -> bool:
    """Whether a Pluecker point satisfies every equation of the variety."""
    if comb(V.c, V.d) != len(pt.coords):
        raise ValueError("point does not match the variety's Grassmannian")
    values = list(pt.coords)
    return all(g.evaluate(values) == 0 for g in V.gb.gens)


def variety_dim_projective(V: VarietyIdealD, budget: int | None = None) -> int:
    """Projective dimension of the variety; -1 when it is empty."""
    dim = ideal_dimension(V.gb, budget)
    return dim - 1 if dim > 0 else -1


def subspaces_on_variety(
    V: VarietyIdealD, cap: int = DEFAULT_SUBSPACE_CAP
) -> list[Subspace]:
    """All rational d-subspaces whose Pluecker point lies on the variety."""
    field = V.ring.field
    return [
        W
        for W in enumerate_subspaces(field, V.c, V.d, cap)
        if point_on_variety(V, pluecker_embed(W))
    ]


def oracle_membership(
    M: KEModule,
    N: KEModule,
    d: int,
    W: Subspace,
    pair_ideal: VarietyIdeal1 | None = None,
    window_bound: int | None = None,
    budget: int | None = None,
) -> tuple[bool, bool]:
    """Test membership of W in the d-th support variety of (M, N) two ways.

    Returns (geometric, homological).  The geometric answer scans the nonzero
    rational points of W for one lying on the order-one variety of the pair;
    the homological answer restricts both modules to the subalgebra on a basis
    of W and asks whether Ext fails to vanish eventually.  A geometric hit is
    always definitive; a miss can be a field-size artifact when the order-one
    variety has no rational points on W, so equality of the two flags is
    guaranteed only when that variety is a union of subspaces defined over
    the base field.
    """
    if W.c != M.c or W.d != d:
        raise ValueError("subspace does not match the modules or dimension")
    if pair_ideal is None:
        pair_ideal = pair_variety_ideal(M, N, budget)
    p = M.p
    rows = W.rows()
    geometric = False
    for coeffs in product(range(p), repeat=d):
        if not any(coeffs):
            continue
        u = tuple(
            sum(t * r[i] for t, r in zip(coeffs, rows)) % p for i in range(M.c)
        )
        if point_in_rank_variety(pair_ideal, u):
            geometric = True
            break
    MW = restrict_to_subspace(M, rows)
    NW = restrict_to_subspace(N, rows)
    homological = not ext_eventually_zero(MW, NW, window_bound)
    return geometric, homological
