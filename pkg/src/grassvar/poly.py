"""Exact multivariate polynomial arithmetic and Groebner bases over F_p.

Monomials are exponent tuples, polynomials are sorted term tuples over a ring
descriptor, and all Groebner computation is Buchberger's algorithm with the
coprime and chain criteria under normal (smallest-lcm) pair selection.
Elimination runs under a block order; saturation, ideal intersection and
radical membership are built on elimination with a fresh auxiliary variable.

Every routine is deterministic: reduced Groebner bases are unique for a given
ideal and order, term orders break ties by fixed index order, and nothing
depends on hash iteration order.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import GroebnerBudgetError
from .fp import PrimeField

DEFAULT_PAIR_BUDGET = 200_000

Mono = tuple[int, ...]


@dataclass(frozen=True)
class MonomialOrder:
    """lex, grevlex, or a two-block elimination order (drop block greatest)."""

    kind: str = "grevlex"
    drop: frozenset = frozenset()

    def __post_init__(self) -> None:
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "block" and not self.drop:
            raise ValueError("block order needs a nonempty drop set")

    @staticmethod
    def lex() -> "MonomialOrder":
        return MonomialOrder("lex")

    @staticmethod
    def grevlex() -> "MonomialOrder":
        return MonomialOrder("grevlex")

    @staticmethod
    def block(drop: Iterable[str]) -> "MonomialOrder":
        return MonomialOrder("block", frozenset(drop))

    def restrict(self, kept: Sequence[str]) -> "MonomialOrder":
        """The order induced on the subring spanned by `kept`."""
        if self.kind == "block":
            rem = self.drop & set(kept)
            return MonomialOrder.block(rem) if rem else MonomialOrder.grevlex()
        return MonomialOrder(self.kind)


def _grevlex_key(e: Mono):
    return (sum(e), tuple(-x for x in reversed(e)))


class PolyRing:
    """F_p[names] with a fixed monomial order."""

    __slots__ = ("field", "names", "order", "_pos", "_keyfn", "_keycache")

    def __init__(self, field: PrimeField, names: Sequence[str], order: MonomialOrder | None = None) -> None:
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        order = order or MonomialOrder.grevlex()
        self.field = field
        self.names = names
        self.order = order
        self._pos = {n: i for i, n in enumerate(names)}
        self._keyfn = self._build_keyfn()
        self._keycache: dict[Mono, tuple] = {}

    def _build_keyfn(self) -> Callable[[Mono], tuple]:
        if self.order.kind == "lex":
            return lambda e: e
        if self.order.kind == "grevlex":
            return _grevlex_key
        missing = self.order.drop - set(self.names)
        if missing:
            raise ValueError(f"block order drops unknown variables {sorted(missing)}")
        di = tuple(i for i, n in enumerate(self.names) if n in self.order.drop)
        ki = tuple(i for i, n in enumerate(self.names) if n not in self.order.drop)
        def key(e: Mono):
            return (_grevlex_key(tuple(e[i] for i in di)), _grevlex_key(tuple(e[i] for i in ki)))
        return key

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyRing)
            and self.p == other.p
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.p, self.names, self.order))

    def __repr__(self) -> str:
        return f"PolyRing(F_{self.p}[{', '.join(self.names)}], {self.order.kind})"

    def key(self, e: Mono) -> tuple:
        k = self._keycache.get(e)
        if k is None:
            k = self._keyfn(e)
            self._keycache[e] = k
        return k

    # construction
    def from_dict(self, d: dict[Mono, int]) -> "Polynomial":
        p = self.p
        clean = {}
        for e, c in d.items():
            c %= p
            if c:
                clean[e] = c
        terms = tuple(sorted(clean.items(), key=lambda t: self.key(t[0]), reverse=True))
        return Polynomial(self, terms)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, a: int) -> "Polynomial":
        a %= self.p
        if a == 0:
            return self.zero
        return Polynomial(self, (((0,) * self.nvars, a),))

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self._pos[name_or_index]
        e = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((e, 1),))

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def index(self, name: str) -> int:
        return self._pos[name]

    def fresh_name(self, base: str = "t") -> str:
        if base not in self._pos:
            return base
        i = 0
        while f"{base}{i}" in self._pos:
            i += 1
        return f"{base}{i}"

    def extend(self, new_names: Sequence[str]) -> "PolyRing":
        """Append variables; keeps the order kind (and block drop set)."""
        return PolyRing(self.field, self.names + tuple(new_names), self.order)


class Polynomial:
    """Immutable polynomial: term tuple strictly descending in the ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple) -> None:
        self.ring = ring
        self.terms = terms

    # predicates and views
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or not any(self.terms[0][0])

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms[0][1] == 1 and not any(self.terms[0][0])

    def lm(self) -> Mono:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lc(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {sum(e) for e, _ in self.terms}
        return len(degs) == 1

    def support(self) -> frozenset:
        """Indices of variables that occur in some term."""
        s = set()
        for e, _ in self.terms:
            for i, x in enumerate(e):
                if x:
                    s.add(i)
        return frozenset(s)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    # arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("mixed polynomial rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        d = dict(self.terms)
        p = self.ring.p
        for e, c in other.terms:
            v = (d.get(e, 0) + c) % p
            if v:
                d[e] = v
            elif e in d:
                del d[e]
        return self.ring.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.ring.p
        return Polynomial(self.ring, tuple((e, (-c) % p) for e, c in self.terms))

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            p = self.ring.p
            c0 = other % p
            if c0 == 0:
                return self.ring.zero
            return Polynomial(self.ring, tuple((e, (c * c0) % p) for e, c in self.terms))
        other = self._coerce(other)
        p = self.ring.p
        d: dict[Mono, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                v = (d.get(e, 0) + c1 * c2) % p
                if v:
                    d[e] = v
                elif e in d:
                    del d[e]
        return self.ring.from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        c = self.terms[0][1]
        if c == 1:
            return self
        inv = self.ring.field.inv(c)
        return self * inv

    def mul_mono(self, e0: Mono, c0: int = 1) -> "Polynomial":
        p = self.ring.p
        c0 %= p
        if c0 == 0:
            return self.ring.zero
        terms = tuple((tuple(a + b for a, b in zip(e, e0)), (c * c0) % p) for e, c in self.terms)
        return Polynomial(self.ring, terms)

    def evaluate(self, values: Sequence[int]) -> int:
        """Value at a point of F_p^nvars."""
        if len(values) != self.ring.nvars:
            raise ValueError("wrong number of coordinates")
        p = self.ring.p
        vals = [v % p for v in values]
        total = 0
        for e, c in self.terms:
            t = c
            for i, x in enumerate(e):
                if x:
                    t = (t * pow(vals[i], x, p)) % p
            total = (total + t) % p
        return total

    def map_to(self, ring: PolyRing, index_map: Sequence[int | None]) -> "Polynomial":
        """Reinterpret in `ring`; index_map[i] is the target slot of variable i
        (None requires exponent 0)."""
        d: dict[Mono, int] = {}
        n = ring.nvars
        for e, c in self.terms:
            out = [0] * n
            for i, x in enumerate(e):
                if not x:
                    continue
                j = index_map[i]
                if j is None:
                    raise ValueError(f"variable {self.ring.names[i]} has no image")
                out[j] += x
            key = tuple(out)
            d[key] = (d.get(key, 0) + c) % ring.p
        return ring.from_dict(d)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.names
        bits = []
        for e, c in self.terms:
            factors = []
            for i, x in enumerate(e):
                if x == 1:
                    factors.append(names[i])
                elif x > 1:
                    factors.append(f"{names[i]}^{x}")
            mono = "*".join(factors)
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


@dataclass(frozen=True)
class Ideal:
    """Finite generator list over a ring descriptor."""

    ring: PolyRing
    gens: tuple

    def __post_init__(self) -> None:
        for g in self.gens:
            if g.ring != self.ring:
                raise ValueError("generator ring mismatch")

    def is_zero_ideal(self) -> bool:
        return all(g.is_zero() for g in self.gens)

    def is_unit_ideal(self) -> bool:
        """Only reliable on a Groebner basis."""
        return any(g.is_constant() and not g.is_zero() for g in self.gens)

    def __str__(self) -> str:
        if self.is_zero_ideal():
            return "ideal(0)"
        return "ideal(" + ", ".join(str(g) for g in self.gens) + ")"


def ideal(ring: PolyRing, gens: Iterable[Polynomial]) -> Ideal:
    """Normalize a generator list: drop zeros, keep order."""
    return Ideal(ring, tuple(g for g in gens if not g.is_zero()))


# --- division ----------------------------------------------------------------

def _divides(a: Mono, b: Mono) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _prepare_reducers(ring: PolyRing, polys: Sequence[Polynomial]):
    red = []
    for g in polys:
        if g.is_zero():
            continue
        inv = ring.field.inv(g.lc())
        red.append((g.lm(), inv, g.terms))
    red.sort(key=lambda r: ring.key(r[0]))
    return red


def _nf_dict(work: dict[Mono, int], reducers, ring: PolyRing) -> dict[Mono, int]:
    """Full normal form of the term dict against reducers (each with unit lead)."""
    p = ring.p
    key = ring.key
    out: dict[Mono, int] = {}
    work = dict(work)
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = None
        for lm, inv, terms in reducers:
            if _divides(lm, m):
                hit = (lm, inv, terms)
                break
        if hit is None:
            out[m] = c
            continue
        lm, inv, terms = hit
        shift = tuple(a - b for a, b in zip(m, lm))
        factor = (c * inv) % p
        for ge, gc in terms[1:]:
            mm = tuple(a + b for a, b in zip(shift, ge))
            v = (work.get(mm, 0) - factor * gc) % p
            if v:
                work[mm] = v
            elif mm in work:
                del work[mm]
    return out


def normal_form(f: Polynomial, basis: Ideal | Sequence[Polynomial]) -> Polynomial:
    """Remainder of f under full reduction by the given (Groebner) basis."""
    polys = basis.gens if isinstance(basis, Ideal) else tuple(basis)
    ring = f.ring
    reducers = _prepare_reducers(ring, polys)
    if not reducers:
        return f
    return ring.from_dict(_nf_dict(dict(f.terms), reducers, ring))


# --- Buchberger ----------------------------------------------------------------

def _interreduce(ring: PolyRing, polys: list[Polynomial]) -> list[Polynomial]:
    """Monic basis with every element fully reduced against the others."""
    items = sorted(
        {g.monic().terms for g in polys if not g.is_zero()},
        key=lambda t: (ring.key(t[0][0]), t),
    )
    # one incremental pass first (cheap on large redundant generator lists)
    basis: list[Polynomial] = []
    reducers: list = []
    for terms in items:
        if reducers:
            r = ring.from_dict(_nf_dict(dict(terms), reducers, ring))
        else:
            r = Polynomial(ring, terms)
        if r.is_zero():
            continue
        r = r.monic()
        basis.append(r)
        reducers.append((r.lm(), 1, r.terms))
        reducers.sort(key=lambda t: ring.key(t[0]))
    # then sweep to a fixpoint
    changed = True
    while changed:
        changed = False
        out: list[Polynomial] = []
        for i, g in enumerate(basis):
            others = out + basis[i + 1 :]
            r = normal_form(g, others) if others else g
            if r.terms != g.terms:
                changed = True
            if not r.is_zero():
                out.append(r.monic())
        basis = sorted(out, key=lambda g: ring.key(g.lm()))
    return basis


def buchberger_reduced(I: Ideal, budget: int | None = None) -> Ideal:
    """The reduced Groebner basis of I under its ring order.

    Raises GroebnerBudgetError after `budget` S-pair reductions
    (default DEFAULT_PAIR_BUDGET); partial output is never returned.
    """
    ring = I.ring
    limit = DEFAULT_PAIR_BUDGET if budget is None else budget
    G = _interreduce(ring, list(I.gens))
    if not G:
        return Ideal(ring, ())
    if any(g.is_one() for g in G):
        return Ideal(ring, (ring.one,))

    key = ring.key
    lms = [g.lm() for g in G]
    heap: list = []
    active: set[tuple[int, int]] = set()

    def push_pairs(j: int) -> None:
        for i in range(j):
            l = _mono_lcm(lms[i], lms[j])
            heapq.heappush(heap, (key(l), i, j, l))
            active.add((i, j))

    for j in range(len(G)):
        push_pairs(j)

    reducers = _prepare_reducers(ring, G)
    reductions = 0
    while heap:
        _, i, j, l = heapq.heappop(heap)
        if (i, j) not in active:
            continue
        active.discard((i, j))
        # coprime criterion
        li, lj = lms[i], lms[j]
        if all(x == a + b for x, a, b in zip(l, li, lj)):
            continue
        # chain criterion
        skip = False
        for h in range(len(G)):
            if h == i or h == j:
                continue
            if _divides(lms[h], l):
                ph = (min(h, i), max(h, i))
                qh = (min(h, j), max(h, j))
                if ph not in active and qh not in active:
                    skip = True
                    break
        if skip:
            continue
        reductions += 1
        if reductions > limit:
            raise GroebnerBudgetError(
                f"Groebner pair budget exceeded ({limit} reductions)")
        # S-polynomial of monic pair
        fi, fj = G[i], G[j]
        s = fi.mul_mono(tuple(a - b for a, b in zip(l, li))) - fj.mul_mono(
            tuple(a - b for a, b in zip(l, lj)))
        r = ring.from_dict(_nf_dict(dict(s.terms), reducers, ring))
        if r.is_zero():
            continue
        r = r.monic()
        if r.is_one():
            return Ideal(ring, (ring.one,))
        G.append(r)
        lms.append(r.lm())
        reducers = _prepare_reducers(ring, G)
        push_pairs(len(G) - 1)

    # minimalize, then tail-reduce
    minimal: list[Polynomial] = []
    for i, g in enumerate(G):
        if any(h != i and _divides(lms[h], lms[i]) and
               (ring.key(lms[h]) != ring.key(lms[i]) or h < i)
               for h in range(len(G))):
            continue
        minimal.append(g)
    reduced = _interreduce(ring, minimal)
    reduced.sort(key=lambda g: ring.key(g.lm()), reverse=True)
    return Ideal(ring, tuple(reduced))


# --- elimination-based operations ---------------------------------------------

def eliminate(I: Ideal, drop: Iterable[str], budget: int | None = None) -> Ideal:
    """Intersection of I with the subring that omits the `drop` variables.

    Returns the reduced Groebner basis of that intersection, as an ideal over
    the smaller ring carrying the induced order.
    """
    ring = I.ring
    drop_set = frozenset(drop)
    unknown = drop_set - set(ring.names)
    if unknown:
        raise ValueError(f"cannot eliminate unknown variables {sorted(unknown)}")
    if not drop_set:
        return buchberger_reduced(I, budget)
    elim_ring = PolyRing(ring.field, ring.names, MonomialOrder.block(drop_set))
    ident = list(range(ring.nvars))
    gens = [g.map_to(elim_ring, ident) for g in I.gens]
    G = buchberger_reduced(Ideal(elim_ring, tuple(gens)), budget)
    drop_idx = {i for i, n in enumerate(ring.names) if n in drop_set}
    kept_names = tuple(n for n in ring.names if n not in drop_set)
    small = PolyRing(ring.field, kept_names, ring.order.restrict(kept_names))
    index_map: list[int | None] = []
    k = 0
    for i, n in enumerate(ring.names):
        if n in drop_set:
            index_map.append(None)
        else:
            index_map.append(k)
            k += 1
    out = [g.map_to(small, index_map) for g in G.gens if not (g.support() & drop_idx)]
    return Ideal(small, tuple(out))


def _extend_with_aux(I: Ideal, base: str = "t") -> tuple[Ideal, Polynomial, str]:
    ring = I.ring
    if ring.order.kind == "block":
        raise ValueError("auxiliary-variable constructions need lex or grevlex rings")
    t = ring.fresh_name(base)
    big = ring.extend((t,))
    ident = list(range(ring.nvars))
    gens = tuple(g.map_to(big, ident) for g in I.gens)
    return Ideal(big, gens), big.var(t), t


def saturate(I: Ideal, f: Polynomial, budget: int | None = None) -> Ideal:
    """I : f^infinity, via a fresh Rabinowitsch variable and elimination."""
    ring = I.ring
    if f.ring != ring:
        raise ValueError("saturation element lives in a different ring")
    if f.is_zero():
        return Ideal(ring, (ring.one,))
    if f.is_constant():
        return buchberger_reduced(I, budget)
    big_I, t, tname = _extend_with_aux(I)
    ident = list(range(ring.nvars))
    f_big = f.map_to(big_I.ring, ident)
    gens = big_I.gens + (t * f_big - 1,)
    return eliminate(Ideal(big_I.ring, gens), {tname}, budget)


def ideal_intersect(I: Ideal, J: Ideal, budget: int | None = None) -> Ideal:
    """I n J via t*I + (1-t)*J and elimination of t."""
    if I.ring != J.ring:
        raise ValueError("ideal intersection needs a common ring")
    ring = I.ring
    if I.is_zero_ideal() or J.is_zero_ideal():
        return Ideal(ring, ())
    big_I, t, tname = _extend_with_aux(I)
    ident = list(range(ring.nvars))
    gens = [t * g for g in big_I.gens]
    one_minus_t = big_I.ring.one - t
    for h in J.gens:
        gens.append(one_minus_t * h.map_to(big_I.ring, ident))
    return eliminate(Ideal(big_I.ring, tuple(gens)), {tname}, budget)


def saturate_wrt_ideal(I: Ideal, J: Ideal, budget: int | None = None) -> Ideal:
    """I : J^infinity = intersection of I : g^infinity over the generators g of J."""
    if I.ring != J.ring:
        raise ValueError("saturation needs a common ring")
    ring = I.ring
    result: Ideal | None = None
    for g in J.gens:
        if g.is_zero():
            continue
        s = saturate(I, g, budget)
        if s.is_unit_ideal():
            continue
        if s.is_zero_ideal():
            return Ideal(ring, ())
        result = s if result is None else ideal_intersect(result, s, budget)
        if result.is_zero_ideal():
            return result
    if result is None:
        # every factor was the unit ideal (or J had no nonzero generators)
        return Ideal(ring, (ring.one,))
    return result


def radical_member(f: Polynomial, I: Ideal, budget: int | None = None) -> bool:
    """Rabinowitsch test: f lies in the radical of I."""
    ring = I.ring
    if f.ring != ring:
        raise ValueError("radical membership needs a common ring")
    if f.is_zero():
        return True
    big_I, t, tname = _extend_with_aux(I)
    ident = list(range(ring.nvars))
    f_big = f.map_to(big_I.ring, ident)
    gens = big_I.gens + (big_I.ring.one - t * f_big,)
    G = buchberger_reduced(Ideal(big_I.ring, gens), budget)
    return G.is_unit_ideal()


def radical_contains(I: Ideal, J: Ideal, budget: int | None = None) -> bool:
    """Every generator of J lies in the radical of I."""
    return all(radical_member(g, I, budget) for g in J.gens)


def radical_equal(I: Ideal, J: Ideal, budget: int | None = None) -> bool:
    """The two ideals cut out the same variety (mutual radical membership)."""
    return radical_contains(I, J, budget) and radical_contains(J, I, budget)


def ideal_dimension(I: Ideal, budget: int | None = None) -> int:
    """Krull dimension of R/I; -1 for the unit ideal.

    Computed combinatorially from the leading-monomial ideal of a reduced
    Groebner basis: the dimension is the largest size of a variable subset S
    such that no leading monomial is supported inside S.
    """
    G = buchberger_reduced(I, budget)
    if G.is_unit_ideal():
        return -1
    n = I.ring.nvars
    if not G.gens:
        return n
    supports = [g.support() for g in G.gens]
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            sset = frozenset(S)
            if not any(supp <= sset for supp in supports):
                return size
    return -1
