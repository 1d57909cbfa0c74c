import itertools

import pytest

from grassvar.errors import MinorLimitError
from grassvar.fp import PrimeField
from grassvar.modules import (
    direct_sum,
    dual,
    is_free_over_line,
    quotient_by_linear_forms,
    regular_module,
    zero_module,
)
from grassvar.homology import syzygy_step
from grassvar.poly import ideal, radical_contains, radical_equal
from grassvar.rankvariety import (
    coordinate_ring,
    pair_variety_ideal,
    point_in_rank_variety,
    rank_variety_ideal,
    rational_points,
)

F2 = PrimeField(2)
F3 = PrimeField(3)


def test_frozen_ideals_p2_c2(catalog):
    cat = catalog[(2, 2)]
    expect = {
        "k": "ideal(0)",
        "kE": "ideal(a1^2, a1*a2, a2^2)",
        "R/x1": "ideal(a2)",
        "R/x2": "ideal(a1)",
        "R/(x1+x2)": "ideal(a1 + a2)",
        "R/x1+R/x2": "ideal(a1*a2)",
        "Om(k)": "ideal(0)",
        "dual(R/x1)": "ideal(a2)",
    }
    for name, M in cat.items():
        assert str(rank_variety_ideal(M).gb) == expect[name], name


def test_frozen_ideals_p3_c2(catalog):
    cat = catalog[(3, 2)]
    assert str(rank_variety_ideal(cat["R/x1"]).gb) == "ideal(a2^2)"
    assert str(rank_variety_ideal(cat["R/(x1+x2)"]).gb) == "ideal(a1^2 + a1*a2 + a2^2)"
    assert str(rank_variety_ideal(cat["R/x1+R/x2"]).gb) == "ideal(a1^2*a2^2)"
    kE = rank_variety_ideal(cat["kE"])
    # the nilpotent origin, cut out by all degree-6 monomials
    assert str(kE.gb) == (
        "ideal(a1^6, a1^5*a2, a1^4*a2^2, a1^3*a2^3, a1^2*a2^4, a1*a2^5, a2^6)"
    )


def test_rational_points_match_freeness_test(catalog):
    # a point lies in the variety exactly when the module fails to be free
    # over the corresponding cyclic shifted subalgebra
    for (p, c), cat in catalog.items():
        field = PrimeField(p)
        for name, M in cat.items():
            V = rank_variety_ideal(M)
            expected = []
            for a in itertools.product(range(p), repeat=c):
                if all(v == 0 for v in a):
                    continue
                lead = next(i for i, v in enumerate(a) if v)
                if a[lead] != 1:
                    continue
                if not is_free_over_line(M, a):
                    expected.append(a)
            assert rational_points(V) == sorted(expected), (p, c, name)


def test_point_membership_respects_scaling(catalog):
    M = catalog[(3, 2)]["R/(x1+x2)"]
    V = rank_variety_ideal(M)
    assert point_in_rank_variety(V, (1, 1))
    assert point_in_rank_variety(V, (2, 2))
    assert point_in_rank_variety(V, (0, 0))
    assert not point_in_rank_variety(V, (1, 0))
    with pytest.raises(ValueError):
        point_in_rank_variety(V, (1, 1, 1))


def test_variety_of_free_module_is_origin():
    for field in (F2, F3):
        V = rank_variety_ideal(regular_module(field, 2))
        assert V.is_empty() is False
        assert rational_points(V) == []
        vars_ideal = ideal(V.ring, [V.ring.var(i) for i in range(2)])
        assert radical_equal(V.gb, vars_ideal)


def test_variety_of_zero_module_is_empty():
    V = rank_variety_ideal(zero_module(F2, 2))
    assert V.is_empty()
    assert rational_points(V) == []


def test_dimension_not_divisible_by_p_gives_whole_space():
    # a module of k-dimension coprime to p can never be free on a line, so
    # every nonzero point is in the variety and the ideal is zero
    M = quotient_by_linear_forms(F2, 2, [(1, 0)])
    N = direct_sum(M, quotient_by_linear_forms(F2, 2, [(1, 0), (0, 1)]))
    assert N.n == 3
    V = rank_variety_ideal(N)
    assert V.is_full()
    assert str(V.gb) == "ideal(0)"


def test_pair_variety_is_intersection(catalog):
    for (p, c) in [(2, 2), (3, 2)]:
        cat = catalog[(p, c)]
        names = ["R/x1", "R/x2", "R/(x1+x2)", "R/x1+R/x2", "k"]
        for a, b in itertools.combinations(names, 2):
            M, N = cat[a], cat[b]
            V = pair_variety_ideal(M, N)
            pm = set(rational_points(rank_variety_ideal(M)))
            pn = set(rational_points(rank_variety_ideal(N)))
            assert set(rational_points(V)) == pm & pn, (p, c, a, b)


def test_pair_variety_with_self_and_symmetry(catalog):
    cat = catalog[(2, 2)]
    M, N = cat["R/x1"], cat["R/x1+R/x2"]
    assert str(pair_variety_ideal(M, M).gb) == str(rank_variety_ideal(M).gb)
    assert str(pair_variety_ideal(M, N).gb) == str(pair_variety_ideal(N, M).gb)
    # pairing against k imposes no extra condition
    assert radical_equal(pair_variety_ideal(M, cat["k"]).gb, rank_variety_ideal(M).gb)


def test_direct_sum_is_union(catalog):
    for (p, c) in [(2, 2), (3, 2)]:
        cat = catalog[(p, c)]
        M, N = cat["R/x1"], cat["R/x2"]
        V_sum = rank_variety_ideal(direct_sum(M, N))
        from grassvar.poly import ideal_intersect

        both = ideal_intersect(rank_variety_ideal(M).gb, rank_variety_ideal(N).gb)
        assert radical_equal(V_sum.gb, both)


def test_syzygy_invariance(catalog):
    for (p, c) in [(2, 2), (3, 2)]:
        cat = catalog[(p, c)]
        for name in ("R/x1", "R/(x1+x2)"):
            M = cat[name]
            omega = syzygy_step(M)[1]
            assert radical_equal(
                rank_variety_ideal(M).gb, rank_variety_ideal(omega).gb
            ), (p, c, name)


def test_dual_invariance(catalog):
    for (p, c), cat in catalog.items():
        for name in ("R/x1", "R/x1+R/x2", "kE"):
            M = cat[name]
            assert radical_equal(
                rank_variety_ideal(M).gb, rank_variety_ideal(dual(M)).gb
            ), (p, c, name)


def test_three_variable_line_quotient(catalog):
    M = catalog[(2, 3)]["R/(x1+x2)"]
    V = rank_variety_ideal(M)
    ring = V.ring
    plane = ideal(ring, [ring.var(0) + ring.var(1), ring.var(2)])
    assert radical_equal(V.gb, plane)
    assert rational_points(V) == [(1, 1, 0)]


def test_coordinate_ring_shape():
    ring = coordinate_ring(F3, 4)
    assert ring.names == ("a1", "a2", "a3", "a4")
    assert ring.field.p == 3


def test_pair_variety_rejects_mismatched_contexts():
    M2 = quotient_by_linear_forms(F2, 2, [(1, 0)])
    M3 = quotient_by_linear_forms(F3, 2, [(1, 0)])
    Mc = quotient_by_linear_forms(F2, 3, [(1, 0, 0)])
    with pytest.raises(ValueError):
        pair_variety_ideal(M2, M3)
    with pytest.raises(ValueError):
        pair_variety_ideal(M2, Mc)


def test_minor_limits_enforced():
    with pytest.raises(MinorLimitError):
        rank_variety_ideal(regular_module(F2, 4))


def test_ideal_radical_containment_order_one(catalog):
    # V(M ⊕ N) contains both factors, so its ideal sits inside each factor ideal
    cat = catalog[(2, 3)]
    V_sum = rank_variety_ideal(cat["R/x1+R/x2"])
    for name in ("R/x1", "R/x2"):
        V = rank_variety_ideal(cat[name])
        assert radical_contains(V.gb, V_sum.gb)
