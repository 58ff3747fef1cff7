import math
from fractions import Fraction

import pytest

from graphpoly.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    is_isomorphic,
    path_graph,
    star_graph,
)
from graphpoly.randommodel import (
    brute_expected_count,
    expected_subgraph_count,
    half_set_union_bound,
    jlr_bound,
    nonisomorphic_edge_subgraphs,
)

K2, P3, K3 = complete_graph(2), path_graph(3), complete_graph(3)
HALF = Fraction(1, 2)


def classes(h):
    return [(e.representative, e.copies_in_h) for e in nonisomorphic_edge_subgraphs(h)]


class TestClasses:
    def test_k2(self):
        (entry,) = nonisomorphic_edge_subgraphs(K2)
        assert is_isomorphic(entry.representative, K2)
        assert (entry.copies_in_h, entry.aut, entry.edge_count) == (1, 2, 1)

    def test_p3(self):
        got = classes(P3)
        assert len(got) == 2
        assert is_isomorphic(got[0][0], K2) and got[0][1] == 2
        assert is_isomorphic(got[1][0], P3) and got[1][1] == 1

    def test_k3(self):
        got = classes(K3)
        assert [(g.n, g.edge_count(), c) for g, c in got] == [(2, 1, 3), (3, 2, 3), (3, 3, 1)]

    @pytest.mark.parametrize("h", [K3, cycle_graph(4), star_graph(3), complete_graph(4)], ids=str)
    def test_copy_conservation(self, h):
        # every nonempty edge subset lands in exactly one class
        assert sum(c for _, c in classes(h)) == 2 ** h.edge_count() - 1

    def test_isolated_vertices_stripped(self):
        got = classes(disjoint_union(K2, complete_graph(1)))
        assert len(got) == 1 and got[0][0].n == 2

    def test_representatives_distinct(self):
        reps = [g for g, _ in classes(complete_graph(4))]
        assert all(not is_isomorphic(a, b) for i, a in enumerate(reps) for b in reps[i + 1:])
        assert all(g.edge_count() > 0 for g in reps)


class TestExpectation:
    def test_examples(self):
        assert expected_subgraph_count(P3, 3, HALF) == Fraction(3, 4)
        assert expected_subgraph_count(K3, 3, 1) == 1
        for n in range(2, 9):
            assert expected_subgraph_count(K2, n, Fraction(1, 3)) == Fraction(math.comb(n, 2), 3)

    @pytest.mark.parametrize(
        "h, hosts",
        [(K2, range(2, 5)), (P3, range(3, 5)), (K3, range(3, 5)), (disjoint_union(K2, complete_graph(1)), range(3, 5))],
        ids=["K2", "P3", "K3", "K2+K1"],
    )
    def test_matches_brute_force(self, h, hosts):
        for n in hosts:
            assert expected_subgraph_count(h, n, HALF) == brute_expected_count(h, n, HALF)

    def test_small_host_rejected(self):
        with pytest.raises(ValueError):
            expected_subgraph_count(K3, 2, HALF)


class TestJlr:
    def test_k2_n2(self):
        b = jlr_bound(K2, 2, HALF)
        assert b.exponent_sum == 2 and b.log2_probability_bound == Fraction(-1, 2)
        assert Fraction(1, 2) <= b.probability_bound()

    def test_k2_closed_form(self):
        for n in range(2, 12):
            b = jlr_bound(K2, n, HALF)
            assert b.exponent_sum == Fraction(2, math.comb(n, 2))
            assert b.log2_probability_bound == Fraction(-math.comb(n, 2), 2)

    @pytest.mark.parametrize("h", [K2, P3, K3], ids=["K2", "P3", "K3"])
    def test_tightens_with_n(self, h):
        bounds = [jlr_bound(h, n, HALF).log2_probability_bound for n in range(h.n, 20)]
        assert all(a > b for a, b in zip(bounds, bounds[1:]))
        assert jlr_bound(K2, 10, HALF).log2_probability_bound < jlr_bound(K2, 5, HALF).log2_probability_bound

    def test_bound_dominates_exact_probability(self):
        # P(no edge in G(n, 1/2)) = 2^-C(n,2)
        for n in range(2, 8):
            assert jlr_bound(K2, n, HALF).log2_probability_bound >= -math.comb(n, 2)

    def test_domain(self):
        with pytest.raises(ValueError):
            jlr_bound(K2, 3, 1)
        with pytest.raises(ValueError):
            jlr_bound(empty_graph(2), 3, HALF)


class TestUnionBound:
    def test_k2_n4(self):
        u = half_set_union_bound(K2, 4, HALF)
        assert (u.k, u.multiplier, u.log2_factor) == (2, 6, Fraction(-1, 2))
        assert float(u) == pytest.approx(6 / math.sqrt(2))
        assert not u.less_than_one()

    def test_p3_is_vacuous_at_twenty(self):
        u = half_set_union_bound(P3, 20, HALF)
        assert u.log2_factor == Fraction(-90, 17)
        assert not u.less_than_one()
        assert u.log2() == pytest.approx(12.2011, abs=1e-3)

    def test_p3_eventually_below_one(self):
        assert not half_set_union_bound(P3, 62, HALF).less_than_one()
        assert all(half_set_union_bound(P3, n, HALF).less_than_one() for n in range(63, 81))

    def test_p3_shape_in_n(self):
        low = [half_set_union_bound(P3, n, HALF).log2() for n in range(10, 25)]
        assert low[-1] > low[0]
        assert any(a < b for a, b in zip(low, low[1:]))
        high = [half_set_union_bound(P3, n, HALF).log2() for n in range(34, 91, 2)]
        assert all(a >= b for a, b in zip(high, high[1:]))

    def test_exact_comparison_matches_float(self):
        for n in range(6, 80):
            u = half_set_union_bound(P3, n, HALF)
            if abs(u.log2()) > 1e-6:
                assert u.less_than_one() == (u.log2() < 0)

    def test_too_small(self):
        with pytest.raises(ValueError):
            half_set_union_bound(K3, 4, HALF)
