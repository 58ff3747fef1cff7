import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphpoly.errors import CeilingError, Graph6Error
from graphpoly.graph import (
    Graph,
    all_labelled_graphs,
    automorphism_count,
    canonical_form,
    complement,
    complete_graph,
    contains_induced,
    count_subgraph_copies,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_all_graphs,
    graph_from_edges,
    has_subgraph,
    induced,
    is_isomorphic,
    line_graph,
    parse_graph6,
    path_graph,
    random_gnp,
    star_graph,
    write_graph6,
)

from conftest import graphs

K2, K3, E2 = complete_graph(2), complete_graph(3), empty_graph(2)
P3 = path_graph(3)
C4 = cycle_graph(4)
CLAW = star_graph(3)


class TestConstruction:
    def test_path_from_edges(self):
        g = graph_from_edges(3, [(0, 1), (1, 2)])
        assert g == P3
        assert g.edges() == [(0, 1), (1, 2)]

    def test_edgeless_and_triangle(self):
        assert graph_from_edges(2, []) == E2
        assert graph_from_edges(3, [(0, 1), (1, 2), (0, 2)]) == K3

    def test_rejects_loops_and_bad_vertices(self):
        with pytest.raises(ValueError):
            graph_from_edges(3, [(1, 1)])
        with pytest.raises(ValueError):
            graph_from_edges(3, [(0, 3)])

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))

    def test_order_ceiling(self):
        assert empty_graph(64).n == 64
        with pytest.raises(CeilingError):
            empty_graph(65)

    def test_duplicate_edges_collapse(self):
        assert graph_from_edges(2, [(0, 1), (1, 0)]).edge_count() == 1


class TestDerivedGraphs:
    def test_induced(self):
        assert induced(K3, 0b011) == K2
        assert induced(P3, {0, 2}) == E2
        assert induced(C4, 0).n == 0

    def test_complement_examples(self):
        assert complement(K3) == empty_graph(3)
        assert complement(P3) == graph_from_edges(3, [(0, 2)])
        assert complement(E2) == K2

    @given(graphs())
    def test_complement_involution(self, g):
        assert complement(complement(g)) == g

    def test_line_graph_examples(self):
        assert is_isomorphic(line_graph(C4), C4)
        assert line_graph(P3) == K2
        assert is_isomorphic(line_graph(K3), K3)

    @given(graphs(max_n=6))
    def test_line_graph_order_and_degrees(self, g):
        lg = line_graph(g)
        assert lg.n == g.edge_count()
        # an edge uv meets deg(u) + deg(v) - 2 others
        for k, (u, v) in enumerate(g.edges()):
            assert lg.degree(k) == g.degree(u) + g.degree(v) - 2

    def test_disjoint_union(self):
        g = disjoint_union(K2, complete_graph(1))
        assert g.n == 3 and g.edges() == [(0, 1)]


class TestGraph6:
    def test_known_strings(self):
        assert write_graph6(K3) == "Bw"
        assert write_graph6(P3) == "Bg"
        assert write_graph6(empty_graph(0)) == "?"
        assert parse_graph6("Bw") == K3

    @given(graphs(max_n=12))
    def test_round_trip(self, g):
        assert parse_graph6(write_graph6(g)) == g

    def test_long_header_round_trip(self):
        for n in (62, 63, 64):
            g = random_gnp(n, Fraction(1, 3), 5, 0)
            s = write_graph6(g)
            assert (s[0] == "~") == (n >= 63)
            assert parse_graph6(s) == g

    def test_header_prefix(self):
        assert parse_graph6(">>graph6<<Bw\n") == K3

    @pytest.mark.parametrize("bad", ["", "B!", "Bww", "B", "Bx"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(Graph6Error):
            parse_graph6(bad)

    def test_bytes_accepted(self):
        assert parse_graph6(b"Bw") == K3


class TestRandom:
    def test_extreme_p(self):
        assert random_gnp(6, 0, 1, 0) == empty_graph(6)
        assert random_gnp(6, 1, 1, 0) == complete_graph(6)

    def test_deterministic(self):
        assert random_gnp(20, Fraction(1, 2), 7, 3) == random_gnp(20, Fraction(1, 2), 7, 3)
        assert random_gnp(20, Fraction(1, 2), 7, 3) != random_gnp(20, Fraction(1, 2), 7, 4)

    def test_mean_edge_count(self):
        counts = [random_gnp(20, Fraction(1, 2), 11, i).edge_count() for i in range(1000)]
        mean = sum(counts) / len(counts)
        se = math.sqrt(190 * 0.25 / len(counts))
        assert abs(mean - 95) <= 3 * se

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            random_gnp(4, Fraction(3, 2), 0, 0)


class TestIsomorphism:
    def test_canonical_examples(self):
        relabelled = P3.relabel([2, 0, 1])
        assert canonical_form(relabelled) == canonical_form(P3)
        assert canonical_form(P3) != canonical_form(K3)

    def test_eleven_classes_on_four_vertices(self):
        assert len({canonical_form(g) for g in all_labelled_graphs(4)}) == 11

    @settings(max_examples=200)
    @given(graphs(max_n=8), st.data())
    def test_canonical_form_permutation_invariant(self, g, data):
        perm = data.draw(st.permutations(list(range(g.n))))
        assert canonical_form(g.relabel(perm)) == canonical_form(g)

    @settings(max_examples=60)
    @given(graphs(max_n=6))
    def test_canonical_form_is_minimum_over_permutations(self, g):
        # brute-force definition: min over all n! relabellings
        best = min(write_graph6(g.relabel(p)).encode() for p in itertools.permutations(range(g.n)))
        assert canonical_form(g) == best

    def test_ceiling(self):
        with pytest.raises(CeilingError):
            canonical_form(empty_graph(11))

    def test_automorphisms(self):
        assert automorphism_count(P3) == 2
        assert automorphism_count(K3) == 6
        assert automorphism_count(C4) == 8
        assert automorphism_count(empty_graph(0)) == 1

    @settings(max_examples=60)
    @given(graphs(max_n=6))
    def test_automorphisms_by_brute_force(self, g):
        brute = sum(g.relabel(p) == g for p in itertools.permutations(range(g.n)))
        assert automorphism_count(g) == brute


class TestSubgraphs:
    def test_copy_counts(self):
        assert count_subgraph_copies(K2, P3) == 2
        assert count_subgraph_copies(P3, K3) == 3
        assert count_subgraph_copies(K3, P3) == 0

    @pytest.mark.parametrize("h", [K2, P3, K3], ids=["K2", "P3", "K3"])
    def test_complete_host_closed_form(self, h):
        for n in range(h.n, 8):
            expected = math.comb(n, h.n) * math.factorial(h.n) // automorphism_count(h)
            assert count_subgraph_copies(h, complete_graph(n)) == expected

    def test_induced_examples(self):
        assert contains_induced(C4, P3)
        assert not contains_induced(K3, P3)
        assert contains_induced(CLAW, P3)

    @settings(max_examples=150)
    @given(graphs(max_n=6), graphs(min_n=1, max_n=4))
    def test_contains_induced_matches_subset_scan(self, g, h):
        brute = any(
            is_isomorphic(induced(g, set(c)), h) for c in itertools.combinations(range(g.n), h.n)
        )
        assert contains_induced(g, h) == brute

    @given(graphs(max_n=6), graphs(min_n=1, max_n=4))
    def test_has_subgraph_agrees_with_copy_count(self, g, h):
        assert has_subgraph(g, h) == (count_subgraph_copies(h, g) > 0)


class TestEnumeration:
    def test_class_counts(self):
        assert [len(list(enumerate_all_graphs(n))) for n in range(8)] == [1, 1, 2, 4, 11, 34, 156, 1044]

    def test_classes_pairwise_non_isomorphic(self):
        classes = list(enumerate_all_graphs(5))
        assert len({canonical_form(g) for g in classes}) == len(classes)

    def test_every_labelled_graph_is_covered(self):
        forms = {canonical_form(g) for g in enumerate_all_graphs(5)}
        assert {canonical_form(g) for g in all_labelled_graphs(5)} == forms

    def test_ceiling(self):
        with pytest.raises(CeilingError):
            list(enumerate_all_graphs(8))
