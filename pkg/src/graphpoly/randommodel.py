"""Exact subgraph-count expectations in G(n, p) and the exponential bound on
the probability that a fixed graph H does not appear as a subgraph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import CeilingError
from .graph import (
    Graph,
    automorphism_count,
    canonical_form,
    canonical_graph,
    graph_from_edges,
)


@dataclass(frozen=True)
class SubgraphClassEntry:
    representative: Graph
    copies_in_h: int
    aut: int
    edge_count: int


@dataclass(frozen=True)
class JlrBound:
    """``log2 P(X = 0) <= -1 / exponent_sum``, both kept exact."""

    exponent_sum: Fraction
    log2_probability_bound: Fraction

    def probability_bound(self) -> float:
        return 2.0 ** float(self.log2_probability_bound)


@dataclass(frozen=True)
class UnionBound:
    """``C(n, k) * 2**log2_factor``: probability that some k-set is H-free."""

    k: int
    multiplier: int
    log2_factor: Fraction

    def __float__(self) -> float:
        return math.exp(math.log(self.multiplier) + float(self.log2_factor) * math.log(2))

    def less_than_one(self) -> bool:
        # C * 2^(a/b) < 1  <=>  C^b * 2^a < 1  (b > 0)
        a, b = self.log2_factor.numerator, self.log2_factor.denominator
        lhs = self.multiplier ** b
        return lhs * 2**a < 1 if a >= 0 else lhs < 2 ** (-a)

    def log2(self) -> float:
        return math.log2(self.multiplier) + float(self.log2_factor)


def _spanned(h: Graph, edges: list[tuple[int, int]]) -> Graph:
    """Subgraph formed by the given edges and their endpoints only."""
    verts = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(verts)}
    return graph_from_edges(len(verts), [(pos[u], pos[v]) for u, v in edges])


def nonisomorphic_edge_subgraphs(h: Graph) -> list[SubgraphClassEntry]:
    """Isomorphism classes of subgraphs of h with at least one edge.

    Isolated vertices are discarded, so a class is determined by a nonempty
    edge subset; each class records how many edge subsets realise it.
    """
    if h.n > 6:
        raise CeilingError("subgraph class enumeration is limited to n <= 6")
    edges = h.edges()
    buckets: dict[bytes, list] = {}
    for r in range(1, len(edges) + 1):
        for subset in combinations(edges, r):
            sub = _spanned(h, list(subset))
            key = canonical_form(sub)
            if key in buckets:
                buckets[key][1] += 1
            else:
                buckets[key] = [canonical_graph(sub), 1]
    out = []
    for key in sorted(buckets, key=lambda k: (len(k), k)):
        rep, copies = buckets[key]
        out.append(SubgraphClassEntry(rep, copies, automorphism_count(rep), rep.edge_count()))
    return sorted(out, key=lambda e: (e.representative.n, e.edge_count, canonical_form(e.representative)))


def expected_subgraph_count(h_prime: Graph, n: int, p) -> Fraction:
    """``C(n, v) * v! / aut * p^e`` for the v-vertex, e-edge graph ``h_prime``."""
    p = Fraction(p)
    v = h_prime.n
    if n < v:
        raise ValueError(f"host order {n} smaller than pattern order {v}")
    return Fraction(math.comb(n, v) * math.factorial(v), automorphism_count(h_prime)) * p ** h_prime.edge_count()


def jlr_bound(h: Graph, n: int, p) -> JlrBound:
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError("the bound needs 0 < p < 1")
    if n < h.n:
        raise ValueError(f"host order {n} smaller than pattern order {h.n}")
    total = Fraction(0)
    for entry in nonisomorphic_edge_subgraphs(h):
        total += Fraction(entry.copies_in_h**2) / expected_subgraph_count(entry.representative, n, p)
    if total <= 0:
        raise ValueError("pattern has no edges")
    return JlrBound(total, -1 / total)


def half_set_union_bound(h: Graph, n: int, p) -> UnionBound:
    """Union bound over all ``ceil(n/2)``-sets of the chance one is H-free."""
    k = (n + 1) // 2
    if k < h.n:
        raise ValueError(f"half-set size {k} smaller than pattern order {h.n}")
    b = jlr_bound(h, k, p)
    return UnionBound(k, math.comb(n, k), b.log2_probability_bound)


def brute_expected_count(h_prime: Graph, n: int, p) -> Fraction:
    """Average subgraph-copy count over every labelled n-vertex graph (test oracle)."""
    from .graph import all_labelled_graphs, count_subgraph_copies

    p = Fraction(p)
    pairs = n * (n - 1) // 2
    total = Fraction(0)
    for g in all_labelled_graphs(n):
        e = g.edge_count()
        total += count_subgraph_copies(h_prime, g) * p**e * (1 - p) ** (pairs - e)
    return total
