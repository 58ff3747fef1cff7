"""Labelled simple graphs on at most 64 vertices, stored as adjacency bitsets.

A vertex set is a plain ``int`` bitmask (bit ``v`` set iff ``v`` is a member).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._backend import kernels
from .errors import CeilingError, Graph6Error

MAX_VERTICES = 64
MAX_CANONICAL = 10
MAX_ENUMERATE = 7

VertexSet = int


def popcount(x: int) -> int:
    return bin(x).count("1")


def members(s: VertexSet) -> list[int]:
    """Vertices of a bitmask in increasing order."""
    out = []
    while s:
        low = s & -s
        out.append(low.bit_length() - 1)
        s ^= low
    return out


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[i]`` is the neighbourhood bitmask of i."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CeilingError(f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("row count must equal n")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full or (r >> i) & 1:
                raise ValueError(f"row {i} has a loop or an out-of-range bit")
            for j in members(r):
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in members(self.rows[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is the old vertex ``perm[i]``."""
        pos = {old: new for new, old in enumerate(perm)}
        rows = [0] * self.n
        for new, old in enumerate(perm):
            rows[new] = vertex_set(pos[u] for u in members(self.rows[old]))
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __str__(self) -> str:
        return write_graph6(self)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise CeilingError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# small named graphs used across the toolkit and tests

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = tuple(r << g.n for r in h.rows)
    return Graph(g.n + h.n, g.rows + shifted)


# ---------------------------------------------------------------------------
# derived graphs
# ---------------------------------------------------------------------------

def induced(g: Graph, s: VertexSet | Iterable[int]) -> Graph:
    """G[s], relabelled 0..|s|-1 preserving vertex order."""
    if not isinstance(s, int):
        s = vertex_set(s)
    if s < 0 or s & ~g.full:
        raise ValueError("vertex set not contained in V(g)")
    verts = members(s)
    pos = {v: i for i, v in enumerate(verts)}
    rows = tuple(vertex_set(pos[u] for u in members(g.rows[v] & s)) for v in verts)
    return Graph(len(verts), rows)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.rows)))


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    return graph_from_edges(
        len(edges),
        [(a, b) for a, b in combinations(range(len(edges)), 2) if set(edges[a]) & set(edges[b])],
    )


# ---------------------------------------------------------------------------
# random graphs
# ---------------------------------------------------------------------------

def _as_fraction(p) -> Fraction:
    return p if isinstance(p, Fraction) else Fraction(str(p)) if isinstance(p, float) else Fraction(p)


def random_gnp(n: int, p, seed: int, sample_index: int) -> Graph:
    """Sample G(n, p) as a pure function of ``(n, p, seed, sample_index)``.

    Each potential edge, in column-major pair order, consumes one raw 64-bit
    PCG64 draw ``u`` and is present iff ``u < floor(p * 2**64)``.
    """
    p = _as_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if not 0 <= n <= MAX_VERTICES:
        raise CeilingError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
    threshold = (p.numerator << 64) // p.denominator
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    ss = np.random.SeedSequence([seed & (2**64 - 1), sample_index])
    draws = np.random.PCG64(ss).random_raw(len(pairs)).tolist() if pairs else []
    rows = [0] * n
    for (i, j), u in zip(pairs, draws):
        if u < threshold:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _pair_bits(g: Graph) -> list[int]:
    return [(g.rows[i] >> j) & 1 for j in range(1, g.n) for i in range(j)]


def write_graph6(g: Graph) -> str:
    if g.n <= 62:
        head = [g.n + 63]
    else:
        head = [126, ((g.n >> 12) & 63) + 63, ((g.n >> 6) & 63) + 63, (g.n & 63) + 63]
    bits = _pair_bits(g)
    bits += [0] * (-len(bits) % 6)
    body = [
        63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)
    ]
    return bytes(head + body).decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string")
    bad = [b for b in data if not 63 <= b <= 126]
    if bad:
        raise Graph6Error(f"byte {bad[0]} outside the printable range 63..126")
    if data[0] < 126:
        n, body = data[0] - 63, data[1:]
    else:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("graph6 orders above 258047 are not supported")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    if n > MAX_VERTICES:
        raise CeilingError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
    npairs = n * (n - 1) // 2
    if len(body) != (npairs + 5) // 6:
        raise Graph6Error(f"expected {(npairs + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    if any(bits[npairs:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# isomorphism machinery
# ---------------------------------------------------------------------------

def canonical_graph(g: Graph) -> Graph:
    """The relabelling of ``g`` whose upper-triangle bit string is minimal."""
    if g.n > MAX_CANONICAL:
        raise CeilingError(f"canonical labelling is limited to n <= {MAX_CANONICAL}")
    return g.relabel(kernels.canonical_perm(g.n, g.rows))


def canonical_form(g: Graph) -> bytes:
    """Minimum over all vertex permutations of the graph6 encoding, as bytes."""
    return write_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_count(g: Graph) -> int:
    """Number of permutations of V(g) preserving adjacency (backtracking)."""
    if g.n > MAX_CANONICAL:
        raise CeilingError(f"automorphism counting is limited to n <= {MAX_CANONICAL}")
    n = g.n
    deg = g.degrees()
    image = [0] * n

    def rec(u: int, used: int) -> int:
        if u == n:
            return 1
        total = 0
        for v in range(n):
            if (used >> v) & 1 or deg[v] != deg[u]:
                continue
            if all(((g.rows[u] >> a) & 1) == ((g.rows[v] >> image[a]) & 1) for a in range(u)):
                image[u] = v
                total += rec(u + 1, used | (1 << v))
        return total

    return rec(0, 0)


def _embedding_order(h: Graph) -> list[int]:
    # high degree first, then neighbours of placed vertices, to prune early
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        linked = [v for v in remaining if h.rows[v] & placed]
        pool = linked or list(remaining)
        v = max(pool, key=lambda x: (h.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def _injective_homs(h: Graph, g: Graph, stop_at_first: bool) -> int:
    """Injective maps V(h) -> V(g) sending edges to edges (not necessarily induced)."""
    if h.n > g.n:
        return 0
    order = _embedding_order(h)
    hdeg = h.degrees()
    gdeg = g.degrees()
    image = [0] * h.n

    def rec(pos: int, used: int) -> int:
        if pos == h.n:
            return 1
        u = order[pos]
        need = [image[a] for a in order[:pos] if (h.rows[u] >> a) & 1]
        total = 0
        for v in range(g.n):
            if (used >> v) & 1 or gdeg[v] < hdeg[u]:
                continue
            if all((g.rows[v] >> w) & 1 for w in need):
                image[u] = v
                total += rec(pos + 1, used | (1 << v))
                if stop_at_first and total:
                    return total
        return total

    return rec(0, 0)


def count_subgraph_copies(h: Graph, g: Graph) -> int:
    """Number of (not necessarily induced) subgraphs of g isomorphic to h."""
    if h.n > g.n:
        return 0
    return _injective_homs(h, g, False) // automorphism_count(h)


def has_subgraph(g: Graph, h: Graph) -> bool:
    """True iff g contains a (not necessarily induced) copy of h."""
    return _injective_homs(h, g, True) > 0


def contains_induced(g: Graph, h: Graph) -> bool:
    """True iff some vertex subset of g induces a graph isomorphic to h."""
    if h.n > g.n:
        return False
    return kernels.induced_through(g.rows, g.full, -1, h.n, h.rows)


def _labelled_graphs(n: int) -> Iterator[Graph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        yield graph_from_edges(n, [pairs[k] for k in range(len(pairs)) if (code >> k) & 1])


def all_labelled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices (2^C(n,2) of them)."""
    if n > MAX_ENUMERATE:
        raise CeilingError(f"labelled enumeration is limited to n <= {MAX_ENUMERATE}")
    return _labelled_graphs(n)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (empty_graph(0),)
    seen: dict[bytes, Graph] = {}
    for base in _classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(base.rows) + [nbrs]
            for u in members(nbrs):
                rows[u] |= 1 << (n - 1)
            g = Graph(n, tuple(rows))
            can = canonical_graph(g)
            key = write_graph6(can).encode("ascii")
            if key not in seen:
                seen[key] = can
    return tuple(seen[k] for k in sorted(seen))


def enumerate_all_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of order n.

    Built by adding a vertex with every possible neighbourhood to each class
    of order n-1 and deduplicating by canonical form; sorted by that form.
    """
    if not 0 <= n <= MAX_ENUMERATE:
        raise CeilingError(f"class enumeration is limited to n <= {MAX_ENUMERATE}")
    return iter(_classes(n))


def binomial(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0
