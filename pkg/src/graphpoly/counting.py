"""Coefficient sequences of generating polynomials and classical graph polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from ._backend import kernels
from .errors import CeilingError
from .graph import Graph, complement, induced, members, popcount, write_graph6
from .poly import ExactPolynomial
from .properties import (
    PropertySpec,
    augmented_kernel_kind,
    augmented_member,
    builtin,
    hereditary_kernel_args,
    is_member,
)

BRUTE_LIMIT = 24
HEREDITARY_LIMIT = 40
CHROMATIC_LIMIT = 10


@dataclass(frozen=True)
class CoefficientSequence:
    """Exact counts ``c_0..c_n`` indexed by subset size (trailing zeros kept)."""

    values: tuple[int, ...]
    property_tag: str = ""
    graph_tag: str = ""

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def polynomial(self) -> ExactPolynomial:
        return ExactPolynomial(self.values)

    def to_csv(self) -> str:
        return "i,c_i\n" + "".join(f"{i},{c}\n" for i, c in enumerate(self.values))


@dataclass(frozen=True)
class PolyStructure:
    g: int
    nabla: int
    alpha: int
    degree: int


def _seq(g: Graph, spec: PropertySpec | str, values) -> CoefficientSequence:
    tag = spec if isinstance(spec, str) else spec.describe()
    return CoefficientSequence(tuple(int(v) for v in values), tag, write_graph6(g))


def _binomials(n: int) -> list[int]:
    return [math.comb(n, i) for i in range(n + 1)]


# ---------------------------------------------------------------------------
# generating polynomials of (augmented) properties
# ---------------------------------------------------------------------------

def coeffs_brute(g: Graph, spec: PropertySpec) -> CoefficientSequence:
    """Count by visiting every subset of V(g)."""
    if g.n > BRUTE_LIMIT:
        raise CeilingError(f"brute-force counting is limited to n <= {BRUTE_LIMIT}")
    if spec.kind == "builtin":
        kind, _ = hereditary_kernel_args(spec)
        return _seq(g, spec, kernels.brute_counts(g.n, g.rows, kind))
    if spec.kind == "augmented":
        return _seq(g, spec, kernels.brute_counts(g.n, g.rows, augmented_kernel_kind(spec)))
    counts = [0] * (g.n + 1)
    for s in range(1 << g.n):
        if is_member(spec, induced(g, s)):
            counts[popcount(s)] += 1
    return _seq(g, spec, counts)


def coeffs_hereditary(g: Graph, spec: PropertySpec) -> CoefficientSequence:
    """Pruned depth-first count for a hereditary property."""
    if not spec.is_hereditary:
        raise ValueError(f"{spec.describe()} is not hereditary")
    if g.n > HEREDITARY_LIMIT:
        raise CeilingError(f"hereditary counting is limited to n <= {HEREDITARY_LIMIT}")
    kind, family = hereditary_kernel_args(spec)
    return _seq(g, spec, kernels.hereditary_counts(g.n, g.rows, kind, family))


def coeffs_cohereditary(g: Graph, spec: PropertySpec) -> CoefficientSequence:
    """``C(n, i)`` minus the hereditary count of the wrapped property."""
    if not spec.is_cohereditary:
        raise ValueError(f"{spec.describe()} is not a complement of a hereditary property")
    inner = coeffs_hereditary(g, spec.inner)
    return _seq(g, spec, (b - c for b, c in zip(_binomials(g.n), inner)))


def coeffs_augmented(g: Graph, spec: PropertySpec) -> CoefficientSequence:
    """Upward-monotone augmented property: ``C(n, i)`` minus the non-member sets.

    The non-member sets are down-closed, so a pruned DFS enumerates them.
    """
    if not spec.is_augmented:
        raise ValueError(f"{spec.describe()} is not augmented")
    if g.n > HEREDITARY_LIMIT:
        raise CeilingError(f"augmented counting is limited to n <= {HEREDITARY_LIMIT}")
    outside = kernels.downset_counts(g.n, g.rows, augmented_kernel_kind(spec))
    return _seq(g, spec, (b - c for b, c in zip(_binomials(g.n), outside)))


def coefficients(g: Graph, spec: PropertySpec) -> CoefficientSequence:
    """Fastest exact route for any spec kind."""
    if spec.is_hereditary:
        return coeffs_hereditary(g, spec)
    if spec.is_cohereditary:
        return coeffs_cohereditary(g, spec)
    return coeffs_augmented(g, spec)


def generating_polynomial(g: Graph, spec: PropertySpec) -> ExactPolynomial:
    return coefficients(g, spec).polynomial()


def augmented_coeffs_python(g: Graph, spec: PropertySpec) -> list[int]:
    """Subset scan through :func:`augmented_member`; an oracle for the kernels."""
    counts = [0] * (g.n + 1)
    for s in range(1 << g.n):
        if augmented_member(spec.name, g, s):
            counts[popcount(s)] += 1
    return counts


# ---------------------------------------------------------------------------
# classical polynomials
# ---------------------------------------------------------------------------

def independence_coeffs(g: Graph) -> CoefficientSequence:
    return coeffs_hereditary(g, builtin("edgeless"))


def clique_coeffs(g: Graph) -> CoefficientSequence:
    return coeffs_hereditary(g, builtin("clique"))


def _delete_vertices(rows: tuple[int, ...], drop: int) -> tuple[int, ...]:
    keep = [v for v in range(len(rows)) if not (drop >> v) & 1]
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        r = 0
        for u in members(rows[v] & ~drop):
            r |= 1 << pos[u]
        out.append(r)
    return tuple(out)


def matching_coeffs(g: Graph) -> CoefficientSequence:
    """Matchings by size via ``M(G) = M(G - e) + x M(G - u - v)``."""
    if g.n > BRUTE_LIMIT:
        raise CeilingError(f"matching polynomial is limited to n <= {BRUTE_LIMIT}")
    memo: dict[tuple[int, ...], list[int]] = {}

    def m(rows: tuple[int, ...]) -> list[int]:
        if rows in memo:
            return memo[rows]
        u = next((v for v, r in enumerate(rows) if r), None)
        if u is None:
            out = [1]
        else:
            v = (rows[u] & -rows[u]).bit_length() - 1
            without = list(rows)
            without[u] &= ~(1 << v)
            without[v] &= ~(1 << u)
            a = m(tuple(without))
            b = m(_delete_vertices(rows, (1 << u) | (1 << v)))
            out = [0] * max(len(a), len(b) + 1)
            for i, c in enumerate(a):
                out[i] += c
            for i, c in enumerate(b):
                out[i + 1] += c
        memo[rows] = out
        return out

    vals = m(g.rows)
    vals = vals + [0] * (g.n // 2 + 1 - len(vals))
    return _seq(g, "matching", vals)


def _falling_factorial(n: int) -> list[int]:
    out = [1]
    for k in range(n):
        # multiply by (x - k)
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] += c
            nxt[i] -= k * c
        out = nxt
    return out


def _components(rows: tuple[int, ...]) -> int:
    seen = 0
    comps = 0
    for s in range(len(rows)):
        if (seen >> s) & 1:
            continue
        comps += 1
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for u in members(frontier):
                nxt |= rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
    return comps


def chromatic_coeffs(g: Graph) -> list[int]:
    """Signed chromatic polynomial coefficients by deletion-contraction.

    Contraction merges parallel edges, so every intermediate graph stays simple.
    """
    if g.n > CHROMATIC_LIMIT:
        raise CeilingError(f"chromatic polynomial is limited to n <= {CHROMATIC_LIMIT}")
    memo: dict[tuple[int, ...], list[int]] = {}

    def chrom(rows: tuple[int, ...]) -> list[int]:
        if rows in memo:
            return memo[rows]
        n = len(rows)
        e = sum(popcount(r) for r in rows) // 2
        if e == n * (n - 1) // 2:
            out = _falling_factorial(n)
        elif e == n - _components(rows):
            # forest with c components: x^c (x - 1)^(n - c)
            c = n - e
            out = [0] * c + [(-1) ** (e - k) * math.comb(e, k) for k in range(e + 1)]
        else:
            u = max(range(n), key=lambda v: popcount(rows[v]))
            v = (rows[u] & -rows[u]).bit_length() - 1
            deleted = list(rows)
            deleted[u] &= ~(1 << v)
            deleted[v] &= ~(1 << u)
            merged = list(deleted)
            merged[u] |= deleted[v]
            for w in members(deleted[v]):
                merged[w] |= 1 << u
            contracted = _delete_vertices(tuple(merged), 1 << v)
            a = chrom(tuple(deleted))
            b = chrom(contracted)
            out = list(a)
            for i, c in enumerate(b):
                out[i] -= c
        memo[rows] = out
        return out

    out = chrom(g.rows)
    return out + [0] * (g.n + 1 - len(out))


def chromatic_by_coloring(g: Graph, k: int) -> int:
    """Proper k-colourings counted by backtracking (test oracle)."""
    colors = [0] * g.n

    def rec(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        for c in range(k):
            if all(colors[u] != c for u in members(g.rows[v]) if u < v):
                colors[v] = c
                total += rec(v + 1)
        return total

    return rec(0)


# ---------------------------------------------------------------------------
# structure of P_A for G not in A
# ---------------------------------------------------------------------------

def structure(g: Graph, spec: PropertySpec, seq: CoefficientSequence | None = None) -> PolyStructure:
    """First failing level ``g``, removal number ``nabla`` and deficiency ``alpha``.

    Read off the coefficient sequence: ``g`` is the first index with
    ``c_i < C(n, i)``, ``n - nabla`` the last nonzero index.
    """
    if not spec.is_hereditary:
        raise ValueError(f"{spec.describe()} is not hereditary")
    if is_member(spec, g):
        raise ValueError("structure is defined only for graphs outside the property")
    seq = seq if seq is not None else coeffs_hereditary(g, spec)
    n = g.n
    binom = _binomials(n)
    first = next(i for i in range(n + 1) if seq[i] < binom[i])
    last = max(i for i in range(n + 1) if seq[i])
    alpha = binom[first] - seq[first]
    if any(seq[i] != binom[i] for i in range(first)) or any(seq[i] for i in range(last + 1, n + 1)):
        raise AssertionError("coefficient sequence does not have the expected prefix/suffix shape")
    return PolyStructure(g=first, nabla=n - last, alpha=alpha, degree=last)


def structure_by_search(g: Graph, spec: PropertySpec) -> tuple[int, int]:
    """``(g, nabla)`` from direct subset searches (test oracle for :func:`structure`)."""
    n = g.n
    by_size = sorted(range(1 << n), key=popcount)
    first = next(popcount(s) for s in by_size if not is_member(spec, induced(g, s)))
    nabla = next(popcount(s) for s in by_size if is_member(spec, induced(g, g.full & ~s)))
    return first, nabla


def clique_via_complement(g: Graph) -> CoefficientSequence:
    return independence_coeffs(complement(g))
