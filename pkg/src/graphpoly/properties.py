"""Graph properties and augmented graph properties.

Property strings accepted by :func:`parse_property`::

    forest | edgeless | clique | cluster    builtin hereditary properties
    forb:<file.g6>                         forbidden induced subgraphs, one graph6 per line
    co:<spec>                              complement of a hereditary spec
    dom | zf                               dominating sets, zero forcing sets

The null graph belongs to every hereditary property.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path

from . import _pykernels as _k
from .errors import CeilingError, PropertyParseError
from .graph import (
    Graph,
    VertexSet,
    canonical_form,
    contains_induced,
    graph_from_edges,
    members,
    parse_graph6,
    write_graph6,
)

BUILTINS = ("edgeless", "clique", "forest", "cluster")
AUGMENTED = ("dominating", "zero_forcing")

_BUILTIN_KIND = {"edgeless": _k.EDGELESS, "clique": _k.CLIQUE, "forest": _k.FOREST, "cluster": _k.CLUSTER}
_AUGMENTED_KIND = {"dominating": _k.DOM, "zero_forcing": _k.ZF}
_ALIASES = {"dom": "dominating", "zf": "zero_forcing"}


@dataclass(frozen=True)
class PropertySpec:
    """One of: builtin, forbidden family, complement of a hereditary spec, augmented."""

    kind: str
    name: str = ""
    family: tuple[Graph, ...] = ()
    inner: "PropertySpec | None" = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind == "builtin" and self.name not in BUILTINS:
            raise PropertyParseError(f"unknown builtin property {self.name!r}")
        if self.kind == "augmented" and self.name not in AUGMENTED:
            raise PropertyParseError(f"unknown augmented property {self.name!r}")
        if self.kind == "complement" and (self.inner is None or not self.inner.is_hereditary):
            raise PropertyParseError("co: only wraps hereditary properties")
        if self.kind == "forbidden":
            if any(h.n < 1 for h in self.family):
                raise PropertyParseError("forbidden graphs need at least one vertex")
            forms = [canonical_form(h) for h in self.family]
            if len(set(forms)) != len(forms):
                raise PropertyParseError("forbidden family has isomorphic members")
        if self.kind not in ("builtin", "forbidden", "complement", "augmented"):
            raise PropertyParseError(f"unknown property kind {self.kind!r}")

    @property
    def is_hereditary(self) -> bool:
        return self.kind in ("builtin", "forbidden")

    @property
    def is_cohereditary(self) -> bool:
        return self.kind == "complement"

    @property
    def is_augmented(self) -> bool:
        return self.kind == "augmented"

    @property
    def min_order(self) -> int | None:
        """Order of the smallest forbidden graph (None for non-family specs)."""
        if self.kind != "forbidden" or not self.family:
            return None
        return min(h.n for h in self.family)

    def describe(self) -> str:
        if self.label:
            return self.label
        if self.kind in ("builtin", "augmented"):
            return {"dominating": "dom", "zero_forcing": "zf"}.get(self.name, self.name)
        if self.kind == "forbidden":
            return "forb:[" + ",".join(write_graph6(h) for h in self.family) + "]"
        return "co:" + self.inner.describe()


def builtin(name: str) -> PropertySpec:
    return PropertySpec("builtin", name=name)


def forbidden(family, label: str = "") -> PropertySpec:
    return PropertySpec("forbidden", family=tuple(family), label=label)


def complement_of(inner: PropertySpec) -> PropertySpec:
    return PropertySpec("complement", inner=inner)


def augmented(name: str) -> PropertySpec:
    return PropertySpec("augmented", name=_ALIASES.get(name, name))


def parse_property(text: str) -> PropertySpec:
    text = text.strip()
    if text in BUILTINS:
        return builtin(text)
    if text in _ALIASES or text in AUGMENTED:
        return augmented(text)
    if text.startswith("co:"):
        inner = parse_property(text[3:])
        if not inner.is_hereditary:
            raise PropertyParseError(f"co: needs a hereditary property, got {text[3:]!r}")
        return complement_of(inner)
    if text.startswith("forb:"):
        path = Path(text[5:])
        try:
            lines = path.read_text().split()
        except OSError as exc:
            raise PropertyParseError(f"cannot read forbidden family {path}: {exc}") from None
        return forbidden([parse_graph6(line) for line in lines], label=text)
    raise PropertyParseError(f"unknown property {text!r}")


def hereditary_kernel_args(spec: PropertySpec) -> tuple[int, list]:
    if spec.kind == "builtin":
        return _BUILTIN_KIND[spec.name], []
    if spec.kind == "forbidden":
        return _k.FORBIDDEN, [(h.n, list(h.rows)) for h in spec.family]
    raise ValueError(f"{spec.describe()} is not hereditary")


def augmented_kernel_kind(spec: PropertySpec) -> int:
    return _AUGMENTED_KIND[spec.name]


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def _is_forest(g: Graph) -> bool:
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _is_cluster(g: Graph) -> bool:
    for v in range(g.n):
        closed = g.rows[v] | (1 << v)
        if any(g.rows[u] | (1 << u) != closed for u in members(g.rows[v])):
            return False
    return True


def is_member(spec: PropertySpec, g: Graph) -> bool:
    """Membership of g in a (co-)hereditary property."""
    if spec.kind == "augmented":
        raise ValueError("augmented properties need a distinguished set; use augmented_member")
    if spec.kind == "complement":
        return not is_member(spec.inner, g)
    if spec.kind == "forbidden":
        return not any(contains_induced(g, h) for h in spec.family)
    if spec.name == "edgeless":
        return g.edge_count() == 0
    if spec.name == "clique":
        return g.edge_count() == g.n * (g.n - 1) // 2
    if spec.name == "forest":
        return _is_forest(g)
    return _is_cluster(g)


def zero_forcing_closure(g: Graph, s: VertexSet) -> VertexSet:
    """Fixed point of: a filled vertex with exactly one unfilled neighbour fills it."""
    filled = s
    changed = True
    while changed:
        changed = False
        for v in members(filled):
            open_ = g.rows[v] & ~filled
            if open_ and open_ & (open_ - 1) == 0:
                filled |= open_
                changed = True
    return filled


def augmented_member(name: str, g: Graph, s: VertexSet) -> bool:
    name = _ALIASES.get(name, name)
    if s < 0 or s & ~g.full:
        raise ValueError("vertex set not contained in V(g)")
    if name == "dominating":
        cov = s
        for v in members(s):
            cov |= g.rows[v]
        return cov == g.full
    if name == "zero_forcing":
        return zero_forcing_closure(g, s) == g.full
    raise PropertyParseError(f"unknown augmented property {name!r}")


def is_zero_forcing_by_ordering(g: Graph, s: VertexSet) -> bool:
    """Ordering definition: the outside vertices can be listed v_1..v_k so that
    each v_i has a neighbour in S + {v_1..v_{i-1}} adjacent to no later v_j.

    Exhaustive over orderings; only for cross-checking small graphs.
    """
    outside = members(g.full & ~s)
    for order in itertools.permutations(outside):
        ok = True
        for i, v in enumerate(order):
            earlier = s | sum(1 << u for u in order[:i])
            later = sum(1 << u for u in order[i + 1:])
            if not any(g.rows[w] & later == 0 for w in members(g.rows[v] & earlier)):
                ok = False
                break
        if ok:
            return True
    return False


def is_upward_monotone_witness(name: str, g: Graph) -> bool:
    """Check on g that every superset of a member set is a member."""
    if g.n > 16:
        raise CeilingError("monotonicity check is limited to n <= 16")
    member = [augmented_member(name, g, s) for s in range(1 << g.n)]
    for s in range(1 << g.n):
        if member[s]:
            for v in range(g.n):
                if not member[s | (1 << v)]:
                    return False
    return True


def is_nontrivial(spec: PropertySpec) -> bool:
    """Some graph is in the property and some graph is not."""
    if spec.kind == "builtin" or spec.kind == "augmented":
        return True
    if spec.kind == "forbidden":
        return bool(spec.family)
    return is_nontrivial(spec.inner)


P3 = graph_from_edges(3, [(0, 1), (1, 2)])
K2_K1 = graph_from_edges(3, [(0, 1)])


def satisfies_real_rooted_hypothesis(spec: PropertySpec) -> bool:
    """Hereditary and containing a graph that is neither a clique nor edgeless.

    Any such graph has an induced P_3 or K_2 + K_1, so by heredity it is
    enough to test those two.
    """
    return spec.is_hereditary and (is_member(spec, P3) or is_member(spec, K2_K1))


__all__ = [
    "PropertySpec",
    "builtin",
    "forbidden",
    "complement_of",
    "augmented",
    "parse_property",
    "is_member",
    "augmented_member",
    "zero_forcing_closure",
    "is_zero_forcing_by_ordering",
    "is_upward_monotone_witness",
    "is_nontrivial",
    "satisfies_real_rooted_hypothesis",
]
