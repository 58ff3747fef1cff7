"""Pure-Python enumeration kernels.

Same call signatures as the compiled ``_ckernels`` module. Graphs are passed
as ``(n, rows)`` where ``rows[i]`` is the neighbourhood bitmask of vertex i.
All counts are returned as lists of Python ints indexed by subset size.
"""

from __future__ import annotations

EDGELESS = 0
CLIQUE = 1
FOREST = 2
CLUSTER = 3
FORBIDDEN = 4
DOM = 10
ZF = 11

BACKEND = "python"


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _full(n: int) -> int:
    return (1 << n) - 1


def _component(rows, mask: int, start: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        nxt &= mask & ~comp
        comp |= nxt
        frontier = nxt
    return comp


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------

def canonical_perm(n: int, rows) -> list[int]:
    """Vertex order minimising the column-major upper-triangle bit string.

    Branch and bound over vertex orders. At every node only the children with
    the smallest next column survive, and among those one representative per
    twin class is explored (swapping twins is an automorphism fixing the
    prefix).
    """
    if n <= 1:
        return list(range(n))
    rows = list(rows)
    best_cols: list[int] | None = None
    best_perm: list[int] = []
    perm: list[int] = []
    cur: list[int] = []

    def rec(unused: int, cols: dict[int, int]) -> None:
        nonlocal best_cols, best_perm
        depth = len(perm)
        if best_cols is not None and cur > best_cols[:depth]:
            return
        if not unused:
            if best_cols is None or cur < best_cols:
                best_cols = list(cur)
                best_perm = list(perm)
            return
        m = min(cols.values())
        if best_cols is not None and cur == best_cols[:depth] and m > best_cols[depth]:
            return
        reps: list[int] = []
        for v in _bits(unused):
            if cols[v] != m:
                continue
            bv = 1 << v
            if any((rows[v] & ~(1 << w)) == (rows[w] & ~bv) for w in reps):
                continue
            reps.append(v)
        for v in reps:
            rest = unused & ~(1 << v)
            rv = rows[v]
            nxt = {u: (cols[u] << 1) | ((rv >> u) & 1) for u in _bits(rest)}
            perm.append(v)
            cur.append(m)
            rec(rest, nxt)
            perm.pop()
            cur.pop()

    rec(_full(n), {v: 0 for v in range(n)})
    return best_perm


# ---------------------------------------------------------------------------
# induced-subgraph search restricted to a vertex mask
# ---------------------------------------------------------------------------

def induced_through(rows, mask: int, required: int, hn: int, hrows) -> bool:
    """True iff G[mask] has an induced copy of H whose image contains ``required``.

    ``required = -1`` drops the constraint.
    """
    if hn == 0:
        return required < 0
    if hn > _popcount(mask):
        return False
    hdeg = [_popcount(r) for r in hrows]
    gdeg = {v: _popcount(rows[v] & mask) for v in _bits(mask)}
    size = _popcount(mask)
    image = [0] * hn

    def fits(u: int, v: int) -> bool:
        return hdeg[u] <= gdeg[v] and hn - 1 - hdeg[u] <= size - 1 - gdeg[v]

    def extend(order: list[int], pos: int, used: int) -> bool:
        if pos == hn:
            return True
        u = order[pos]
        hu = hrows[u]
        for v in _bits(mask & ~used):
            if not fits(u, v):
                continue
            rv = rows[v]
            ok = True
            for q in range(pos):
                a = order[q]
                if ((hu >> a) & 1) != ((rv >> image[a]) & 1):
                    ok = False
                    break
            if ok:
                image[u] = v
                if extend(order, pos + 1, used | (1 << v)):
                    return True
        return False

    if required < 0:
        return extend(list(range(hn)), 0, 0)
    if not (mask >> required) & 1:
        return False
    for anchor in range(hn):
        if not fits(anchor, required):
            continue
        image[anchor] = required
        order = [anchor] + [u for u in range(hn) if u != anchor]
        if extend(order, 1, 1 << required):
            return True
    return False


# ---------------------------------------------------------------------------
# hereditary DFS
# ---------------------------------------------------------------------------

def _can_add(kind: int, rows, s: int, v: int, family) -> bool:
    nv = rows[v] & s
    if kind == EDGELESS:
        return nv == 0
    if kind == CLIQUE:
        return nv == s
    if kind == FOREST:
        if nv & (nv - 1) == 0:
            return True
        remaining = nv
        while remaining:
            u = (remaining & -remaining).bit_length() - 1
            comp = _component(rows, s, u)
            if _popcount(comp & nv) > 1:
                return False
            remaining &= ~comp
        return True
    if kind == CLUSTER:
        if nv == 0:
            return True
        u = (nv & -nv).bit_length() - 1
        return ((rows[u] & s) | (1 << u)) == nv
    if kind == FORBIDDEN:
        t = s | (1 << v)
        for hn, hrows in family:
            if induced_through(rows, t, v, hn, hrows):
                return False
        return True
    raise ValueError(f"unknown hereditary kind {kind}")


def hereditary_counts(n: int, rows, kind: int, family=()) -> list[int]:
    """Count vertex subsets inducing a member of a hereditary property.

    Depth-first over the subset tree, extending only by vertices above the
    current maximum and pruning as soon as the induced graph leaves the
    property.
    """
    rows = list(rows)
    counts = [0] * (n + 1)
    if kind == FORBIDDEN and any(hn == 0 for hn, _ in family):
        return counts
    stack = [(0, 0, 0)]
    while stack:
        s, size, start = stack.pop()
        counts[size] += 1
        for v in range(start, n):
            if _can_add(kind, rows, s, v, family):
                stack.append((s | (1 << v), size + 1, v + 1))
    return counts


# ---------------------------------------------------------------------------
# augmented properties
# ---------------------------------------------------------------------------

def _zf_closure(rows, filled: int, full: int) -> int:
    changed = True
    while changed and filled != full:
        changed = False
        for v in _bits(filled):
            open_ = rows[v] & ~filled
            if open_ and open_ & (open_ - 1) == 0:
                filled |= open_
                changed = True
    return filled


def downset_counts(n: int, rows, kind: int) -> list[int]:
    """Count subsets *outside* an upward-monotone augmented property.

    The non-members form a down-closed family, so the same pruned DFS used
    for hereditary properties enumerates them exactly.
    """
    rows = list(rows)
    full = _full(n)
    closed = [rows[v] | (1 << v) for v in range(n)]
    counts = [0] * (n + 1)
    if kind == DOM:
        if n == 0:
            return counts
        stack = [(0, 0, 0, 0)]
        while stack:
            s, cov, size, start = stack.pop()
            counts[size] += 1
            for v in range(start, n):
                c = cov | closed[v]
                if c != full:
                    stack.append((s | (1 << v), c, size + 1, v + 1))
        return counts
    if kind == ZF:
        if _zf_closure(rows, 0, full) == full:
            return counts
        stack = [(0, 0, 0)]
        while stack:
            s, size, start = stack.pop()
            counts[size] += 1
            for v in range(start, n):
                t = s | (1 << v)
                if _zf_closure(rows, t, full) != full:
                    stack.append((t, size + 1, v + 1))
        return counts
    raise ValueError(f"unknown augmented kind {kind}")


def _brute_member(kind: int, rows, mask: int, full: int) -> bool:
    if kind == EDGELESS:
        return all(rows[v] & mask == 0 for v in _bits(mask))
    if kind == CLIQUE:
        return all((rows[v] | (1 << v)) & mask == mask for v in _bits(mask))
    if kind == FOREST:
        edges = sum(_popcount(rows[v] & mask) for v in _bits(mask)) // 2
        comps = 0
        left = mask
        while left:
            u = (left & -left).bit_length() - 1
            left &= ~_component(rows, mask, u)
            comps += 1
        return edges == _popcount(mask) - comps
    if kind == CLUSTER:
        for v in _bits(mask):
            cv = (rows[v] | (1 << v)) & mask
            for u in _bits(rows[v] & mask):
                if (rows[u] | (1 << u)) & mask != cv:
                    return False
        return True
    if kind == DOM:
        cov = mask
        for v in _bits(mask):
            cov |= rows[v]
        return cov & full == full
    if kind == ZF:
        return _zf_closure(rows, mask, full) == full
    raise ValueError(f"unknown kind {kind}")


def brute_counts(n: int, rows, kind: int) -> list[int]:
    """Count members by scanning all 2^n subsets."""
    rows = list(rows)
    full = _full(n)
    counts = [0] * (n + 1)
    for mask in range(1 << n):
        if _brute_member(kind, rows, mask, full):
            counts[_popcount(mask)] += 1
    return counts
