# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels (uint64 bitset rows, n <= 64).

Mirrors ``_pykernels`` function for function.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy

cdef enum:
    MAXN = 64

EDGELESS = 0
CLIQUE = 1
FOREST = 2
CLUSTER = 3
FORBIDDEN = 4
DOM = 10
ZF = 11

BACKEND = "cython"

cdef extern from * nogil:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t full_mask(int n) nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef inline uint64_t bit(int v) nogil:
    return (<uint64_t>1) << v


cdef void load_rows(object rows, int n, uint64_t* out) except *:
    cdef int i
    for i in range(n):
        out[i] = <uint64_t>rows[i]


cdef uint64_t component(const uint64_t* rows, uint64_t mask, int start) nogil:
    cdef uint64_t comp = bit(start)
    cdef uint64_t frontier = comp
    cdef uint64_t nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= rows[lowbit(f)]
            f &= f - 1
        nxt &= mask & ~comp
        comp |= nxt
        frontier = nxt
    return comp


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------

cdef struct CanonState:
    int n
    uint64_t rows[MAXN]
    int perm[MAXN]
    uint64_t cur[MAXN]
    int best_perm[MAXN]
    uint64_t best_cols[MAXN]
    int have_best


cdef int prefix_cmp(CanonState* st, int depth) nogil:
    cdef int i
    for i in range(depth):
        if st.cur[i] < st.best_cols[i]:
            return -1
        if st.cur[i] > st.best_cols[i]:
            return 1
    return 0


cdef void canon_rec(CanonState* st, int depth, uint64_t unused, uint64_t* cols) noexcept nogil:
    cdef int c, v, w, k, nreps, u
    cdef uint64_t m, rest, bv, rv, f
    cdef int reps[MAXN]
    cdef uint64_t nxt[MAXN]
    if st.have_best:
        c = prefix_cmp(st, depth)
        if c > 0:
            return
    else:
        c = -1
    if unused == 0:
        if not st.have_best or c < 0:
            st.have_best = 1
            for k in range(st.n):
                st.best_cols[k] = st.cur[k]
                st.best_perm[k] = st.perm[k]
        return
    m = <uint64_t>0xFFFFFFFFFFFFFFFF
    f = unused
    while f:
        v = lowbit(f)
        f &= f - 1
        if cols[v] < m:
            m = cols[v]
    if st.have_best and c == 0 and m > st.best_cols[depth]:
        return
    nreps = 0
    f = unused
    while f:
        v = lowbit(f)
        f &= f - 1
        if cols[v] != m:
            continue
        bv = bit(v)
        for k in range(nreps):
            w = reps[k]
            if (st.rows[v] & ~bit(w)) == (st.rows[w] & ~bv):
                break
        else:
            reps[nreps] = v
            nreps += 1
    for k in range(nreps):
        v = reps[k]
        rest = unused & ~bit(v)
        rv = st.rows[v]
        f = rest
        while f:
            u = lowbit(f)
            f &= f - 1
            nxt[u] = (cols[u] << 1) | ((rv >> u) & 1)
        st.perm[depth] = v
        st.cur[depth] = m
        canon_rec(st, depth + 1, rest, nxt)


def canonical_perm(int n, rows):
    """Vertex order minimising the column-major upper-triangle bit string."""
    cdef CanonState st
    cdef uint64_t cols[MAXN]
    cdef int i
    if n <= 1:
        return list(range(n))
    if n > MAXN:
        raise ValueError("n too large")
    st.n = n
    st.have_best = 0
    load_rows(rows, n, st.rows)
    for i in range(n):
        cols[i] = 0
    canon_rec(&st, 0, full_mask(n), cols)
    return [st.best_perm[i] for i in range(n)]


# ---------------------------------------------------------------------------
# induced-subgraph search restricted to a vertex mask
# ---------------------------------------------------------------------------

cdef struct Pattern:
    int hn
    uint64_t hrows[MAXN]
    int hdeg[MAXN]


cdef struct Search:
    const uint64_t* rows
    uint64_t mask
    int size
    int gdeg[MAXN]
    int order[MAXN]
    int image[MAXN]


cdef inline bint fits(Pattern* h, Search* s, int u, int v) nogil:
    return h.hdeg[u] <= s.gdeg[v] and h.hn - 1 - h.hdeg[u] <= s.size - 1 - s.gdeg[v]


cdef bint extend(Pattern* h, Search* s, int pos, uint64_t used) nogil:
    cdef int u, v, q, a
    cdef uint64_t hu, rv, f
    cdef bint ok
    if pos == h.hn:
        return True
    u = s.order[pos]
    hu = h.hrows[u]
    f = s.mask & ~used
    while f:
        v = lowbit(f)
        f &= f - 1
        if not fits(h, s, u, v):
            continue
        rv = s.rows[v]
        ok = True
        for q in range(pos):
            a = s.order[q]
            if ((hu >> a) & 1) != ((rv >> s.image[a]) & 1):
                ok = False
                break
        if ok:
            s.image[u] = v
            if extend(h, s, pos + 1, used | bit(v)):
                return True
    return False


cdef bint induced_through_c(const uint64_t* rows, uint64_t mask, int required, Pattern* h) nogil:
    cdef Search s
    cdef int anchor, u, k, v
    cdef uint64_t f
    if h.hn == 0:
        return required < 0
    s.size = popc(mask)
    if h.hn > s.size:
        return False
    s.rows = rows
    s.mask = mask
    f = mask
    while f:
        v = lowbit(f)
        f &= f - 1
        s.gdeg[v] = popc(rows[v] & mask)
    if required < 0:
        for u in range(h.hn):
            s.order[u] = u
        return extend(h, &s, 0, 0)
    if not (mask >> required) & 1:
        return False
    for anchor in range(h.hn):
        if not fits(h, &s, anchor, required):
            continue
        s.image[anchor] = required
        s.order[0] = anchor
        k = 1
        for u in range(h.hn):
            if u != anchor:
                s.order[k] = u
                k += 1
        if extend(h, &s, 1, bit(required)):
            return True
    return False


cdef void load_pattern(object hn, object hrows, Pattern* h) except *:
    cdef int i
    h.hn = hn
    for i in range(h.hn):
        h.hrows[i] = <uint64_t>hrows[i]
        h.hdeg[i] = popc(h.hrows[i])


def induced_through(rows, uint64_t mask, int required, int hn, hrows):
    """True iff G[mask] has an induced copy of H whose image contains ``required``."""
    cdef uint64_t r[MAXN]
    cdef Pattern h
    n = len(rows)
    load_rows(rows, n, r)
    load_pattern(hn, hrows, &h)
    return bool(induced_through_c(r, mask, required, &h))


# ---------------------------------------------------------------------------
# hereditary DFS
# ---------------------------------------------------------------------------

cdef struct Hered:
    int n
    int kind
    uint64_t rows[MAXN]
    unsigned long long counts[MAXN + 1]
    int nfam
    Pattern* fam


cdef bint can_add(Hered* st, uint64_t s, int v) nogil:
    cdef uint64_t nv = st.rows[v] & s
    cdef uint64_t remaining, comp, t
    cdef int u, k
    if st.kind == 0:
        return nv == 0
    if st.kind == 1:
        return nv == s
    if st.kind == 2:
        if (nv & (nv - 1)) == 0:
            return True
        remaining = nv
        while remaining:
            u = lowbit(remaining)
            comp = component(st.rows, s, u)
            if popc(comp & nv) > 1:
                return False
            remaining &= ~comp
        return True
    if st.kind == 3:
        if nv == 0:
            return True
        u = lowbit(nv)
        return ((st.rows[u] & s) | bit(u)) == nv
    if st.kind == 4:
        t = s | bit(v)
        for k in range(st.nfam):
            if induced_through_c(st.rows, t, v, &st.fam[k]):
                return False
        return True
    return False


cdef void hered_rec(Hered* st, uint64_t s, int size, int start) noexcept nogil:
    cdef int v
    st.counts[size] += 1
    for v in range(start, st.n):
        if can_add(st, s, v):
            hered_rec(st, s | bit(v), size + 1, v + 1)


def hereditary_counts(int n, rows, int kind, family=()):
    """Count vertex subsets inducing a member of a hereditary property."""
    cdef Hered st
    cdef Pattern fam[64]
    cdef int i
    if kind not in (0, 1, 2, 3, 4):
        raise ValueError(f"unknown hereditary kind {kind}")
    family = list(family)
    if len(family) > 64:
        raise ValueError("forbidden family too large for the compiled kernel")
    st.n = n
    st.kind = kind
    load_rows(rows, n, st.rows)
    for i in range(n + 1):
        st.counts[i] = 0
    st.nfam = len(family)
    for i in range(st.nfam):
        load_pattern(family[i][0], family[i][1], &fam[i])
        if fam[i].hn == 0:
            return [0] * (n + 1)
    st.fam = fam
    with nogil:
        hered_rec(&st, 0, 0, 0)
    return [int(st.counts[i]) for i in range(n + 1)]


# ---------------------------------------------------------------------------
# augmented properties
# ---------------------------------------------------------------------------

cdef uint64_t zf_closure(const uint64_t* rows, uint64_t filled, uint64_t full) nogil:
    cdef bint changed = True
    cdef uint64_t f, open_
    cdef int v
    while changed and filled != full:
        changed = False
        f = filled
        while f:
            v = lowbit(f)
            f &= f - 1
            open_ = rows[v] & ~filled
            if open_ and (open_ & (open_ - 1)) == 0:
                filled |= open_
                changed = True
    return filled


cdef struct Down:
    int n
    int kind
    uint64_t full
    uint64_t rows[MAXN]
    uint64_t closed[MAXN]
    unsigned long long counts[MAXN + 1]


cdef void dom_rec(Down* st, uint64_t cov, int size, int start) noexcept nogil:
    cdef int v
    cdef uint64_t c
    st.counts[size] += 1
    for v in range(start, st.n):
        c = cov | st.closed[v]
        if c != st.full:
            dom_rec(st, c, size + 1, v + 1)


cdef void zf_rec(Down* st, uint64_t s, int size, int start) noexcept nogil:
    cdef int v
    cdef uint64_t t
    st.counts[size] += 1
    for v in range(start, st.n):
        t = s | bit(v)
        if zf_closure(st.rows, t, st.full) != st.full:
            zf_rec(st, t, size + 1, v + 1)


def downset_counts(int n, rows, int kind):
    """Count subsets outside an upward-monotone augmented property."""
    cdef Down st
    cdef int i
    if kind not in (10, 11):
        raise ValueError(f"unknown augmented kind {kind}")
    st.n = n
    st.kind = kind
    st.full = full_mask(n)
    load_rows(rows, n, st.rows)
    for i in range(n):
        st.closed[i] = st.rows[i] | bit(i)
    for i in range(n + 1):
        st.counts[i] = 0
    if kind == 10:
        if n > 0:
            with nogil:
                dom_rec(&st, 0, 0, 0)
    else:
        if zf_closure(st.rows, 0, st.full) != st.full:
            with nogil:
                zf_rec(&st, 0, 0, 0)
    return [int(st.counts[i]) for i in range(n + 1)]


cdef bint brute_member(int kind, const uint64_t* rows, uint64_t mask, uint64_t full) nogil:
    cdef uint64_t f, g, cov, cv, left
    cdef int v, u, edges, comps
    if kind == 0:
        f = mask
        while f:
            v = lowbit(f)
            f &= f - 1
            if rows[v] & mask:
                return False
        return True
    if kind == 1:
        f = mask
        while f:
            v = lowbit(f)
            f &= f - 1
            if ((rows[v] | bit(v)) & mask) != mask:
                return False
        return True
    if kind == 2:
        edges = 0
        f = mask
        while f:
            v = lowbit(f)
            f &= f - 1
            edges += popc(rows[v] & mask)
        edges //= 2
        comps = 0
        left = mask
        while left:
            u = lowbit(left)
            left &= ~component(rows, mask, u)
            comps += 1
        return edges == popc(mask) - comps
    if kind == 3:
        f = mask
        while f:
            v = lowbit(f)
            f &= f - 1
            cv = (rows[v] | bit(v)) & mask
            g = rows[v] & mask
            while g:
                u = lowbit(g)
                g &= g - 1
                if ((rows[u] | bit(u)) & mask) != cv:
                    return False
        return True
    if kind == 10:
        cov = mask
        f = mask
        while f:
            v = lowbit(f)
            f &= f - 1
            cov |= rows[v]
        return (cov & full) == full
    if kind == 11:
        return zf_closure(rows, mask, full) == full
    return False


def brute_counts(int n, rows, int kind):
    """Count members by scanning all 2^n subsets."""
    cdef uint64_t r[MAXN]
    cdef unsigned long long counts[MAXN + 1]
    cdef uint64_t mask, full, top
    cdef int i
    if kind not in (0, 1, 2, 3, 10, 11):
        raise ValueError(f"unknown kind {kind}")
    if n > 40:
        raise ValueError("n too large for subset scan")
    load_rows(rows, n, r)
    full = full_mask(n)
    top = (<uint64_t>1) << n
    for i in range(n + 1):
        counts[i] = 0
    with nogil:
        mask = 0
        while mask < top:
            if brute_member(kind, r, mask, full):
                counts[popc(mask)] += 1
            mask += 1
    return [int(counts[i]) for i in range(n + 1)]
