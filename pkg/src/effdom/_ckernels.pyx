# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the routines in ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free


cdef struct Csr:
    int n
    int *start
    int *items


cdef int _csr_build(Csr *g, int n, adj, bint closed) except -1:
    cdef int total = 0
    cdef int v, i, pos, w
    g.n = n
    g.start = <int *> malloc((n + 1) * sizeof(int))
    if g.start == NULL:
        raise MemoryError()
    for v in range(n):
        total += len(adj[v]) + (1 if closed else 0)
    g.items = <int *> malloc((total + 1) * sizeof(int))
    if g.items == NULL:
        free(g.start)
        raise MemoryError()
    pos = 0
    for v in range(n):
        g.start[v] = pos
        row = sorted(list(adj[v]) + ([v] if closed else []))
        for i in range(len(row)):
            w = row[i]
            g.items[pos] = w
            pos += 1
    g.start[n] = pos
    return 0


cdef void _csr_free(Csr *g) noexcept:
    free(g.start)
    free(g.items)


# ---------------------------------------------------------------- patterns

cdef struct PatState:
    int n
    int k
    unsigned char *mat      # n*n adjacency matrix
    unsigned char *padj     # k*k pattern adjacency (earlier positions)
    int *anchor             # earlier adjacent position or -1
    int *after
    int *host
    unsigned char *used
    Csr g


cdef bint _pat_extend(PatState *s, int i) noexcept:
    cdef int j, v, a, lo, hi, idx
    cdef bint ok
    if i == s.k:
        return True
    a = s.anchor[i]
    if a >= 0:
        lo = s.g.start[s.host[a]]
        hi = s.g.start[s.host[a] + 1]
    else:
        lo = 0
        hi = s.n
    for idx in range(lo, hi):
        v = s.g.items[idx] if a >= 0 else idx
        if s.used[v]:
            continue
        if s.after[i] >= 0 and v <= s.host[s.after[i]]:
            continue
        ok = True
        for j in range(i):
            if s.mat[v * s.n + s.host[j]] != s.padj[i * s.k + j]:
                ok = False
                break
        if not ok:
            continue
        s.host[i] = v
        s.used[v] = 1
        if _pat_extend(s, i + 1):
            return True
        s.used[v] = 0
    return False


def find_induced(int n, adj, pattern_adj, after):
    cdef int k = len(pattern_adj)
    cdef int i, j, v, w
    cdef PatState s
    if k == 0:
        return []
    if k > n:
        return None
    s.n = n
    s.k = k
    s.mat = <unsigned char *> calloc(<size_t> n * n, 1)
    s.padj = <unsigned char *> calloc(k * k, 1)
    s.anchor = <int *> malloc(k * sizeof(int))
    s.after = <int *> malloc(k * sizeof(int))
    s.host = <int *> calloc(k, sizeof(int))
    s.used = <unsigned char *> calloc(n, 1)
    if (s.mat == NULL or s.padj == NULL or s.anchor == NULL or s.after == NULL
            or s.host == NULL or s.used == NULL):
        free(s.mat); free(s.padj); free(s.anchor); free(s.after); free(s.host); free(s.used)
        raise MemoryError()
    try:
        _csr_build(&s.g, n, adj, False)
        for v in range(n):
            for w in adj[v]:
                s.mat[v * n + w] = 1
        for i in range(k):
            s.anchor[i] = -1
            s.after[i] = after[i]
            for j in pattern_adj[i]:
                s.padj[i * k + j] = 1
                if s.anchor[i] < 0:
                    s.anchor[i] = j
        found = _pat_extend(&s, 0)
        result = [s.host[i] for i in range(k)] if found else None
        _csr_free(&s.g)
    finally:
        free(s.mat); free(s.padj); free(s.anchor); free(s.after); free(s.host); free(s.used)
    return result


# ---------------------------------------------------------------- exact WED

cdef struct ExState:
    int n
    Csr g                   # closed neighborhoods
    long long *w            # -1 marks a forbidden vertex
    unsigned char *dom
    int *blk                # dominated vertices inside N[x]
    int *chosen
    int depth
    int ndom
    bint have_best
    long long best_w
    int *best
    int best_len


cdef void _sort_ints(int *a, int m) noexcept:
    cdef int i, j, t
    for i in range(1, m):
        t = a[i]
        j = i - 1
        while j >= 0 and a[j] > t:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = t


cdef bint _lex_before(int *a, int la, int *b, int lb) noexcept:
    cdef int i
    cdef int m = la if la < lb else lb
    for i in range(m):
        if a[i] != b[i]:
            return a[i] < b[i]
    return la < lb


cdef void _ex_search(ExState *s, long long cur, int *scratch) noexcept:
    cdef int u, x, z, i, j, c, pick, pick_count, lo
    if s.have_best and cur > s.best_w:
        return
    if s.ndom == s.n:
        for i in range(s.depth):
            scratch[i] = s.chosen[i]
        _sort_ints(scratch, s.depth)
        if s.have_best and cur == s.best_w and not _lex_before(scratch, s.depth, s.best, s.best_len):
            return
        s.have_best = True
        s.best_w = cur
        s.best_len = s.depth
        for i in range(s.depth):
            s.best[i] = scratch[i]
        return
    pick = -1
    pick_count = s.n + 1
    for u in range(s.n):
        if s.dom[u]:
            continue
        c = 0
        for i in range(s.g.start[u], s.g.start[u + 1]):
            x = s.g.items[i]
            if s.w[x] >= 0 and s.blk[x] == 0:
                c += 1
        if c < pick_count:
            pick = u
            pick_count = c
            if c == 0:
                return
    for i in range(s.g.start[pick], s.g.start[pick + 1]):
        x = s.g.items[i]
        if s.w[x] < 0 or s.blk[x] != 0:
            continue
        for j in range(s.g.start[x], s.g.start[x + 1]):
            z = s.g.items[j]
            s.dom[z] = 1
            s.ndom += 1
            for lo in range(s.g.start[z], s.g.start[z + 1]):
                s.blk[s.g.items[lo]] += 1
        s.chosen[s.depth] = x
        s.depth += 1
        _ex_search(s, cur + s.w[x], scratch)
        s.depth -= 1
        for j in range(s.g.start[x], s.g.start[x + 1]):
            z = s.g.items[j]
            s.dom[z] = 0
            s.ndom -= 1
            for lo in range(s.g.start[z], s.g.start[z + 1]):
                s.blk[s.g.items[lo]] -= 1


def exact_search(int n, adj, weights):
    cdef ExState s
    cdef int v
    cdef int *scratch
    if n == 0:
        return 0, []
    s.n = n
    s.w = <long long *> malloc(n * sizeof(long long))
    s.dom = <unsigned char *> calloc(n, 1)
    s.blk = <int *> calloc(n, sizeof(int))
    s.chosen = <int *> calloc(n + 1, sizeof(int))
    s.best = <int *> calloc(n + 1, sizeof(int))
    scratch = <int *> calloc(n + 1, sizeof(int))
    if (s.w == NULL or s.dom == NULL or s.blk == NULL or s.chosen == NULL
            or s.best == NULL or scratch == NULL):
        free(s.w); free(s.dom); free(s.blk); free(s.chosen); free(s.best); free(scratch)
        raise MemoryError()
    try:
        _csr_build(&s.g, n, adj, True)
        for v in range(n):
            s.w[v] = weights[v]
        s.depth = 0
        s.ndom = 0
        s.have_best = False
        s.best_w = 0
        s.best_len = 0
        _ex_search(&s, 0, scratch)
        if s.have_best:
            result = (s.best_w, [s.best[v] for v in range(s.best_len)])
        else:
            result = None
        _csr_free(&s.g)
    finally:
        free(s.w); free(s.dom); free(s.blk); free(s.chosen); free(s.best); free(scratch)
    return result
