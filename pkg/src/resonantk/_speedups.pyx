# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; drop-in twins of ``resonantk._kernels_py``.

The port keeps the exact scan orders of the pure versions (ascending vertex
ids, neighbour lists in given order, combinations in lexicographic order) so
both backends return identical values, not merely equivalent ones.
"""

from itertools import combinations

from libc.stdlib cimport calloc, free


cdef struct CSR:
    int* start   # n + 1 offsets
    int* flat    # concatenated neighbour lists


cdef int _csr_build(CSR* csr, int n, object adj) except -1:
    cdef int total = 0
    cdef int v, i
    for v in range(n):
        total += len(adj[v])
    csr.start = <int*> calloc(n + 1, sizeof(int))
    csr.flat = <int*> calloc(total if total else 1, sizeof(int))
    if csr.start == NULL or csr.flat == NULL:
        _csr_free(csr)
        raise MemoryError()
    cdef int pos = 0
    for v in range(n):
        csr.start[v] = pos
        for u in adj[v]:
            csr.flat[pos] = u
            pos += 1
    csr.start[n] = pos
    return 0


cdef void _csr_free(CSR* csr) noexcept:
    free(csr.start)
    free(csr.flat)
    csr.start = NULL
    csr.flat = NULL


cdef int _lca(int a, int b, int n, int* base, int* mate, int* p, char* hit) noexcept:
    cdef int i, x, y
    for i in range(n):
        hit[i] = 0
    x = base[a]
    while True:
        hit[x] = 1
        if mate[x] < 0:
            break
        x = base[p[mate[x]]]
    y = base[b]
    while not hit[y]:
        y = base[p[mate[y]]]
    return y


cdef void _mark_path(int v, int b, int child, int* base, int* mate, int* p,
                     char* blossom) noexcept:
    while base[v] != b:
        blossom[base[v]] = 1
        blossom[base[mate[v]]] = 1
        p[v] = child
        child = mate[v]
        v = p[mate[v]]


def mate_array(int n, adj, excluded=None):
    """Maximum matching; returns mate[v] (or -1) for every vertex."""
    cdef CSR csr
    _csr_build(&csr, n, adj)
    cdef char* exc = <char*> calloc(n if n else 1, sizeof(char))
    cdef int* mate = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* p = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* base = <int*> calloc(n if n else 1, sizeof(int))
    cdef char* used = <char*> calloc(n if n else 1, sizeof(char))
    cdef char* blossom = <char*> calloc(n if n else 1, sizeof(char))
    cdef char* hit = <char*> calloc(n if n else 1, sizeof(char))
    # Total queue pushes per phase: the root, one per newly labelled odd
    # vertex, one per blossom absorption -- bounded by 2n + 1.
    cdef int* queue = <int*> calloc(2 * n + 2, sizeof(int))
    cdef int v, u, i, to, root, finish, curbase, pv, ppv, qhead, qtail
    try:
        if (exc == NULL or mate == NULL or p == NULL or base == NULL or
                used == NULL or blossom == NULL or hit == NULL or
                queue == NULL):
            raise MemoryError()
        if excluded is not None:
            for i in range(n):
                exc[i] = 1 if excluded[i] else 0
        for i in range(n):
            mate[i] = -1
        for v in range(n):
            if not exc[v] and mate[v] < 0:
                for i in range(csr.start[v], csr.start[v + 1]):
                    u = csr.flat[i]
                    if not exc[u] and mate[u] < 0:
                        mate[v] = u
                        mate[u] = v
                        break
        for root in range(n):
            if exc[root] or mate[root] >= 0:
                continue
            for i in range(n):
                p[i] = -1
                base[i] = i
                used[i] = 0
            used[root] = 1
            queue[0] = root
            qhead = 0
            qtail = 1
            finish = -1
            while qhead < qtail and finish < 0:
                v = queue[qhead]
                qhead += 1
                for i in range(csr.start[v], csr.start[v + 1]):
                    to = csr.flat[i]
                    if exc[to]:
                        continue
                    if base[v] == base[to] or mate[v] == to:
                        continue
                    if to == root or (mate[to] >= 0 and p[mate[to]] >= 0):
                        curbase = _lca(v, to, n, base, mate, p, hit)
                        for u in range(n):
                            blossom[u] = 0
                        _mark_path(v, curbase, to, base, mate, p, blossom)
                        _mark_path(to, curbase, v, base, mate, p, blossom)
                        for u in range(n):
                            if blossom[base[u]]:
                                base[u] = curbase
                                if not used[u]:
                                    used[u] = 1
                                    queue[qtail] = u
                                    qtail += 1
                    elif p[to] < 0:
                        p[to] = v
                        if mate[to] < 0:
                            finish = to
                            break
                        used[mate[to]] = 1
                        queue[qtail] = mate[to]
                        qtail += 1
            if finish >= 0:
                v = finish
                while v >= 0:
                    pv = p[v]
                    ppv = mate[pv]
                    mate[v] = pv
                    mate[pv] = v
                    v = ppv
        return [mate[i] for i in range(n)]
    finally:
        free(exc)
        free(mate)
        free(p)
        free(base)
        free(used)
        free(blossom)
        free(hit)
        free(queue)
        _csr_free(&csr)


cdef void _pm_backtrack(int lo, int n, int* mate, CSR* csr, int limit,
                        list out):
    if len(out) > limit:
        return
    cdef int v = lo
    while v < n and mate[v] >= 0:
        v += 1
    if v == n:
        out.append(tuple([mate[i] for i in range(n)]))
        return
    cdef int i, u
    for i in range(csr.start[v], csr.start[v + 1]):
        u = csr.flat[i]
        if mate[u] < 0:
            mate[v] = u
            mate[u] = v
            _pm_backtrack(v + 1, n, mate, csr, limit, out)
            mate[v] = -1
            mate[u] = -1
            if len(out) > limit:
                return


def perfect_matchings(int n, adj, int limit):
    """All perfect matchings as mate tuples, stopping after limit + 1."""
    out = []
    if n % 2:
        return out
    cdef CSR csr
    _csr_build(&csr, n, adj)
    cdef int* mate = <int*> calloc(n if n else 1, sizeof(int))
    cdef int i
    try:
        if mate == NULL:
            raise MemoryError()
        for i in range(n):
            mate[i] = -1
        _pm_backtrack(0, n, mate, &csr, limit, out)
        return out
    finally:
        free(mate)
        _csr_free(&csr)


cdef bint _cyclic_split(int n, CSR* inc, int* inc_edge, char* alive,
                        int* comp, int* stack) noexcept:
    cdef int i, start, v, w, sp, verts, ends, n_comp, cyclic
    for i in range(n):
        comp[i] = -1
    n_comp = 0
    cyclic = 0
    for start in range(n):
        if comp[start] >= 0:
            continue
        comp[start] = n_comp
        stack[0] = start
        sp = 1
        verts = 0
        ends = 0
        while sp:
            sp -= 1
            v = stack[sp]
            verts += 1
            for i in range(inc.start[v], inc.start[v + 1]):
                if not alive[inc_edge[i]]:
                    continue
                ends += 1
                w = inc.flat[i]
                if comp[w] < 0:
                    comp[w] = n_comp
                    stack[sp] = w
                    sp += 1
        if ends // 2 >= verts:
            cyclic += 1
            if cyclic >= 2:
                return True
        n_comp += 1
        if n_comp == 1 and verts == n:
            return False
    return False


def has_small_cyclic_cut(int n, edges, int max_size):
    """Whether removing some <= max_size edges leaves >= 2 cyclic components."""
    cdef int m = len(edges)
    if max_size <= 0:
        return False
    cdef CSR inc
    inc.start = <int*> calloc(n + 1, sizeof(int))
    inc.flat = <int*> calloc(2 * m if m else 1, sizeof(int))
    cdef int* inc_edge = <int*> calloc(2 * m if m else 1, sizeof(int))
    cdef char* alive = <char*> calloc(m if m else 1, sizeof(char))
    cdef int* comp = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* stack = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* deg = <int*> calloc(n if n else 1, sizeof(int))
    cdef int idx, u, v, pos, i
    try:
        if (inc.start == NULL or inc.flat == NULL or inc_edge == NULL or
                alive == NULL or comp == NULL or stack == NULL or deg == NULL):
            raise MemoryError()
        for idx in range(m):
            u, v = edges[idx]
            deg[u] += 1
            deg[v] += 1
        pos = 0
        for i in range(n):
            inc.start[i] = pos
            pos += deg[i]
            deg[i] = inc.start[i]
        inc.start[n] = pos
        for idx in range(m):
            u, v = edges[idx]
            inc.flat[deg[u]] = v
            inc_edge[deg[u]] = idx
            deg[u] += 1
            inc.flat[deg[v]] = u
            inc_edge[deg[v]] = idx
            deg[v] += 1
        for i in range(m):
            alive[i] = 1
        for size in range(1, max_size + 1):
            for combo in combinations(range(m), size):
                for i in combo:
                    alive[i] = 0
                if _cyclic_split(n, &inc, inc_edge, alive, comp, stack):
                    return True
                for i in combo:
                    alive[i] = 1
        return False
    finally:
        free(inc.start)
        free(inc.flat)
        free(inc_edge)
        free(alive)
        free(comp)
        free(stack)
        free(deg)
