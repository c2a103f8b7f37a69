# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the exhaustive sweeps; mirrors ``_fallback``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint8_t, uint32_t, uint64_t

cnp.import_array()

BACKEND = "compiled"

cdef enum:
    MAXN = 16
    MAXPAIRS = 120

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil


cdef inline int popcount32(uint32_t x) noexcept nogil:
    return __builtin_popcount(x)


def scan_connected(int n, long long start, long long stop, two_l_over):
    cdef int npairs = n * (n - 1) // 2
    cdef int us[MAXPAIRS]
    cdef int vs[MAXPAIRS]
    cdef int64_t tlo[2 * MAXN]
    cdef uint32_t adj[MAXN]
    cdef int deg[MAXN]
    cdef int i, j, k, u, v, s, smin, smax, tri_free, a, b, m1, ok
    cdef long long mask, count = 0
    cdef uint32_t full = (1u << n) - 1, reach, grow, r, side_a, side_b, want
    cdef int64_t h
    k = 0
    for j in range(1, n):
        for i in range(j):
            us[k] = i
            vs[k] = j
            k += 1
    for s in range(min(len(two_l_over), 2 * MAXN)):
        tlo[s] = two_l_over[s]

    cdef long long size = stop - start if stop > start else 0
    out_mask = np.empty(size, dtype=np.int64)
    out_m = np.empty(size, dtype=np.int32)
    out_m1 = np.empty(size, dtype=np.int32)
    out_h = np.empty(size, dtype=np.int64)
    out_smin = np.empty(size, dtype=np.int32)
    out_smax = np.empty(size, dtype=np.int32)
    out_tf = np.empty(size, dtype=np.uint8)
    out_a = np.empty(size, dtype=np.int32)
    out_b = np.empty(size, dtype=np.int32)
    cdef int64_t[:] o_mask = out_mask
    cdef int32_t[:] o_m = out_m
    cdef int32_t[:] o_m1 = out_m1
    cdef int64_t[:] o_h = out_h
    cdef int32_t[:] o_smin = out_smin
    cdef int32_t[:] o_smax = out_smax
    cdef uint8_t[:] o_tf = out_tf
    cdef int32_t[:] o_a = out_a
    cdef int32_t[:] o_b = out_b

    with nogil:
        mask = start
        while mask < stop:
            for v in range(n):
                adj[v] = 0
            for k in range(npairs):
                if (mask >> k) & 1:
                    adj[us[k]] |= 1u << vs[k]
                    adj[vs[k]] |= 1u << us[k]
            if n > 1:
                reach = 1
                while True:
                    grow = reach
                    r = reach
                    while r:
                        grow |= adj[__builtin_ctz(r)]
                        r &= r - 1
                    if grow == reach:
                        break
                    reach = grow
                if reach != full:
                    mask += 1
                    continue
            m1 = 0
            for v in range(n):
                deg[v] = popcount32(adj[v])
                m1 += deg[v] * deg[v]
            h = 0
            smin = 1 << 30
            smax = 0
            tri_free = 1
            for k in range(npairs):
                if (mask >> k) & 1:
                    u = us[k]
                    v = vs[k]
                    s = deg[u] + deg[v]
                    h += tlo[s]
                    if s < smin:
                        smin = s
                    if s > smax:
                        smax = s
                    if adj[u] & adj[v]:
                        tri_free = 0
            if smax == 0:
                smin = 0
            a = 0
            b = 0
            if n >= 2:
                side_b = adj[0]
                side_a = full & ~side_b
                ok = side_b != 0
                for v in range(n):
                    if (side_a >> v) & 1:
                        want = side_b
                    else:
                        want = side_a
                    if adj[v] != want:
                        ok = 0
                        break
                if ok:
                    a = popcount32(side_a)
                    b = popcount32(side_b)
                    if a > b:
                        a, b = b, a
            o_mask[count] = mask
            o_m[count] = popcount32(<uint32_t>mask)
            o_m1[count] = m1
            o_h[count] = h
            o_smin[count] = smin
            o_smax[count] = smax
            o_tf[count] = tri_free
            o_a[count] = a
            o_b[count] = b
            count += 1
            mask += 1

    return (out_mask[:count].copy(), out_m[:count].copy(), out_m1[:count].copy(),
            out_h[:count].copy(), out_smin[:count].copy(), out_smax[:count].copy(),
            out_tf[:count].copy(), out_a[:count].copy(), out_b[:count].copy())


cdef uint64_t rooted_code(int n, int nbrs[][MAXN], int *nd, int root) noexcept nogil:
    cdef int parent[MAXN]
    cdef int order[MAXN]
    cdef uint64_t code[MAXN]
    cdef int length[MAXN]
    cdef int kid_len[MAXN][MAXN]
    cdef uint64_t kid_code[MAXN][MAXN]
    cdef int nkids[MAXN]
    cdef int head = 0, tail = 1, v, w, t, x, y, ln, p
    cdef uint64_t c, tc
    cdef int tl
    for v in range(n):
        parent[v] = -1
        nkids[v] = 0
    parent[root] = root
    order[0] = root
    while head < tail:
        v = order[head]
        head += 1
        for t in range(nd[v]):
            w = nbrs[v][t]
            if parent[w] < 0:
                parent[w] = v
                order[tail] = w
                tail += 1
    for x in range(n - 1, -1, -1):
        v = order[x]
        # insertion sort children by (length, code)
        for y in range(1, nkids[v]):
            tl = kid_len[v][y]
            tc = kid_code[v][y]
            p = y - 1
            while p >= 0 and (kid_len[v][p] > tl or (kid_len[v][p] == tl and kid_code[v][p] > tc)):
                kid_len[v][p + 1] = kid_len[v][p]
                kid_code[v][p + 1] = kid_code[v][p]
                p -= 1
            kid_len[v][p + 1] = tl
            kid_code[v][p + 1] = tc
        c = 1
        ln = 1
        for y in range(nkids[v]):
            c = (c << kid_len[v][y]) | kid_code[v][y]
            ln += kid_len[v][y]
        code[v] = c << 1
        length[v] = ln + 1
        if v != root:
            p = parent[v]
            kid_len[p][nkids[p]] = length[v]
            kid_code[p][nkids[p]] = code[v]
            nkids[p] += 1
    return code[root]


cdef uint64_t tree_code_c(int n, int nbrs[][MAXN], int *nd) noexcept nogil:
    cdef int deg[MAXN]
    cdef int layer[MAXN]
    cdef int nxt[MAXN]
    cdef int nl = 0, nn, left = n, v, w, t, x
    cdef uint64_t best, c
    if n == 1:
        return 2
    for v in range(n):
        deg[v] = nd[v]
        if deg[v] <= 1:
            layer[nl] = v
            nl += 1
    while left > 2:
        left -= nl
        nn = 0
        for x in range(nl):
            v = layer[x]
            for t in range(nd[v]):
                w = nbrs[v][t]
                deg[w] -= 1
                if deg[w] == 1:
                    nxt[nn] = w
                    nn += 1
        for x in range(nn):
            layer[x] = nxt[x]
        nl = nn
    best = rooted_code(n, nbrs, nd, layer[0])
    for x in range(1, nl):
        c = rooted_code(n, nbrs, nd, layer[x])
        if c < best:
            best = c
    return best


def tree_code(int n, us, vs):
    cdef int nbrs[MAXN][MAXN]
    cdef int nd[MAXN]
    cdef int v, u, w
    if n < 1 or n > MAXN:
        raise ValueError(f"tree_code supports 1 <= n <= {MAXN}")
    for v in range(n):
        nd[v] = 0
    for u, w in zip(us, vs):
        nbrs[u][nd[u]] = w
        nd[u] += 1
        nbrs[w][nd[w]] = u
        nd[w] += 1
    return int(tree_code_c(n, nbrs, nd))


def prufer_tree_codes(int n):
    cdef int k = n - 2
    cdef long long total = 1, idx
    cdef int seq[MAXN]
    cdef int degree[MAXN]
    cdef int nbrs[MAXN][MAXN]
    cdef int nd[MAXN]
    cdef int x, v, leaf, pos, r0, r1
    if n < 2 or n > MAXN:
        raise ValueError(f"prufer_tree_codes supports 2 <= n <= {MAXN}")
    for x in range(k):
        total *= n
        seq[x] = 0
    codes = np.empty(total, dtype=np.uint64)
    cdef uint64_t[:] out = codes
    with nogil:
        for idx in range(total):
            for v in range(n):
                degree[v] = 1
                nd[v] = 0
            for x in range(k):
                degree[seq[x]] += 1
            for x in range(k):
                leaf = 0
                while degree[leaf] != 1:
                    leaf += 1
                v = seq[x]
                nbrs[leaf][nd[leaf]] = v
                nd[leaf] += 1
                nbrs[v][nd[v]] = leaf
                nd[v] += 1
                degree[leaf] = 0
                degree[v] -= 1
            r0 = -1
            r1 = -1
            for v in range(n):
                if degree[v] == 1:
                    if r0 < 0:
                        r0 = v
                    else:
                        r1 = v
            nbrs[r0][nd[r0]] = r1
            nd[r0] += 1
            nbrs[r1][nd[r1]] = r0
            nd[r1] += 1
            out[idx] = tree_code_c(n, nbrs, nd)
            pos = k - 1
            while pos >= 0:
                seq[pos] += 1
                if seq[pos] < n:
                    break
                seq[pos] = 0
                pos -= 1
    return codes
