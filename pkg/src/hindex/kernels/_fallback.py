"""Pure-Python kernels; same signatures and results as the compiled ``_core``."""

import numpy as np

BACKEND = "python"


def _pair_tables(n):
    us, vs = [], []
    for j in range(1, n):
        for i in range(j):
            us.append(i)
            vs.append(j)
    return us, vs


def scan_connected(n, start, stop, two_l_over):
    """Statistics for every connected graph whose edge mask lies in [start, stop).

    ``two_l_over[s]`` is ``2L/s`` for the common scale ``L``; the returned
    ``h_scaled`` is the harmonic index times ``L``.
    """
    us, vs = _pair_tables(n)
    npairs = len(us)
    full = (1 << n) - 1
    rows = []
    for mask in range(start, stop):
        adj = [0] * n
        k = 0
        bits = mask
        while bits:
            if bits & 1:
                u, v = us[k], vs[k]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bits >>= 1
            k += 1
        if n > 1:
            reach = 1
            while True:
                grow = reach
                r = reach
                while r:
                    low = r & -r
                    grow |= adj[low.bit_length() - 1]
                    r ^= low
                if grow == reach:
                    break
                reach = grow
            if reach != full:
                continue
        deg = [a.bit_count() for a in adj]
        m1 = sum(d * d for d in deg)
        h = 0
        smin = 1 << 30
        smax = 0
        tri_free = 1
        for k in range(npairs):
            if mask >> k & 1:
                u, v = us[k], vs[k]
                s = deg[u] + deg[v]
                h += two_l_over[s]
                if s < smin:
                    smin = s
                if s > smax:
                    smax = s
                if adj[u] & adj[v]:
                    tri_free = 0
        if smax == 0:
            smin = 0
        a = b = 0
        if n >= 2:
            side_b = adj[0]
            side_a = full & ~side_b
            ok = side_b != 0
            for v in range(n):
                want = side_b if side_a >> v & 1 else side_a
                if adj[v] != want:
                    ok = False
                    break
            if ok:
                a, b = sorted((side_a.bit_count(), side_b.bit_count()))
        rows.append((mask, mask.bit_count(), m1, h, smin, smax, tri_free, a, b))
    cols = list(zip(*rows)) if rows else [()] * 9
    return (
        np.array(cols[0], dtype=np.int64),
        np.array(cols[1], dtype=np.int32),
        np.array(cols[2], dtype=np.int32),
        np.array(cols[3], dtype=np.int64),
        np.array(cols[4], dtype=np.int32),
        np.array(cols[5], dtype=np.int32),
        np.array(cols[6], dtype=np.uint8),
        np.array(cols[7], dtype=np.int32),
        np.array(cols[8], dtype=np.int32),
    )


def _rooted_code(n, nbrs, root):
    parent = [-1] * n
    order = [root]
    parent[root] = root
    for v in order:
        for w in nbrs[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    code = [0] * n
    length = [0] * n
    kids = [[] for _ in range(n)]
    for v in reversed(order):
        c, ln = 1, 1
        for cl, cc in sorted(kids[v]):
            c = (c << cl) | cc
            ln += cl
        code[v] = c << 1
        length[v] = ln + 1
        if v != root:
            kids[parent[v]].append((length[v], code[v]))
    return code[root]


def tree_code(n, us, vs):
    """Centre-rooted parenthesis code of a tree, as an integer of ``2n`` bits."""
    if n == 1:
        return 2
    nbrs = [[] for _ in range(n)]
    for u, v in zip(us, vs):
        nbrs[u].append(v)
        nbrs[v].append(u)
    deg = [len(x) for x in nbrs]
    layer = [v for v in range(n) if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in nbrs[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_rooted_code(n, nbrs, c) for c in layer)


def prufer_tree_codes(n):
    """Tree code of every labeled tree on ``n >= 2`` vertices, in Prüfer-index order."""
    k = n - 2
    total = n**k
    codes = np.empty(total, dtype=np.uint64)
    seq = [0] * k
    for idx in range(total):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        us, vs = [], []
        for x in seq:
            leaf = degree.index(1)
            us.append(leaf)
            vs.append(x)
            degree[leaf] = 0
            degree[x] -= 1
        rest = [v for v in range(n) if degree[v] == 1]
        us.append(rest[0])
        vs.append(rest[1])
        codes[idx] = tree_code(n, us, vs)
        # odometer, last digit fastest
        for pos in range(k - 1, -1, -1):
            seq[pos] += 1
            if seq[pos] < n:
                break
            seq[pos] = 0
    return codes
