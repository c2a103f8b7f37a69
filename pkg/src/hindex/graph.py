"""Simple undirected graphs, structural predicates, graph6 I/O and canonical forms."""

from __future__ import annotations

from collections import deque
from itertools import permutations
from typing import Iterable, Optional, Sequence

CANONICAL_MAX_N = 16
GRAPH6_MAX_N = 62


class GraphError(ValueError):
    """Invalid graph construction or query."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour set of ``v``; ``edges`` lists every edge once
    as ``(u, v)`` with ``u < v``, sorted.
    """

    __slots__ = ("n", "adj", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        norm = []
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            adj[u].add(v)
            adj[v].add(u)
            norm.append((u, v) if u < v else (v, u))
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)
        self.edges = tuple(sorted(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} out of range for n={n}")


def new_graph(n: int) -> Graph:
    return Graph(n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a copy of ``g`` with edge ``uv`` added."""
    return Graph(g.n, g.edges + ((u, v),))


def degree(g: Graph, v: int) -> int:
    _check_vertex(g.n, v)
    return len(g.adj[v])


def reachable(g: Graph, start: int, removed: Optional[tuple[int, int]] = None) -> set[int]:
    """Vertices reachable from ``start``; ``removed`` is an edge treated as absent."""
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if removed is not None and {u, w} == set(removed):
                continue
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(reachable(g, 0)) == g.n


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges)


def bipartition(g: Graph) -> Optional[list[int]]:
    """2-colouring of ``g`` as a colour list, or ``None`` if not bipartite."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour


def is_complete_bipartite(g: Graph) -> Optional[tuple[int, int]]:
    """Part sizes ``(a, b)`` with ``a <= b`` if ``g`` is some K_{a,b}, else ``None``."""
    if g.n < 2 or not is_connected(g):
        return None
    colour = bipartition(g)
    if colour is None:
        return None
    a = colour.count(0)
    b = g.n - a
    if g.m != a * b:
        return None
    return (min(a, b), max(a, b))


# graph6 ---------------------------------------------------------------------


def _pairs(n: int):
    # graph6 bit order: columns of the upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _pairs(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip("\n").strip("\r")
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty input", 0)
    code = ord(s[0])
    if code == 126:
        raise Graph6Error("long-form header (n > 62) not supported", 0)
    if not 63 <= code <= 125:
        raise Graph6Error(f"invalid header byte {s[0]!r}", 0)
    n = code - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated: expected {nbytes} data bytes, found {len(body)}", 1 + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after adjacency data", 1 + nbytes)
    bits = []
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"invalid data byte {ch!r}", 1 + k)
        bits.extend((val >> (5 - t)) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits", nbytes)
    edges = [pair for pair, b in zip(_pairs(n), bits) if b]
    return Graph(n, edges)


# canonical form -------------------------------------------------------------


def _adjacency_code(g: Graph, order: Sequence[int]) -> int:
    """graph6 bit string of ``g`` relabeled so ``order[k]`` becomes vertex ``k``."""
    code = 0
    adj = g.adj
    for j in range(1, g.n):
        aj = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (order[i] in aj)
    return code


def _refine(adj, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition."""
    changed = True
    while changed:
        changed = False
        cell_of = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[cell_of[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            if len(sig) > 1:
                changed = True
                for key in sorted(sig):
                    new_cells.append(sig[key])
            else:
                new_cells.append(cell)
        cells = new_cells
    return cells


def _twins(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] - {v} == g.adj[v] - {u}


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order whose relabeled adjacency string is the canonical one.

    Individualization/refinement search over equitable partitions.  Branches
    for twin vertices (equal neighbourhoods apart from each other) are pruned,
    since swapping twins is an automorphism fixing the current partition.
    """
    if g.n > CANONICAL_MAX_N:
        raise GraphError(f"canonical form supports n <= {CANONICAL_MAX_N}, got {g.n}")
    adj = g.adj
    best: list = [None, None]

    def search(cells):
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _adjacency_code(g, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(g, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    if g.n == 0:
        return []
    search([list(range(g.n))])
    return best[1]


def canonical_form(g: Graph) -> str:
    """graph6 string shared by exactly the graphs isomorphic to ``g``."""
    order = canonical_labeling(g)
    perm = [0] * g.n
    for k, v in enumerate(order):
        perm[v] = k
    return to_graph6(g.relabel(perm))


def canonical_form_bruteforce(g: Graph) -> str:
    """Minimum adjacency string over all ``n!`` labelings (small ``n`` only)."""
    if g.n > 8:
        raise GraphError("brute-force canonical form limited to n <= 8")
    best = min(permutations(range(g.n)), key=lambda order: _adjacency_code(g, order), default=())
    perm = [0] * g.n
    for k, v in enumerate(best):
        perm[v] = k
    return to_graph6(g.relabel(perm))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
