"""Graph families (paths, stars, complete bipartite graphs, spiders) and the
two transformations whose effect on the harmonic index is verified: deleting
an edge, and attaching pendant paths at a vertex."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, is_connected


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    """Star S_n with centre 0."""
    if n < 1:
        raise GraphError(f"star needs n >= 1, got {n}")
    return Graph(n, ((0, i) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``{0..a-1}`` and ``{a..a+b-1}``."""
    if a < 1 or b < 1:
        raise GraphError(f"part sizes must be positive, got ({a}, {b})")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


@dataclass(frozen=True)
class SpiderSpec:
    """Leg lengths of a spider T(a, b, c), normalized so ``a >= b >= c >= 1``."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        legs = sorted((self.a, self.b, self.c), reverse=True)
        if legs[2] < 1:
            raise GraphError(f"spider legs must be positive, got {legs}")
        object.__setattr__(self, "a", legs[0])
        object.__setattr__(self, "b", legs[1])
        object.__setattr__(self, "c", legs[2])

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + 1


def spider(spec: SpiderSpec) -> Graph:
    """Centre 0 of degree 3 with legs of ``a``, ``b``, ``c`` further vertices."""
    edges = []
    nxt = 1
    for leg in (spec.a, spec.b, spec.c):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(spec.n, edges)


@dataclass(frozen=True)
class PathAttachment:
    base: Graph
    w: int
    p: int
    q: int


def attach_paths(att: PathAttachment) -> Graph:
    """G(p, q): pendant paths on ``p`` and ``q`` new vertices hung from ``w``."""
    g, w, p, q = att.base, att.w, att.p, att.q
    if not 0 <= w < g.n:
        raise GraphError(f"attachment vertex {w} out of range for n={g.n}")
    if g.n < 2 or not is_connected(g):
        raise GraphError("base graph must be connected with at least 2 vertices")
    if p < 0 or q < 0:
        raise GraphError("path lengths must be non-negative")
    edges = list(g.edges)
    nxt = g.n
    for length in (p, q):
        prev = w
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    e = (min(u, v), max(u, v))
    return Graph(g.n, (f for f in g.edges if f != e))


def spider_legs(g: Graph):
    """Leg lengths (descending) if ``g`` is a spider, else ``None``."""
    deg = g.degrees()
    centres = [v for v in range(g.n) if deg[v] == 3]
    if len(centres) != 1 or any(d > 3 or d == 0 for d in deg) or g.m != g.n - 1:
        return None
    centre = centres[0]
    legs = []
    for start in g.adj[centre]:
        prev, cur, length = centre, start, 1
        while deg[cur] == 2:
            (nxt,) = g.adj[cur] - {prev}
            prev, cur = cur, nxt
            length += 1
        if deg[cur] != 1:
            return None
        legs.append(length)
    if sum(legs) + 1 != g.n:
        return None
    return tuple(sorted(legs, reverse=True))
