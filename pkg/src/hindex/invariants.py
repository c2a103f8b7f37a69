"""Degree-based indices: harmonic, Randić and first Zagreb.

Harmonic values are :class:`fractions.Fraction` throughout; only the Randić
index, irrational in general, is a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError

Rational = Fraction


@dataclass(frozen=True)
class EdgeWeight:
    edge: tuple[int, int]
    weight: Fraction


def edge_weight(g: Graph, u: int, v: int) -> Fraction:
    """Harmonic weight 2/(deg u + deg v) of the edge ``uv``."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return Fraction(2, len(g.adj[u]) + len(g.adj[v]))


def edge_degree_sums(g: Graph) -> list[int]:
    deg = g.degrees()
    return [deg[u] + deg[v] for u, v in g.edges]


def harmonic_index(g: Graph) -> Fraction:
    # group by degree sum: one Fraction per distinct denominator
    counts: dict[int, int] = {}
    for s in edge_degree_sums(g):
        counts[s] = counts.get(s, 0) + 1
    return sum((Fraction(2 * c, s) for s, c in counts.items()), Fraction(0))


def randic_index(g: Graph) -> float:
    """Randić index, summed with ``math.fsum``; absolute error at most 1e-12 * m."""
    deg = g.degrees()
    return math.fsum(1.0 / math.sqrt(deg[u] * deg[v]) for u, v in g.edges)


def first_zagreb(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def min_weight_edge(g: Graph) -> EdgeWeight:
    """Edge of smallest harmonic weight, lexicographically first among ties."""
    if g.m == 0:
        raise GraphError("graph has no edges")
    deg = g.degrees()
    # smallest weight is largest degree sum; edges are already sorted
    best = max(g.edges, key=lambda e: (deg[e[0]] + deg[e[1]], -e[0], -e[1]))
    return EdgeWeight(best, Fraction(2, deg[best[0]] + deg[best[1]]))


def format_rational(x: Fraction) -> str:
    """Exact ``p/q`` rendering in lowest terms (``1/1`` for one)."""
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def decimal_rendering(x: Fraction) -> str:
    return f"{float(x):.15g}"
