"""Bounds on the harmonic index with their hypotheses and equality conditions.

All comparisons are exact; equality means rational equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .graph import Graph, GraphError, is_complete_bipartite, is_triangle_free
from .invariants import edge_degree_sums, first_zagreb, format_rational, harmonic_index


class BoundId(str, Enum):
    TWO_M_OVER_N = "TWO_M_OVER_N"
    CAUCHY_SCHWARZ_M1 = "CAUCHY_SCHWARZ_M1"
    TREE_STAR_MIN = "TREE_STAR_MIN"
    TREE_PATH_MAX = "TREE_PATH_MAX"


# Structured warnings carried by every report that asserts a tree extremal value.
ERRATA = (
    {
        "id": "PATH_MAX_COEFFICIENT",
        "printed": "4/3 + (n-3)/4",
        "asserted": "4/3 + (n-3)/2",
        "note": "printed maximum disagrees with H(P_n) evaluated from the definition; e.g. H(P_4) = 11/6",
    },
    {
        "id": "SPIDER_VALUES_HALVED",
        "printed": "3/5 + 3/3 + (n-7)/4 (legs >= 2), and the two other leg cases",
        "asserted": "16/5 + (n-7)/2 (legs >= 2)",
        "note": "printed spider values are exactly half of direct edge-weight summation",
    },
)


@dataclass(frozen=True)
class BoundReport:
    bound_id: BoundId
    hypothesis_holds: bool
    bound_value: Fraction
    index_value: Fraction
    holds: bool
    equality: bool
    equality_condition_holds: bool
    # TWO_M_OVER_N on triangle-free graphs: equality <=> complete bipartite
    bipartite_crosscheck: Optional[bool] = None
    errata: tuple = field(default=())

    def to_json(self) -> dict:
        out = {
            "bound_id": self.bound_id.value,
            "hypothesis_holds": self.hypothesis_holds,
            "bound_value": format_rational(self.bound_value),
            "index_value": format_rational(self.index_value),
            "holds": self.holds,
            "equality": self.equality,
            "equality_condition_holds": self.equality_condition_holds,
        }
        if self.bipartite_crosscheck is not None:
            out["bipartite_crosscheck"] = self.bipartite_crosscheck
        if self.errata:
            out["errata"] = list(self.errata)
        return out


def bound_2m_over_n(g: Graph) -> BoundReport:
    """H >= 2m/n when every edge has deg(u) + deg(v) <= n."""
    if g.n == 0:
        raise GraphError("bound 2m/n undefined for the empty graph")
    sums = edge_degree_sums(g)
    h = harmonic_index(g)
    bound = Fraction(2 * g.m, g.n)
    equality = h == bound
    crosscheck = None
    if is_triangle_free(g):
        crosscheck = equality == (is_complete_bipartite(g) is not None)
    return BoundReport(
        BoundId.TWO_M_OVER_N,
        hypothesis_holds=all(s <= g.n for s in sums),
        bound_value=bound,
        index_value=h,
        holds=h >= bound,
        equality=equality,
        equality_condition_holds=all(s == g.n for s in sums),
        bipartite_crosscheck=crosscheck,
    )


def bound_cauchy_schwarz(g: Graph) -> BoundReport:
    """H >= 2m^2/M1, tight exactly when the edge degree sums are constant."""
    if g.m == 0:
        raise GraphError("Cauchy-Schwarz bound needs at least one edge")
    h = harmonic_index(g)
    bound = Fraction(2 * g.m * g.m, first_zagreb(g))
    return BoundReport(
        BoundId.CAUCHY_SCHWARZ_M1,
        hypothesis_holds=True,
        bound_value=bound,
        index_value=h,
        holds=h >= bound,
        equality=h == bound,
        equality_condition_holds=len(set(edge_degree_sums(g))) == 1,
    )


def tree_extremal_values(n: int) -> tuple[Fraction, Fraction]:
    """(min, max) of H over trees on ``n`` vertices: H(S_n) and H(P_n)."""
    if n < 3:
        raise GraphError(f"tree extremal values need n >= 3, got {n}")
    return Fraction(2 * (n - 1), n), Fraction(4, 3) + Fraction(n - 3, 2)


def spider_second_max_value(n: int) -> Fraction:
    """Common H of the spiders on ``n`` vertices whose legs all have length >= 2."""
    if n < 7:
        raise GraphError(f"second maximum defined for n >= 7, got {n}")
    return Fraction(16, 5) + Fraction(n - 7, 2)


def tree_bound_reports(g: Graph, star_like: bool, path_like: bool) -> list[BoundReport]:
    """Star-minimum and path-maximum reports for a tree on >= 3 vertices.

    ``star_like``/``path_like`` say whether ``g`` is isomorphic to S_n / P_n;
    they are the equality conditions.
    """
    lo, hi = tree_extremal_values(g.n)
    h = harmonic_index(g)
    return [
        BoundReport(BoundId.TREE_STAR_MIN, True, lo, h, h >= lo, h == lo, star_like),
        BoundReport(BoundId.TREE_PATH_MAX, True, hi, h, h <= hi, h == hi, path_like, errata=(ERRATA[0],)),
    ]
