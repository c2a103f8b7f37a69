"""Extremal trees for the harmonic index by exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enumeration import all_free_trees
from .graph import GraphError, canonical_form
from .invariants import decimal_rendering, format_rational, harmonic_index

EXTREMAL_MAX_N = 14


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    rank: str  # "min", "max" or "second_max"
    value: Fraction
    attaining_set: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "value": format_rational(self.value),
            "decimal": decimal_rendering(self.value),
            "attaining_set": list(self.attaining_set),
        }


def tree_values(n: int) -> dict[Fraction, list[str]]:
    """Distinct H values over trees on ``n`` vertices -> canonical graph6 of the attainers."""
    values: dict[Fraction, list[str]] = {}
    for t in all_free_trees(n):
        values.setdefault(harmonic_index(t), []).append(canonical_form(t))
    return values


def extremal_records(n_max: int, n_min: int = 3) -> list[ExtremalRecord]:
    if not 3 <= n_min <= n_max <= EXTREMAL_MAX_N:
        raise GraphError(f"extremal search needs 3 <= n <= {EXTREMAL_MAX_N}, got {n_min}..{n_max}")
    records = []
    for n in range(n_min, n_max + 1):
        values = tree_values(n)
        ordered = sorted(values)
        ranks = [("min", ordered[0]), ("max", ordered[-1])]
        if len(ordered) > 1:
            ranks.append(("second_max", ordered[-2]))
        for rank, value in ranks:
            records.append(ExtremalRecord(n, rank, value, tuple(sorted(values[value]))))
    return records
