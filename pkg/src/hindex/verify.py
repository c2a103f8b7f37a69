"""Claim registry: every bound and extremal statement bound to a test universe.

Each claim exposes a per-instance ``check`` (used for standalone re-checks of
counterexamples) and a ``run`` over its universe.  Comparisons go through a
:class:`Comparator` so the harness can be self-tested with inverted checks.
"""

from __future__ import annotations

import json
import operator
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

import numpy as np

from .bounds import ERRATA, spider_second_max_value, tree_extremal_values
from .constructions import PathAttachment, SpiderSpec, attach_paths, path, remove_edge, spider, spider_legs, star
from .enumeration import all_free_trees, connected_blocks, mask_to_graph, random_connected_sample
from .graph import Graph, canonical_form, is_complete_bipartite, is_connected, is_triangle_free, parse_graph6, to_graph6
from .invariants import edge_degree_sums, first_zagreb, harmonic_index, min_weight_edge

DEFAULT_SEED = 20120301
DEFAULT_TREE_N_MAX = 12
DEFAULT_RANDOM_SAMPLES = 10_000


@dataclass(frozen=True)
class Comparator:
    """``lt``/``le`` used for every asserted inequality (scalars or numpy arrays)."""

    name: str
    lt: Callable
    le: Callable


EXACT = Comparator("exact", operator.lt, operator.le)
INVERTED = Comparator("inverted", operator.gt, operator.ge)
COMPARATORS = {c.name: c for c in (EXACT, INVERTED)}


@dataclass
class Budget:
    seed: int = DEFAULT_SEED
    tree_n_max: int = DEFAULT_TREE_N_MAX
    random_samples: int = DEFAULT_RANDOM_SAMPLES
    random_n_min: int = 7
    random_n_max: int = 12
    lemma_n_max: int = 6
    shift_base_n_max: int = 5
    shift_len_max: int = 4
    two_m_n_max: int = 7
    cs_n_max: int = 6


@dataclass
class Counterexample:
    graph6: str
    context: dict = field(default_factory=dict)


@dataclass
class VerificationResult:
    claim_id: str
    universe: dict
    instances: int
    passed: bool
    counterexample: Optional[Counterexample]
    elapsed_ms: float

    def to_json(self) -> dict:
        out = {
            "claim_id": self.claim_id,
            "universe": self.universe,
            "instances": self.instances,
            "passed": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.counterexample is not None:
            out["counterexample"] = asdict(self.counterexample)
        return out


class _Failed(Exception):
    def __init__(self, g: Graph, **context):
        self.example = Counterexample(to_graph6(g), context)


@lru_cache(maxsize=None)
def _star_form(n: int) -> str:
    return canonical_form(star(n))


@lru_cache(maxsize=None)
def _path_form(n: int) -> str:
    return canonical_form(path(n))


def _random_graphs(budget: Budget) -> Iterable[Graph]:
    return random_connected_sample(budget.random_samples, budget.random_n_min, budget.random_n_max, budget.seed)


# per-instance checks ------------------------------------------------------------


def check_star_min(t: Graph, cmp: Comparator = EXACT) -> bool:
    lo, _ = tree_extremal_values(t.n)
    h = harmonic_index(t)
    if canonical_form(t) == _star_form(t.n):
        return h == lo
    return bool(cmp.lt(lo, h))


def check_path_max(t: Graph, cmp: Comparator = EXACT) -> bool:
    _, hi = tree_extremal_values(t.n)
    h = harmonic_index(t)
    if canonical_form(t) == _path_form(t.n):
        return h == hi
    return bool(cmp.lt(h, hi))


def second_max_attainer(t: Graph) -> Optional[tuple[int, int, int]]:
    """Leg lengths if ``t`` is a spider with every leg of length >= 2."""
    legs = spider_legs(t)
    if legs is None or legs[2] < 2:
        return None
    if canonical_form(t) != canonical_form(spider(SpiderSpec(*legs))):
        return None
    return legs


def check_second_max(t: Graph, cmp: Comparator = EXACT) -> bool:
    target = spider_second_max_value(t.n)
    h = harmonic_index(t)
    if canonical_form(t) == _path_form(t.n):
        return bool(cmp.lt(target, h))
    if second_max_attainer(t) is not None:
        return h == target
    return bool(cmp.lt(h, target))


def edge_removal_eligible(g: Graph) -> Optional[tuple[int, int]]:
    """The minimal-weight edge if the lemma's preconditions hold for it."""
    if g.m == 0:
        return None
    u, v = min_weight_edge(g).edge
    if len(g.adj[u]) < 2 or len(g.adj[v]) < 2:
        return None
    reduced = remove_edge(g, u, v)
    if not is_connected(reduced):
        return None
    return (u, v)


def check_edge_removal(g: Graph, cmp: Comparator = EXACT) -> bool:
    e = edge_removal_eligible(g)
    if e is None:
        return True
    return bool(cmp.lt(harmonic_index(remove_edge(g, *e)), harmonic_index(g)))


def check_path_shift(base: Graph, w: int, p: int, q: int, cmp: Comparator = EXACT) -> bool:
    split = attach_paths(PathAttachment(base, w, p, q))
    if len(split.adj[w]) < 3:
        return True
    merged = attach_paths(PathAttachment(base, w, p + q, 0))
    return bool(cmp.lt(harmonic_index(split), harmonic_index(merged)))


def pendant_paths(t: Graph, w: int) -> list[list[int]]:
    """Branches at ``w`` that are pendant paths, each as its vertex list from ``w`` outwards."""
    out = []
    for x in sorted(t.adj[w]):
        prev, cur, verts = w, x, [x]
        while len(t.adj[cur]) == 2:
            (cur_next,) = t.adj[cur] - {prev}
            prev, cur = cur, cur_next
            verts.append(cur)
        if len(t.adj[cur]) == 1:
            out.append(verts)
    return out


def split_tree_at(t: Graph, w: int, first: list[int], second: list[int]) -> tuple[Graph, int]:
    """Remove two pendant paths at ``w``; returns (base, new index of ``w``)."""
    gone = set(first) | set(second)
    keep = [v for v in range(t.n) if v not in gone]
    index = {v: k for k, v in enumerate(keep)}
    base = Graph(len(keep), [(index[u], index[v]) for u, v in t.edges if u in index and v in index])
    return base, index[w]


def check_tree_shift(t: Graph, w: int, cmp: Comparator = EXACT) -> bool:
    """Every pair of pendant paths at a branching vertex ``w`` of tree ``t``."""
    if len(t.adj[w]) < 3:
        return True
    paths = pendant_paths(t, w)
    h = harmonic_index(t)
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            base, w2 = split_tree_at(t, w, paths[i], paths[j])
            merged = attach_paths(PathAttachment(base, w2, len(paths[i]) + len(paths[j]), 0))
            if not cmp.lt(h, harmonic_index(merged)):
                return False
    return True


def check_two_m_over_n(g: Graph, cmp: Comparator = EXACT) -> bool:
    sums = edge_degree_sums(g)
    tri_free = is_triangle_free(g)
    hyp = all(s <= g.n for s in sums)
    if not hyp:
        # triangle-free graphs always satisfy the hypothesis
        return not tri_free
    h = harmonic_index(g)
    bound = Fraction(2 * g.m, g.n)
    equality = h == bound
    if not cmp.le(bound, h) or equality != all(s == g.n for s in sums):
        return False
    if tri_free and equality != (is_complete_bipartite(g) is not None):
        return False
    return True


def check_cauchy_schwarz(g: Graph, cmp: Comparator = EXACT) -> bool:
    if g.m == 0:
        return True
    h = harmonic_index(g)
    bound = Fraction(2 * g.m * g.m, first_zagreb(g))
    if not cmp.le(bound, h):
        return False
    return (h == bound) == (len(set(edge_degree_sums(g))) == 1)


# claims -----------------------------------------------------------------------


class Claim:
    claim_id: str = ""

    def run(self, budget: Budget, cmp: Comparator) -> tuple[dict, int]:
        raise NotImplementedError

    def recheck(self, g: Graph, context: dict, cmp: Comparator) -> bool:
        raise NotImplementedError


class TreeClaim(Claim):
    n_min = 3
    check: Callable[[Graph, Comparator], bool]

    def run(self, budget, cmp):
        count = 0
        for n in range(self.n_min, budget.tree_n_max + 1):
            trees = list(all_free_trees(n))
            for t in trees:
                count += 1
                if not type(self).check(t, cmp):
                    raise _Failed(t, n=n)
            self.check_coverage(n, trees)
        return {"description": f"all free trees, n={self.n_min}..{budget.tree_n_max}", "graphs": count}, count

    def check_coverage(self, n: int, trees: list[Graph]) -> None:
        pass

    def recheck(self, g, context, cmp):
        if context.get("reason") == "missing":
            trees = list(all_free_trees(g.n))
            forms = {canonical_form(t) for t in trees}
            return canonical_form(g) in forms
        return type(self).check(g, cmp)


def _require_present(n: int, trees: list[Graph], g: Graph) -> None:
    if canonical_form(g) not in {canonical_form(t) for t in trees}:
        raise _Failed(g, n=n, reason="missing")


class StarMin(TreeClaim):
    claim_id = "COR1_STAR_MIN"
    check = staticmethod(check_star_min)

    def check_coverage(self, n, trees):
        _require_present(n, trees, star(n))


class PathMax(TreeClaim):
    claim_id = "COR2_PATH_MAX"
    check = staticmethod(check_path_max)

    def check_coverage(self, n, trees):
        _require_present(n, trees, path(n))


class SecondMaxSpider(TreeClaim):
    claim_id = "SEC_MAX_SPIDER"
    n_min = 7
    check = staticmethod(check_second_max)

    def check_coverage(self, n, trees):
        found = {second_max_attainer(t) for t in trees} - {None}
        for a in range(2, n):
            for b in range(2, a + 1):
                c = n - 1 - a - b
                if 2 <= c <= b and (a, b, c) not in found:
                    raise _Failed(spider(SpiderSpec(a, b, c)), n=n, reason="missing")


class EdgeRemoval(Claim):
    claim_id = "LEM_EDGE_REMOVAL"

    def run(self, budget, cmp):
        graphs = checked = 0

        def visit(g, origin):
            nonlocal graphs, checked
            graphs += 1
            if edge_removal_eligible(g) is not None:
                checked += 1
                if not check_edge_removal(g, cmp):
                    raise _Failed(g, origin=origin)

        for n in range(3, budget.lemma_n_max + 1):
            for block in connected_blocks(n):
                for mask in block.mask:
                    visit(mask_to_graph(n, int(mask)), "labeled")
        for g in _random_graphs(budget):
            visit(g, "random")
        universe = {
            "description": (
                f"connected labeled graphs n=3..{budget.lemma_n_max}; {budget.random_samples} random "
                f"connected graphs n={budget.random_n_min}..{budget.random_n_max} (seed {budget.seed})"
            ),
            "graphs": graphs,
            "eligible": checked,
        }
        return universe, checked

    def recheck(self, g, context, cmp):
        return check_edge_removal(g, cmp)


class PathShift(Claim):
    claim_id = "THM1_PATH_SHIFT"

    def run(self, budget, cmp):
        checked = skipped = 0
        for n in range(2, budget.shift_base_n_max + 1):
            for block in connected_blocks(n):
                for mask in block.mask:
                    base = mask_to_graph(n, int(mask))
                    for w in range(n):
                        for p in range(1, budget.shift_len_max + 1):
                            for q in range(1, p + 1):
                                if len(base.adj[w]) + 2 < 3:
                                    skipped += 1
                                    continue
                                checked += 1
                                if not check_path_shift(base, w, p, q, cmp):
                                    raise _Failed(base, mode="attach", w=w, p=p, q=q)
        tree_checks = 0
        for n in range(4, budget.tree_n_max + 1):
            for t in all_free_trees(n):
                for w in range(n):
                    if len(t.adj[w]) >= 3 and len(pendant_paths(t, w)) >= 2:
                        tree_checks += 1
                        if not check_tree_shift(t, w, cmp):
                            raise _Failed(t, mode="tree", w=w)
        universe = {
            "description": (
                f"connected labeled bases n=2..{budget.shift_base_n_max}, every w, "
                f"1<=q<=p<={budget.shift_len_max}; branching vertices of free trees n<={budget.tree_n_max}"
            ),
            "attachments": checked,
            "ineligible_degree_below_3": skipped,
            "tree_vertices": tree_checks,
        }
        return universe, checked + tree_checks

    def recheck(self, g, context, cmp):
        if context.get("mode") == "tree":
            return check_tree_shift(g, context["w"], cmp)
        return check_path_shift(g, context["w"], context["p"], context["q"], cmp)


def _first_failure(block, ok: np.ndarray, claim_origin: str) -> None:
    bad = np.flatnonzero(~ok)
    if len(bad):
        mask = int(block.mask[bad[0]])
        raise _Failed(mask_to_graph(block.n, mask), origin=claim_origin, mask=mask)


class TwoMOverN(Claim):
    claim_id = "EQ_2M_OVER_N"

    def run(self, budget, cmp):
        graphs = tri_free = in_class = 0
        for n in range(2, budget.two_m_n_max + 1):
            for block in connected_blocks(n):
                graphs += len(block)
                L = block.scale
                hyp = block.sum_max <= n
                tf = block.triangle_free.astype(bool)
                lhs = 2 * block.m.astype(np.int64) * L
                rhs = block.h_scaled * n
                equality = lhs == rhs
                cond = (block.sum_min == n) & (block.sum_max == n)
                kab = block.kab_a > 0
                ok = np.where(hyp, cmp.le(lhs, rhs) & (equality == cond), ~tf)
                ok &= ~tf | (equality == kab)
                _first_failure(block, ok, "labeled")
                tri_free += int(tf.sum())
                in_class += int(hyp.sum())
        universe = {
            "description": f"connected labeled graphs n=2..{budget.two_m_n_max}",
            "graphs": graphs,
            "hypothesis_class": in_class,
            "triangle_free": tri_free,
        }
        return universe, in_class

    def recheck(self, g, context, cmp):
        return check_two_m_over_n(g, cmp)


class CauchySchwarz(Claim):
    claim_id = "EQ_CS_M1"

    def run(self, budget, cmp):
        graphs = 0
        for n in range(2, budget.cs_n_max + 1):
            for block in connected_blocks(n):
                graphs += len(block)
                lhs = 2 * block.m.astype(np.int64) ** 2 * block.scale
                rhs = block.h_scaled * block.m1
                ok = cmp.le(lhs, rhs) & ((lhs == rhs) == (block.sum_min == block.sum_max))
                _first_failure(block, ok, "labeled")
        for g in _random_graphs(budget):
            graphs += 1
            if not check_cauchy_schwarz(g, cmp):
                raise _Failed(g, origin="random")
        universe = {
            "description": (
                f"connected labeled graphs n=2..{budget.cs_n_max}; {budget.random_samples} random "
                f"connected graphs n={budget.random_n_min}..{budget.random_n_max} (seed {budget.seed})"
            ),
            "graphs": graphs,
        }
        return universe, graphs

    def recheck(self, g, context, cmp):
        return check_cauchy_schwarz(g, cmp)


CLAIMS: dict[str, Claim] = {
    c.claim_id: c
    for c in (StarMin(), PathMax(), SecondMaxSpider(), EdgeRemoval(), PathShift(), TwoMOverN(), CauchySchwarz())
}


def run_claim(claim_id: str, budget: Budget, comparator: str = "exact") -> VerificationResult:
    claim = CLAIMS[claim_id]
    cmp = COMPARATORS[comparator]
    t0 = time.perf_counter()
    try:
        universe, instances = claim.run(budget, cmp)
        example = None
    except _Failed as failure:
        universe, instances, example = {"description": "stopped at first counterexample"}, 0, failure.example
    elapsed = (time.perf_counter() - t0) * 1000
    return VerificationResult(claim_id, universe, instances, example is None, example, elapsed)


def run_suite(
    claim_ids: Optional[Iterable[str]] = None,
    budget: Optional[Budget] = None,
    comparator: str = "exact",
    jobs: int = 1,
) -> list[VerificationResult]:
    """Run the selected claims; results sorted by claim id."""
    ids = sorted(claim_ids or CLAIMS)
    unknown = [c for c in ids if c not in CLAIMS]
    if unknown:
        raise KeyError(f"unknown claims: {', '.join(unknown)}")
    budget = budget or Budget()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_claim, ids, [budget] * len(ids), [comparator] * len(ids)))
    else:
        results = [run_claim(c, budget, comparator) for c in ids]
    return sorted(results, key=lambda r: r.claim_id)


def recheck(claim_id: str, example: Counterexample, comparator: str = "exact") -> bool:
    """Re-run one claim's check on a counterexample; ``False`` reproduces the failure."""
    return CLAIMS[claim_id].recheck(parse_graph6(example.graph6), example.context, COMPARATORS[comparator])


def suite_report(results: list[VerificationResult], budget: Budget, comparator: str) -> dict:
    return {
        "seed": budget.seed,
        "comparator": comparator,
        "passed": all(r.passed for r in results),
        "claims": [r.to_json() for r in results],
        "errata": list(ERRATA),
    }


def write_report(path_: str, report: dict) -> None:
    with open(path_, "w") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")
