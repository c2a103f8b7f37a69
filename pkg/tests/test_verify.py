from fractions import Fraction

import pytest

from hindex.constructions import PathAttachment, SpiderSpec, attach_paths, complete, cycle, path, spider, star
from hindex.graph import Graph, parse_graph6, to_graph6
from hindex.invariants import harmonic_index
from hindex.verify import (
    CLAIMS,
    EXACT,
    INVERTED,
    Budget,
    Counterexample,
    check_cauchy_schwarz,
    check_edge_removal,
    check_path_shift,
    check_second_max,
    check_star_min,
    check_path_max,
    check_tree_shift,
    check_two_m_over_n,
    edge_removal_eligible,
    pendant_paths,
    recheck,
    run_claim,
    run_suite,
    split_tree_at,
)

SMALL = Budget(tree_n_max=9, random_samples=200, lemma_n_max=5, shift_base_n_max=4, shift_len_max=3, two_m_n_max=6, cs_n_max=5)


def test_registry_ids():
    assert sorted(CLAIMS) == [
        "COR1_STAR_MIN",
        "COR2_PATH_MAX",
        "EQ_2M_OVER_N",
        "EQ_CS_M1",
        "LEM_EDGE_REMOVAL",
        "SEC_MAX_SPIDER",
        "THM1_PATH_SHIFT",
    ]


def test_tree_checks():
    assert check_star_min(star(8)) and check_star_min(path(8))
    assert check_path_max(path(8)) and check_path_max(star(8))
    assert check_second_max(spider(SpiderSpec(3, 2, 2)))
    assert check_second_max(spider(SpiderSpec(4, 2, 1)))
    assert check_second_max(path(8))
    assert not check_star_min(path(8), INVERTED)


def test_edge_removal_preconditions():
    assert edge_removal_eligible(path(5)) is None  # G - e disconnected
    assert edge_removal_eligible(star(5)) is None  # leaf endpoint
    assert edge_removal_eligible(cycle(5)) == (0, 1)
    assert check_edge_removal(cycle(5)) and check_edge_removal(complete(5))


def test_edge_removal_counterexample_values():
    # triangle 0-1-2 with a pendant vertex at 0; values by direct summation
    g = parse_graph6("C{")
    assert g == Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert edge_removal_eligible(g) == (0, 1)
    assert harmonic_index(g) == 2 * Fraction(2, 5) + 2 * Fraction(2, 4) == Fraction(9, 5)
    assert harmonic_index(path(4)) == Fraction(11, 6)
    assert not check_edge_removal(g)


def test_path_shift_check():
    assert check_path_shift(complete(3), 0, 1, 1)
    assert check_path_shift(path(2), 0, 3, 2)
    assert not check_path_shift(complete(3), 0, 2, 1, INVERTED)


def test_tree_shift_decomposition():
    t = spider(SpiderSpec(3, 2, 1))
    paths = pendant_paths(t, 0)
    assert sorted(map(len, paths)) == [1, 2, 3]
    base, w = split_tree_at(t, 0, paths[0], paths[1])
    rebuilt = attach_paths(PathAttachment(base, w, len(paths[0]), len(paths[1])))
    assert harmonic_index(rebuilt) == harmonic_index(t)
    assert check_tree_shift(t, 0)


def test_bound_checks():
    for g in (complete(4), cycle(6), star(5), path(5), Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])):
        assert check_two_m_over_n(g) and check_cauchy_schwarz(g)


@pytest.mark.parametrize("claim_id", ["COR1_STAR_MIN", "COR2_PATH_MAX", "SEC_MAX_SPIDER", "THM1_PATH_SHIFT", "EQ_2M_OVER_N", "EQ_CS_M1"])
def test_claims_pass_small_budget(claim_id):
    r = run_claim(claim_id, SMALL)
    assert r.passed and r.counterexample is None and r.instances > 0


def test_edge_removal_claim_reports_counterexample():
    r = run_claim("LEM_EDGE_REMOVAL", SMALL)
    assert not r.passed
    assert r.counterexample.graph6 == "C{"
    assert recheck("LEM_EDGE_REMOVAL", r.counterexample) is False


@pytest.mark.parametrize("claim_id", sorted(CLAIMS))
def test_inverted_comparator_is_caught(claim_id):
    r = run_claim(claim_id, SMALL, comparator="inverted")
    assert not r.passed and r.counterexample is not None
    parse_graph6(r.counterexample.graph6)
    assert recheck(claim_id, r.counterexample, "inverted") is False


def test_mutant_counterexample_holds_under_exact_checks():
    r = run_claim("THM1_PATH_SHIFT", SMALL, comparator="inverted")
    assert recheck("THM1_PATH_SHIFT", r.counterexample, "exact") is True


def test_missing_attainer_recheck():
    ex = Counterexample(to_graph6(star(6)), {"n": 6, "reason": "missing"})
    assert recheck("COR1_STAR_MIN", ex) is True


def test_suite_sorted_and_deterministic():
    ids = ["EQ_CS_M1", "COR1_STAR_MIN"]
    a = run_suite(ids, SMALL)
    b = run_suite(ids, SMALL)
    assert [r.claim_id for r in a] == sorted(ids)
    assert [r.universe for r in a] == [r.universe for r in b]
    with pytest.raises(KeyError):
        run_suite(["NOPE"], SMALL)


def test_result_json_schema():
    r = run_claim("LEM_EDGE_REMOVAL", SMALL).to_json()
    assert set(r) == {"claim_id", "universe", "instances", "passed", "counterexample", "elapsed_ms"}
    assert r["counterexample"]["graph6"] == "C{"
    ok = run_claim("COR1_STAR_MIN", SMALL).to_json()
    assert "counterexample" not in ok


def test_parallel_matches_serial():
    ids = ["COR2_PATH_MAX", "EQ_2M_OVER_N"]
    serial = run_suite(ids, SMALL)
    parallel = run_suite(ids, SMALL, jobs=2)
    assert [(r.claim_id, r.passed, r.instances, r.universe) for r in serial] == [
        (r.claim_id, r.passed, r.instances, r.universe) for r in parallel
    ]
