from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hindex.constructions import (
    PathAttachment,
    SpiderSpec,
    attach_paths,
    complete,
    complete_bipartite,
    cycle,
    path,
    remove_edge,
    spider,
    spider_legs,
    star,
)
from hindex.graph import Graph, GraphError, canonical_form, is_connected, is_tree
from hindex.invariants import harmonic_index

from conftest import harmonic_by_hand


def test_small_coincidence():
    k2 = Graph(2, [(0, 1)])
    assert path(2) == star(2) == complete_bipartite(1, 1) == k2


def test_family_labelings():
    assert path(4).edges == ((0, 1), (1, 2), (2, 3))
    assert star(4).edges == ((0, 1), (0, 2), (0, 3))
    assert complete_bipartite(2, 2).edges == ((0, 2), (0, 3), (1, 2), (1, 3))


@pytest.mark.parametrize("n", range(3, 13))
def test_star_harmonic(n):
    assert harmonic_index(star(n)) == Fraction(2 * (n - 1), n)


def test_invalid_sizes():
    for bad in (lambda: path(0), lambda: star(0), lambda: complete_bipartite(0, 3), lambda: cycle(2)):
        with pytest.raises(GraphError):
            bad()
    with pytest.raises(GraphError):
        SpiderSpec(2, 0, 1)


def test_spider_basic():
    assert canonical_form(spider(SpiderSpec(1, 1, 1))) == canonical_form(star(4))
    g = spider(SpiderSpec(2, 3, 1))
    assert g.n == 7 and is_tree(g)
    assert sorted(g.degrees()).count(3) == 1
    assert SpiderSpec(1, 3, 2) == SpiderSpec(3, 2, 1)
    assert spider(SpiderSpec(1, 3, 2)) == spider(SpiderSpec(3, 2, 1))


def test_spider_values():
    assert harmonic_index(spider(SpiderSpec(2, 2, 2))) == 3 * Fraction(2, 5) + 3 * Fraction(2, 3) == Fraction(16, 5)
    for a in range(2, 8):
        for b in range(2, a + 1):
            for c in range(2, b + 1):
                g = spider(SpiderSpec(a, b, c))
                assert harmonic_index(g) == harmonic_by_hand(g.n, g.edges) == Fraction(16, 5) + Fraction(g.n - 7, 2)


def _spider_cases(n):
    one = spider(SpiderSpec(n - 3, 1, 1))
    two = spider(SpiderSpec(n - 4, 2, 1))
    three = spider(SpiderSpec(n - 5, 2, 2))
    return [harmonic_index(g) for g in (one, two, three)]


@pytest.mark.parametrize("n", range(7, 13))
def test_spider_cases_increase_with_balance(n):
    h1, h2, h3 = _spider_cases(n)
    assert harmonic_index(star(n)) < h1 < h2 < h3 < harmonic_index(path(n))
    # direct-summation closed forms for each leg case
    assert h1 == Fraction(2, 5) + 1 + Fraction(2, 3) + Fraction(n - 5, 2)
    assert h2 == Fraction(4, 5) + Fraction(4, 3) + Fraction(1, 2) + Fraction(n - 6, 2)
    assert h3 == Fraction(6, 5) + 2 + Fraction(n - 7, 2)


def test_spider_legs():
    assert spider_legs(spider(SpiderSpec(4, 2, 1))) == (4, 2, 1)
    assert spider_legs(path(5)) is None
    assert spider_legs(star(5)) is None
    assert spider_legs(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])) is None


def test_attach_identity_and_degree():
    k3 = complete(3)
    assert attach_paths(PathAttachment(k3, 0, 0, 0)) == k3
    g = attach_paths(PathAttachment(k3, 0, 2, 1))
    assert g.n == 6 and len(g.adj[0]) == 2 + 1 + 1
    g = attach_paths(PathAttachment(k3, 0, 3, 0))
    assert g.n == 6 and len(g.adj[0]) == 3


def test_attach_paths_value():
    g = attach_paths(PathAttachment(complete(3), 0, 1, 1))
    # deg(0) = 4: (1,2) -> 2/4, (0,1) and (0,2) -> 2/6, two pendants -> 2/5
    expected = harmonic_by_hand(g.n, g.edges)
    assert expected == Fraction(1, 2) + 2 * Fraction(1, 3) + 2 * Fraction(2, 5) == Fraction(59, 30)
    assert harmonic_index(g) == expected


def test_attach_errors():
    with pytest.raises(GraphError):
        attach_paths(PathAttachment(complete(3), 3, 1, 1))
    with pytest.raises(GraphError):
        attach_paths(PathAttachment(Graph(4, [(0, 1), (2, 3)]), 0, 1, 1))
    with pytest.raises(GraphError):
        attach_paths(PathAttachment(Graph(1), 0, 1, 1))


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 3))
def test_attach_symmetric(p, q, w):
    base = Graph(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
    a = attach_paths(PathAttachment(base, w, p, q))
    b = attach_paths(PathAttachment(base, w, q, p))
    assert canonical_form(a) == canonical_form(b)
    assert a.n == base.n + p + q and is_connected(a)
    assert len(a.adj[w]) == len(base.adj[w]) + (p > 0) + (q > 0)


def test_remove_edge():
    assert canonical_form(remove_edge(complete(3), 0, 1)) == canonical_form(path(3))
    for u, v in cycle(4).edges:
        assert canonical_form(remove_edge(cycle(4), u, v)) == canonical_form(path(4))
    g = remove_edge(path(3), 0, 1)
    assert g.n == 3 and not is_connected(g)
    with pytest.raises(GraphError):
        remove_edge(path(3), 0, 2)
    c4 = cycle(4)
    remove_edge(c4, 0, 1)
    assert c4.m == 4
