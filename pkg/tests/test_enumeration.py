import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hindex.constructions import complete, path, star
from hindex.enumeration import (
    XorShift64Star,
    all_connected_labeled_graphs,
    all_free_trees,
    free_tree_level_sequences,
    graph_to_mask,
    level_sequence_to_graph,
    mask_to_graph,
    prufer_decode,
    prufer_tree_oracle,
    random_connected_graph,
    random_connected_sample,
)
from hindex.graph import Graph, GraphError, canonical_form, is_connected, is_tree

# free trees on n = 1..16 vertices
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]


def test_level_sequence_to_graph():
    assert level_sequence_to_graph([0, 1, 2, 3]) == path(4)
    assert level_sequence_to_graph([0, 1, 1, 1]) == star(4)
    assert level_sequence_to_graph([0]) == Graph(1)
    with pytest.raises(GraphError):
        level_sequence_to_graph([0, 2])
    with pytest.raises(GraphError):
        level_sequence_to_graph([1, 2])


def test_level_sequences_are_valid():
    for n in range(1, 11):
        for seq in free_tree_level_sequences(n):
            assert seq[0] == 0 and len(seq) == n
            assert all(1 <= seq[i] <= seq[i - 1] + 1 for i in range(1, n))


def test_small_tree_sets():
    assert {canonical_form(t) for t in all_free_trees(4)} == {canonical_form(path(4)), canonical_form(star(4))}


@pytest.mark.parametrize("n", range(1, 14))
def test_tree_counts(n):
    trees = list(all_free_trees(n))
    assert len(trees) == TREE_COUNTS[n - 1]
    assert all(is_tree(t) and t.n == n for t in trees)
    assert len({canonical_form(t) for t in trees}) == len(trees)


@pytest.mark.slow
def test_tree_counts_large():
    assert sum(1 for _ in all_free_trees(16)) == 19320


def test_tree_order_deterministic():
    assert list(free_tree_level_sequences(9)) == list(free_tree_level_sequences(9))


def test_tree_range():
    with pytest.raises(GraphError):
        next(all_free_trees(0))
    with pytest.raises(GraphError):
        next(all_free_trees(17))


def prufer_encode(g):
    """Textbook encoder, used only to check the decoder is a bijection."""
    adj = [set(s) for s in g.adj]
    seq = []
    for _ in range(g.n - 2):
        leaf = min(v for v in range(g.n) if len(adj[v]) == 1)
        (nb,) = adj[leaf]
        seq.append(nb)
        adj[nb].discard(leaf)
        adj[leaf].clear()
    return seq


@pytest.mark.parametrize("n", [3, 4, 5])
def test_prufer_bijection(n):
    seen = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        t = prufer_decode(list(seq), n)
        assert is_tree(t)
        assert prufer_encode(t) == list(seq)
        seen.add(t)
    assert len(seen) == n ** (n - 2)


def test_prufer_oracle_counts():
    assert prufer_tree_oracle(2)[0] == 1
    assert prufer_tree_oracle(4)[0] == 2
    assert prufer_tree_oracle(6)[0] == 6
    assert prufer_tree_oracle(7)[0] == 11
    assert prufer_tree_oracle(8)[0] == 23
    with pytest.raises(GraphError):
        prufer_tree_oracle(10)


@pytest.mark.parametrize("n", range(2, 9))
def test_free_trees_match_prufer_oracle(n):
    count, forms = prufer_tree_oracle(n)
    mine = {canonical_form(t) for t in all_free_trees(n)}
    assert count == len(mine) and forms == mine


def test_mask_conversion():
    g = Graph(5, [(0, 4), (1, 2), (3, 4)])
    assert mask_to_graph(5, graph_to_mask(g)) == g
    for mask in range(64):
        assert graph_to_mask(mask_to_graph(4, mask)) == mask


def test_connected_labeled_counts():
    assert [sum(1 for _ in all_connected_labeled_graphs(n)) for n in (1, 2, 3, 4, 5)] == [1, 1, 4, 38, 728]
    for n in (3, 4):
        brute = 0
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            if is_connected(Graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])):
                brute += 1
        assert brute == sum(1 for _ in all_connected_labeled_graphs(n))
    assert all(is_connected(g) for g in all_connected_labeled_graphs(5))
    with pytest.raises(GraphError):
        next(all_connected_labeled_graphs(8))


def test_xorshift_reference_values():
    rng = XorShift64Star(0)
    first = [rng.next_u64() for _ in range(3)]
    again = XorShift64Star(0)
    assert first == [again.next_u64() for _ in range(3)]
    assert len(set(first)) == 3 and all(0 <= x < 1 << 64 for x in first)
    assert XorShift64Star(1).next_u64() != XorShift64Star(2).next_u64()
    with pytest.raises(ValueError):
        XorShift64Star(-1)


def test_xorshift_below_is_roughly_uniform():
    rng = XorShift64Star(99)
    counts = [0] * 6
    for _ in range(6000):
        counts[rng.below(6)] += 1
    assert min(counts) > 850 and max(counts) < 1150


def test_random_connected_graph_edge_cases():
    t = random_connected_graph(10, 9, 5)
    assert is_tree(t)
    assert random_connected_graph(6, 15, 1) == complete(6) == random_connected_graph(6, 15, 2)
    assert random_connected_graph(1, 0, 3) == Graph(1)
    with pytest.raises(GraphError):
        random_connected_graph(5, 3, 0)
    with pytest.raises(GraphError):
        random_connected_graph(5, 11, 0)


@settings(max_examples=60)
@given(st.integers(2, 12), st.data(), st.integers(0, (1 << 64) - 1))
def test_random_connected_graph_properties(n, data, seed):
    m = data.draw(st.integers(n - 1, n * (n - 1) // 2))
    g = random_connected_graph(n, m, seed)
    assert g.n == n and g.m == m and is_connected(g)
    assert random_connected_graph(n, m, seed) == g


def test_random_sample_deterministic():
    a = [g.edges for g in random_connected_sample(50, 7, 12, 42)]
    b = [g.edges for g in random_connected_sample(50, 7, 12, 42)]
    c = [g.edges for g in random_connected_sample(50, 7, 12, 43)]
    assert a == b and a != c
    assert all(7 <= g.n <= 12 and is_connected(g) for g in random_connected_sample(50, 7, 12, 42))
