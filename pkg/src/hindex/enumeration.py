"""Test universes: free trees, labeled connected graphs, seeded random graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from . import kernels
from .graph import Graph, GraphError, canonical_form

FREE_TREE_MAX_N = 16
PRUFER_ORACLE_MAX_N = 9
LABELED_MAX_N = kernels.SCAN_MAX_N
CHUNK = 1 << 16

_MASK64 = (1 << 64) - 1


# level sequences ------------------------------------------------------------


def level_sequence_to_graph(levels: Sequence[int]) -> Graph:
    """Tree whose preorder depths are ``levels`` (vertex ``i`` has depth ``levels[i]``)."""
    if not levels or levels[0] != 0:
        raise GraphError("level sequence must start at depth 0")
    edges = []
    stack = [0]
    for i in range(1, len(levels)):
        d = levels[i]
        if not 1 <= d <= levels[i - 1] + 1:
            raise GraphError(f"invalid depth {d} at position {i}")
        del stack[d:]
        edges.append((stack[-1], i))
        stack.append(i)
    return Graph(len(levels), edges)


def _next_rooted(seq: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    """Successor of a rooted level sequence (Beyer-Hedetniemi step)."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """Split off the subtree of the root's first child: (that subtree re-rooted, the rest)."""
    second = next((i for i in range(2, len(seq)) if seq[i] == 1), len(seq))
    left = [d - 1 for d in seq[1:second]]
    rest = [0] + seq[second:]
    return left, rest


def _next_free(seq: list[int]) -> Optional[list[int]]:
    """Smallest valid free-tree sequence at or after ``seq`` in generation order.

    A sequence is valid when the root is a centroid-compatible canonical root:
    the first subtree is no taller than the rest, and on equal height no larger
    (then lexicographically no larger).
    """
    left, rest = _split(seq)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return seq
    p = len(left)
    nxt = _next_rooted(seq, p)
    if nxt is not None and seq[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail) :] = tail
    return nxt


def free_tree_level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequence of each tree on ``n`` vertices, in generation order.

    Constant amortized time successor scheme of Wright, Richmond, Odlyzko and
    McKay: start from the path rooted at its centre and alternate the rooted
    successor with a repair step that skips non-canonical roots.
    """
    if not 1 <= n <= FREE_TREE_MAX_N:
        raise GraphError(f"free-tree enumeration supports 1 <= n <= {FREE_TREE_MAX_N}, got {n}")
    if n <= 2:
        yield list(range(n))
        return
    seq: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        if seq is not None:
            yield seq
            seq = _next_rooted(seq)


def all_free_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices; deterministic order."""
    for seq in free_tree_level_sequences(n):
        yield level_sequence_to_graph(seq)


# Prüfer oracle ----------------------------------------------------------------


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    if len(seq) != n - 2 or any(not 0 <= x < n for x in seq):
        raise GraphError("invalid Prüfer sequence")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] = 0
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return Graph(n, edges)


def _prufer_from_index(idx: int, n: int) -> list[int]:
    seq = []
    for _ in range(n - 2):
        idx, d = divmod(idx, n)
        seq.append(d)
    return seq[::-1]


def prufer_tree_oracle(n: int) -> tuple[int, set[str]]:
    """Isomorphism classes among all ``n^(n-2)`` labeled trees.

    Every Prüfer sequence is decoded and reduced to a centre-rooted tree code
    (in the kernel); one representative per distinct code is then given its
    general ``canonical_form``.  Returns (class count, canonical-form set).
    """
    if not 2 <= n <= PRUFER_ORACLE_MAX_N:
        raise GraphError(f"Prüfer oracle supports 2 <= n <= {PRUFER_ORACLE_MAX_N}, got {n}")
    codes = kernels.prufer_tree_codes(n)
    _, first = np.unique(codes, return_index=True)
    forms = {canonical_form(prufer_decode(_prufer_from_index(int(i), n), n)) for i in first}
    if len(forms) != len(first):
        raise AssertionError("tree codes and canonical forms disagree on class count")
    return len(forms), forms


# labeled connected graphs ---------------------------------------------------


def mask_to_graph(n: int, mask: int) -> Graph:
    """Graph whose edge ``k`` (graph6 pair order) is present iff bit ``k`` of ``mask`` is set."""
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for i, j in g.edges:
        mask |= 1 << (j * (j - 1) // 2 + i)
    return mask


def connected_blocks(n: int, chunk: int = CHUNK, backend: Optional[str] = None) -> Iterator[kernels.ScanBlock]:
    """Kernel statistics for all connected labeled graphs on ``n`` vertices, by mask range."""
    if not 1 <= n <= LABELED_MAX_N:
        raise GraphError(f"labeled sweeps support 1 <= n <= {LABELED_MAX_N}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    for start in range(0, total, chunk):
        yield kernels.scan_connected(n, start, start + chunk, backend=backend)


def all_connected_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices, in edge-mask order."""
    for block in connected_blocks(n):
        for mask in block.mask:
            yield mask_to_graph(n, int(mask))


# seeded randomness ------------------------------------------------------------


class XorShift64Star:
    """xorshift64* generator (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D).

    The seed is passed through one splitmix64 step so that small or zero seeds
    still give a non-zero, well-mixed state.
    """

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        z = (seed + 0x9E3779B97F4A7C15) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection."""
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            r = self.next_u64()
            if r < limit:
                return r % k


def random_connected_graph(n: int, m: int, seed: int | XorShift64Star) -> Graph:
    """Uniform random spanning tree (random Prüfer sequence) plus random extra edges."""
    if n < 1 or not n - 1 <= m <= n * (n - 1) // 2:
        raise GraphError(f"no connected graph with n={n}, m={m}")
    rng = seed if isinstance(seed, XorShift64Star) else XorShift64Star(seed)
    if n == 1:
        return Graph(1)
    tree = prufer_decode([rng.below(n) for _ in range(n - 2)], n)
    present = set(tree.edges)
    spare = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in present]
    extra = m - (n - 1)
    # partial Fisher-Yates
    for k in range(extra):
        r = k + rng.below(len(spare) - k)
        spare[k], spare[r] = spare[r], spare[k]
    return Graph(n, list(tree.edges) + spare[:extra])


def random_connected_sample(count: int, n_min: int, n_max: int, seed: int) -> Iterator[Graph]:
    """``count`` random connected graphs with order uniform in [n_min, n_max] and
    edge count uniform over the feasible range; one generator drives all draws."""
    rng = XorShift64Star(seed)
    for _ in range(count):
        n = n_min + rng.below(n_max - n_min + 1)
        lo, hi = n - 1, n * (n - 1) // 2
        yield random_connected_graph(n, lo + rng.below(hi - lo + 1), rng)
