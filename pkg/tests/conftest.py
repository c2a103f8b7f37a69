import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hindex import kernels
from hindex.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


@st.composite
def graphs_with_permutation(draw, min_n=0, max_n=8):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, list(perm)


def harmonic_by_hand(n, edges):
    """Independent oracle: degrees counted from the edge list, then summed."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return sum((Fraction(2, deg[u] + deg[v]) for u, v in edges), Fraction(0))


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("] ")[1].split(".")[0])):
            terminalreporter.write_line(line)
