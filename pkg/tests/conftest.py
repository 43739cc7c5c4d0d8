import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from majcolor import Graph  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, max_n=9, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def graphs_min_degree(draw, delta, max_n=10):
    """Dense random graphs topped up until every vertex has degree >= delta."""
    n = draw(st.integers(delta + 1, max_n))
    pairs = list(combinations(range(n), 2))
    keep = [p for p in pairs if draw(st.booleans())]
    present = set(keep)
    deg = [0] * n
    for u, v in keep:
        deg[u] += 1
        deg[v] += 1
    for u, v in pairs:
        if (deg[u] < delta or deg[v] < delta) and (u, v) not in present:
            keep.append((u, v))
            present.add((u, v))
            deg[u] += 1
            deg[v] += 1
    order = draw(st.permutations(keep))
    return Graph(n, order)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(name: str, ok: bool, detail: str = "") -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def connected_graphs(draw, max_n=10, min_n=2):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {tuple(sorted((v, draw(st.integers(0, v - 1))))) for v in range(1, n)}
    for pair in combinations(range(n), 2):
        if draw(st.booleans()):
            edges.add(pair)
    return Graph(n, draw(st.permutations(sorted(edges))))


@st.composite
def eulerian_graphs(draw, max_n=11, odd_edges=None):
    from majcolor.generators import random_eulerian

    n = draw(st.integers(5, max_n))
    parity = draw(st.booleans()) if odd_edges is None else odd_edges
    return random_eulerian(n, draw(st.integers(0, 10**6)), p=draw(st.floats(0.2, 0.8)), odd_edges=parity)
