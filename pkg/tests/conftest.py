from __future__ import annotations

import pytest
from hypothesis import strategies as st

from parityorient import Bounds, Graph


def k3() -> Graph:
    return Graph(3, ((0, 1), (1, 2), (2, 0)))


def p3() -> Graph:
    return Graph(3, ((0, 1), (1, 2)))


def k2() -> Graph:
    return Graph(2, ((0, 1),))


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


@pytest.fixture
def triangle() -> Graph:
    return k3()


@st.composite
def graphs(draw, max_n: int = 6, max_m: int = 9, min_n: int = 1) -> Graph:
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return Graph(n, ())
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, max_size=max_m))
    return Graph(n, tuple(edges))


@st.composite
def instances(draw, max_n: int = 6, max_m: int = 9, raw: bool = False) -> tuple[Graph, Bounds]:
    """A graph with parity bounds; ``raw`` bounds may leave ``[0, d(v)]``."""
    graph = draw(graphs(max_n, max_m))
    g, f = [], []
    for v in range(graph.n):
        d = graph.degree(v)
        if raw:
            lo = draw(st.integers(-3, d + 2))
            hi = lo + 2 * draw(st.integers(0, 3))
        else:
            lo = draw(st.integers(0, d))
            hi = lo + 2 * draw(st.integers(0, (d - lo) // 2))
        g.append(lo)
        f.append(hi)
    return graph, Bounds(tuple(g), tuple(f))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
