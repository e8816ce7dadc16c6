from __future__ import annotations

import itertools
import sys

import pytest
from hypothesis import strategies as st

from twinwidth.fixtures import load_graph
from twinwidth.graph import Graph


def letters(edges: str) -> list[tuple[int, int]]:
    """'ab ad' -> [(0, 1), (0, 3)]"""
    return [(ord(e[0]) - 97, ord(e[1]) - 97) for e in edges.split()]


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@pytest.fixture
def worked_graph() -> Graph:
    return load_graph("worked_graph.txt")


@pytest.fixture
def prism() -> Graph:
    return load_graph("prism_graph.txt")


@pytest.fixture
def graph27() -> Graph:
    return load_graph("graph27.txt")


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(acceptance.RESULTS, key=lambda s: int(s[6:8])):
        terminalreporter.write_line(line)
