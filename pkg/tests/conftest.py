import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from intervalk.graph import ColoredGraph, PatternGraph, is_connected, read_graph

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"

sys.setrecursionlimit(10000)


def fixture(name):
    return read_graph(FIXTURES / f"{name}.graph")


@pytest.fixture
def load():
    return fixture


def random_graph(rng: random.Random, n_max=8, k_max=4, connected=False, n_min=1, k_min=2):
    """Random colored graph with random colors and a random density."""
    while True:
        n = rng.randint(n_min, n_max)
        k = rng.randint(k_min, k_max)
        p = rng.choice([0.15, 0.3, 0.5, 0.7, 0.9])
        colors = [rng.randrange(k) for _ in range(n)]
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if colors[u] != colors[v] and rng.random() < p
        ]
        G = ColoredGraph(colors, edges, k=k)
        if not connected or is_connected(G):
            return G


@st.composite
def colored_graphs(draw, n_max=8, k_max=4, min_n=0):
    n = draw(st.integers(min_n, n_max))
    k = draw(st.integers(2, k_max))
    colors = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    cross = [(u, v) for u in range(n) for v in range(u + 1, n) if colors[u] != colors[v]]
    keep = draw(st.lists(st.booleans(), min_size=len(cross), max_size=len(cross)))
    edges = [e for e, b in zip(cross, keep) if b]
    return ColoredGraph(colors, edges, k=k)


@st.composite
def pattern_instances(draw, n_max=7, k_max=4):
    """(G, H) with H an arbitrary pattern graph and G respecting it."""
    k = draw(st.integers(2, k_max))
    all_h = [(a, b) for a in range(k) for b in range(a + 1, k)]
    hk = draw(st.lists(st.booleans(), min_size=len(all_h), max_size=len(all_h)))
    H = PatternGraph.from_edges(k, [e for e, b in zip(all_h, hk) if b])
    n = draw(st.integers(1, n_max))
    colors = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    cand = [(u, v) for u in range(n) for v in range(u + 1, n) if H.adjacent(colors[u], colors[v])]
    keep = draw(st.lists(st.booleans(), min_size=len(cand), max_size=len(cand)))
    return ColoredGraph(colors, [e for e, b in zip(cand, keep) if b], k=k), H


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
