from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from magpath.corpus import corpus_graphs
from magpath.graph import Edge, MixedGraph, build_graph, random_mag

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def chain() -> MixedGraph:
    return build_graph("abc", [Edge.directed("a", "b"), Edge.directed("b", "c")])


def fork() -> MixedGraph:
    return build_graph("abc", [Edge.directed("b", "a"), Edge.directed("b", "c")])


def collider() -> MixedGraph:
    return build_graph("abc", [Edge.directed("a", "b"), Edge.directed("c", "b")])


def g2() -> MixedGraph:
    """G_2 written with the short labels a, b, v_ab."""
    return build_graph(["a", "b", "v_ab"], [Edge.bidirected("a", "v_ab"), Edge.bidirected("b", "v_ab")])


@st.composite
def mags(draw: st.DrawFn, max_n: int = 7) -> MixedGraph:
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p_dir = draw(st.floats(0.0, 0.8))
    p_bi = draw(st.floats(0.0, 0.6))
    return random_mag(seed, n, p_dir, p_bi)



@st.composite
def ancestral_candidates(draw: st.DrawFn, max_n: int = 6, undirected: bool = False) -> MixedGraph:
    """Arbitrary simple mixed graphs over a shuffled order (not necessarily ancestral)."""
    n = draw(st.integers(1, max_n))
    labels = [chr(ord("a") + i) for i in range(n)]
    kinds = ["directed", "reversed", "bidirected"] + (["undirected"] if undirected else [])
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            kind = draw(st.sampled_from([None, *kinds]))
            u, v = labels[i], labels[j]
            if kind == "directed":
                edges.append(Edge.directed(u, v))
            elif kind == "reversed":
                edges.append(Edge.directed(v, u))
            elif kind == "bidirected":
                edges.append(Edge.bidirected(u, v))
            elif kind == "undirected":
                edges.append(Edge.undirected(u, v))
    return build_graph(labels, edges)


@pytest.fixture(scope="session")
def corpus() -> list[MixedGraph]:
    return corpus_graphs(80, seed=1)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
