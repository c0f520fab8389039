from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import chain, collider, fork, g2, mags
from magpath.corpus import mutations
from magpath.counterexample import generate_gk
from magpath.equivalence import (
    EquivalenceVerdict,
    PathWitness,
    SeparationWitness,
    mcp_diff,
    oracle_equivalent,
    zzl_equivalent,
)
from magpath.graph import Edge, GraphError, build_graph, is_ancestral, is_maximal, random_mag
from magpath.paths import enumerate_minimal_collider_paths, is_minimal_collider_path


def test_reflexive_examples():
    for g in (chain(), g2(), generate_gk(3)):
        assert zzl_equivalent(g, g).equivalent
        assert oracle_equivalent(g, g).equivalent


def test_chain_fork_equivalent():
    assert zzl_equivalent(chain(), fork())
    assert oracle_equivalent(chain(), fork())


def test_chain_collider_not_equivalent():
    v = zzl_equivalent(chain(), collider())
    assert not v.equivalent
    assert v.witnesses == (PathWitness(("a", "b", "c"), 2),)
    o = oracle_equivalent(chain(), collider())
    assert not o.equivalent
    assert o.witnesses == (SeparationWitness("a", "c", frozenset(), False, True),)


def test_g2_against_directed_collider():
    other = build_graph(["a", "b", "v_ab"], [Edge.directed("a", "v_ab"), Edge.directed("b", "v_ab")])
    assert zzl_equivalent(g2(), other).equivalent == oracle_equivalent(g2(), other).equivalent
    assert zzl_equivalent(g2(), other).equivalent


def test_mcp_diff():
    a, b = mcp_diff(chain(), chain())
    assert len(a) == len(b) == 0
    a, b = mcp_diff(chain(), collider())
    assert len(a) == 0 and b.paths == (("a", "b", "c"),)


def test_mcp_diff_deleted_edge():
    g = generate_gk(3)
    h = g.with_edges(remove=[("x1", "v_x1_x2")])
    only_g, only_h = mcp_diff(g, h)
    assert ("v_x1_x2", "x1") in only_g
    assert all(("x1" in p and "v_x1_x2" in p) or p in only_g for p in only_g)
    assert len(only_h) > 0


def test_vertex_mismatch_rejected():
    with pytest.raises(GraphError):
        zzl_equivalent(chain(), g2())
    with pytest.raises(GraphError):
        oracle_equivalent(chain(), g2())


def test_invalid_mag_rejected():
    bad = build_graph("abc", [Edge.directed("a", "b"), Edge.directed("b", "c"), Edge.bidirected("a", "c")])
    with pytest.raises(GraphError):
        zzl_equivalent(bad, bad)


def test_oracle_size_limit():
    with pytest.raises(GraphError):
        oracle_equivalent(generate_gk(5), generate_gk(5))
    with pytest.raises(GraphError):
        oracle_equivalent(chain(), chain(), max_vertices=2)
    assert oracle_equivalent(generate_gk(4), generate_gk(4), max_vertices=10).equivalent


def test_verdict_invariant():
    with pytest.raises(ValueError):
        EquivalenceVerdict(True, "zzl", (PathWitness(("a", "b"), 1),))
    with pytest.raises(ValueError):
        EquivalenceVerdict(False, "zzl")


def test_verdict_text():
    v = oracle_equivalent(chain(), collider())
    assert v.to_text() == "equivalent: false\nmethod: oracle\nwitness-sep: a c {} g1=false g2=true\n"


@st.composite
def mag_pairs(draw):
    g = draw(mags(max_n=6))
    seed = draw(st.integers(0, 2**16))
    if draw(st.booleans()):
        muts = mutations(g, random.Random(seed))
        h = muts[seed % len(muts)] if muts else g
    else:
        h = random_mag(seed, len(g), 0.4, 0.3)
    return g, h


@given(mag_pairs())
def test_criterion_matches_oracle(pair):
    g, h = pair
    assert zzl_equivalent(g, h).equivalent == oracle_equivalent(g, h).equivalent


@given(mag_pairs())
def test_symmetry(pair):
    g, h = pair
    assert zzl_equivalent(g, h).equivalent == zzl_equivalent(h, g).equivalent
    assert zzl_equivalent(g, g).equivalent


@given(mag_pairs())
def test_witnesses_are_minimal_in_exactly_one_graph(pair):
    g, h = pair
    graphs = {1: g, 2: h}
    for w in zzl_equivalent(g, h).witnesses:
        owner, other = graphs[w.graph], graphs[3 - w.graph]
        assert is_minimal_collider_path(owner, w.path)
        assert w.path not in enumerate_minimal_collider_paths(other)


@given(mag_pairs())
def test_skeleton_necessity(pair):
    g, h = pair
    skel = lambda x: {frozenset((e.u, e.v)) for e in x.edges}  # noqa: E731
    if skel(g) != skel(h):
        assert not zzl_equivalent(g, h).equivalent


def test_corpus_mutations_are_valid():
    g = random_mag(3, 6, 0.4, 0.3)
    for h in mutations(g, random.Random(0)):
        assert is_ancestral(h) and is_maximal(h)
        assert h != g
