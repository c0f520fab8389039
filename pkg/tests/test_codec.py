from __future__ import annotations

import pytest
from hypothesis import given

from conftest import ancestral_candidates, chain, mags
from magpath.codec import ParseError, fingerprint, parse_mag, parse_mcp, serialize_mag, serialize_mcp
from magpath.counterexample import generate_gk
from magpath.graph import Edge, build_graph
from magpath.paths import enumerate_minimal_collider_paths

CHAIN_TEXT = """MAGv1
# a -> b -> c
vertices: c b
vertices: a

edge: b <-- a
edge: b --> c
"""


def test_parse_example():
    assert parse_mag(CHAIN_TEXT) == chain()


def test_serialize_is_canonical():
    assert serialize_mag(chain()) == "MAGv1\nvertices: a b c\nedge: a --> b\nedge: b --> c\n"
    g = build_graph("ab", [Edge.directed("b", "a")])
    assert serialize_mag(g) == "MAGv1\nvertices: a b\nedge: a <-- b\n"
    g = build_graph("ab", [Edge.undirected("b", "a")])
    assert serialize_mag(g).endswith("edge: a --- b\n")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "MAGv2\n",
        "MAGv1\nvertices: a\nedge: a --> a\n",
        "MAGv1\nvertices: a b\nedge: a ==> b\n",
        "MAGv1\nvertices: a b-c\n",
        "MAGv1\nvertices: a\nedge: a --> b\n",
        "MAGv1\nvertices: a b\nedge: a --> b\nedge: b <-> a\n",
        "MAGv1\nnodes: a\n",
        "MAGv1\nvertices:\n",
        "MAGv1\nvertices a\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_mag(text)


def test_gk_round_trip():
    for k in range(1, 6):
        g = generate_gk(k)
        assert parse_mag(serialize_mag(g)) == g


@given(ancestral_candidates(max_n=7, undirected=True))
def test_round_trip(g):
    text = serialize_mag(g)
    assert parse_mag(text) == g
    assert serialize_mag(parse_mag(text)) == text


@given(mags())
def test_mcp_round_trip(g):
    mcps = enumerate_minimal_collider_paths(g)
    text = serialize_mcp(mcps)
    back = parse_mcp(text)
    assert back == mcps and back.fingerprint == fingerprint(g)
    assert text.splitlines()[0] == f"MCPv1 count={len(mcps)} graph={fingerprint(g)}"


def test_mcp_listing_order():
    text = serialize_mcp(enumerate_minimal_collider_paths(generate_gk(2)))
    assert text.splitlines()[1:] == ["v_x1_x2 x1", "v_x1_x2 x2", "x1 v_x1_x2 x2"]


def test_fingerprint_ignores_input_order():
    a = build_graph(["b", "a"], [Edge.directed("b", "a")])
    b = build_graph(["a", "b"], [Edge.directed("b", "a")])
    assert fingerprint(a) == fingerprint(b)
