"""Maximal ancestral graphs, minimal collider paths and Markov equivalence."""

from magpath.codec import parse_mag, serialize_mag
from magpath.counterexample import GkSpec, GrowthRow, generate_gk, growth_report, k_of_n, mcp_lower_bound, sequence_to_path
from magpath.equivalence import EquivalenceVerdict, mcp_diff, oracle_equivalent, zzl_equivalent
from magpath.graph import (
    ARROW,
    TAIL,
    Edge,
    EdgeMark,
    GraphError,
    MixedGraph,
    ancestors,
    build_graph,
    is_ancestral,
    is_maximal,
    m_separated,
    random_mag,
    spouses,
)
from magpath.paths import (
    Budget,
    BudgetExceeded,
    McpSet,
    canonicalize,
    enumerate_collider_paths_brute,
    enumerate_minimal_collider_paths,
    is_collider_path,
    is_minimal_collider_path,
    is_path,
)

__version__ = "0.1.0"

__all__ = [
    "ARROW",
    "Budget",
    "BudgetExceeded",
    "Edge",
    "EdgeMark",
    "EquivalenceVerdict",
    "GkSpec",
    "GraphError",
    "GrowthRow",
    "McpSet",
    "MixedGraph",
    "TAIL",
    "ancestors",
    "build_graph",
    "canonicalize",
    "enumerate_collider_paths_brute",
    "enumerate_minimal_collider_paths",
    "generate_gk",
    "growth_report",
    "is_ancestral",
    "is_collider_path",
    "is_maximal",
    "is_minimal_collider_path",
    "is_path",
    "k_of_n",
    "m_separated",
    "mcp_diff",
    "mcp_lower_bound",
    "oracle_equivalent",
    "parse_mag",
    "random_mag",
    "sequence_to_path",
    "serialize_mag",
    "spouses",
    "zzl_equivalent",
]
