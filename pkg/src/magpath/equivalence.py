"""Markov equivalence of MAGs: minimal-collider-path criterion and m-separation oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Literal, Union

from magpath.graph import GraphError, MixedGraph, is_ancestral, is_maximal, m_separated
from magpath.paths import Budget, McpSet, Path, enumerate_minimal_collider_paths

ORACLE_MAX_VERTICES = 12


@dataclass(frozen=True)
class PathWitness:
    path: Path
    graph: Literal[1, 2]

    def __str__(self) -> str:
        return f"witness-path: g{self.graph} " + " ".join(self.path)


@dataclass(frozen=True)
class SeparationWitness:
    x: str
    y: str
    z: frozenset[str]
    sep_in_g1: bool
    sep_in_g2: bool

    def __str__(self) -> str:
        zs = ",".join(sorted(self.z))
        return f"witness-sep: {self.x} {self.y} {{{zs}}} g1={str(self.sep_in_g1).lower()} g2={str(self.sep_in_g2).lower()}"


Witness = Union[PathWitness, SeparationWitness]


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    method: Literal["zzl", "oracle"]
    witnesses: tuple[Witness, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.equivalent == bool(self.witnesses):
            raise ValueError("a verdict carries witnesses exactly when it is negative")

    def __bool__(self) -> bool:
        return self.equivalent

    def to_text(self) -> str:
        lines = [f"equivalent: {str(self.equivalent).lower()}", f"method: {self.method}"]
        lines.extend(str(w) for w in self.witnesses)
        return "\n".join(lines) + "\n"


def _check_pair(g1: MixedGraph, g2: MixedGraph) -> None:
    if g1.vertices != g2.vertices:
        raise GraphError("graphs must share the same vertex labels")
    for name, g in (("g1", g1), ("g2", g2)):
        if not is_ancestral(g) or not is_maximal(g, method="inducing"):
            raise GraphError(f"{name} is not a maximal ancestral graph")


def mcp_diff(g1: MixedGraph, g2: MixedGraph, budget: Budget | None = None) -> tuple[McpSet, McpSet]:
    """Minimal collider paths found in only one of the two graphs."""
    _check_pair(g1, g2)
    m1 = enumerate_minimal_collider_paths(g1, budget)
    m2 = enumerate_minimal_collider_paths(g2, budget)
    return m1.difference(m2), m2.difference(m1)


def zzl_equivalent(g1: MixedGraph, g2: MixedGraph, budget: Budget | None = None) -> EquivalenceVerdict:
    """Equivalent iff both graphs have the same minimal collider paths (as vertex sequences)."""
    only1, only2 = mcp_diff(g1, g2, budget)
    witnesses = [PathWitness(p, 1) for p in only1] + [PathWitness(p, 2) for p in only2]
    return EquivalenceVerdict(not witnesses, "zzl", tuple(witnesses))


def oracle_equivalent(g1: MixedGraph, g2: MixedGraph, max_vertices: int = ORACLE_MAX_VERTICES) -> EquivalenceVerdict:
    """Compare the full m-separation relations; reports the first disagreement.

    Pairs are scanned in label order and conditioning sets by size then label
    order, so the reported witness is deterministic.
    """
    _check_pair(g1, g2)
    if len(g1) > max_vertices:
        raise GraphError(f"oracle refuses graphs with more than {max_vertices} vertices")
    verts = g1.vertices
    for x, y in itertools.combinations(verts, 2):
        rest = [v for v in verts if v not in (x, y)]
        for size in range(len(rest) + 1):
            for z in itertools.combinations(rest, size):
                s1 = m_separated(g1, x, y, z)
                s2 = m_separated(g2, x, y, z)
                if s1 != s2:
                    return EquivalenceVerdict(False, "oracle", (SeparationWitness(x, y, frozenset(z), s1, s2),))
    return EquivalenceVerdict(True, "oracle")
