"""Line-oriented text formats: MAGv1 graphs and MCPv1 path listings."""

from __future__ import annotations

import hashlib
import re

from magpath.graph import ARROW, TAIL, Edge, GraphError, MixedGraph, build_graph
from magpath.paths import McpSet, Path

MAG_HEADER = "MAGv1"
MCP_HEADER = "MCPv1"
_LABEL = re.compile(r"[A-Za-z0-9_]+")
_OPS = {
    "<->": (ARROW, ARROW),
    "-->": (TAIL, ARROW),
    "<--": (ARROW, TAIL),
    "---": (TAIL, TAIL),
}
_MARKS_TO_OP = {marks: op for op, marks in _OPS.items()}


class ParseError(GraphError):
    def __init__(self, msg: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)


def parse_mag(text: str) -> MixedGraph:
    lines = text.splitlines()
    body = [(i, ln.strip()) for i, ln in enumerate(lines, 1)]
    body = [(i, ln) for i, ln in body if ln and not ln.startswith("#")]
    if not body or body[0][1] != MAG_HEADER:
        raise ParseError(f"expected header {MAG_HEADER!r}", body[0][0] if body else None)
    vertices: list[str] = []
    edges: list[Edge] = []
    for lineno, ln in body[1:]:
        key, sep, rest = ln.partition(":")
        if not sep:
            raise ParseError(f"unrecognised line {ln!r}", lineno)
        tokens = rest.split()
        if key == "vertices":
            if not tokens:
                raise ParseError("empty vertices line", lineno)
            for t in tokens:
                if not _LABEL.fullmatch(t):
                    raise ParseError(f"bad label {t!r}", lineno)
            vertices.extend(tokens)
        elif key == "edge":
            if len(tokens) != 3 or tokens[1] not in _OPS:
                raise ParseError(f"malformed edge {rest.strip()!r}", lineno)
            u, op, v = tokens
            for t in (u, v):
                if not _LABEL.fullmatch(t):
                    raise ParseError(f"bad label {t!r}", lineno)
            mu, mv = _OPS[op]
            edges.append(Edge(u, v, mu, mv))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    try:
        return build_graph(vertices, edges)
    except ParseError:
        raise
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def serialize_mag(g: MixedGraph) -> str:
    out = [MAG_HEADER]
    if g.vertices:
        out.append("vertices: " + " ".join(g.vertices))
    for e in g.edges:
        e = e.oriented()
        out.append(f"edge: {e.u} {_MARKS_TO_OP[(e.mark_at_u, e.mark_at_v)]} {e.v}")
    return "\n".join(out) + "\n"


def fingerprint(g: MixedGraph) -> str:
    return hashlib.sha256(serialize_mag(g).encode()).hexdigest()[:16]


def format_path(p: Path) -> str:
    return " ".join(p)


def serialize_mcp(mcps: McpSet) -> str:
    lines = [f"{MCP_HEADER} count={len(mcps)} graph={mcps.fingerprint}"]
    lines.extend(format_path(p) for p in mcps)
    return "\n".join(lines) + "\n"


def parse_mcp(text: str) -> McpSet:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith(MCP_HEADER + " "):
        raise ParseError(f"expected header {MCP_HEADER!r}", 1)
    fields = dict(f.split("=", 1) for f in lines[0].split()[1:])
    paths = [tuple(ln.split()) for ln in lines[1:]]
    mcps = McpSet(paths, fields.get("graph", ""))
    if int(fields.get("count", -1)) != len(mcps):
        raise ParseError("count does not match listed paths", 1)
    return mcps

