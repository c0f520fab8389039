"""Mixed graphs with edge marks, ancestral/maximal validation and m-separation."""

from __future__ import annotations

import enum
import itertools
import random
import re
import string
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

LABEL_RE = re.compile(r"\S+")


class GraphError(ValueError):
    """Malformed graph or invalid query against a graph."""


class EdgeMark(enum.Enum):
    TAIL = "tail"
    ARROW = "arrow"

    def __repr__(self) -> str:
        return f"EdgeMark.{self.name}"


TAIL = EdgeMark.TAIL
ARROW = EdgeMark.ARROW


@dataclass(frozen=True, slots=True)
class Edge:
    """An edge ``u *-* v`` with one mark stored per endpoint."""

    u: str
    v: str
    mark_at_u: EdgeMark
    mark_at_v: EdgeMark

    @classmethod
    def directed(cls, u: str, v: str) -> Edge:
        return cls(u, v, TAIL, ARROW)

    @classmethod
    def bidirected(cls, u: str, v: str) -> Edge:
        return cls(u, v, ARROW, ARROW)

    @classmethod
    def undirected(cls, u: str, v: str) -> Edge:
        return cls(u, v, TAIL, TAIL)

    def reversed(self) -> Edge:
        return Edge(self.v, self.u, self.mark_at_v, self.mark_at_u)

    def oriented(self) -> Edge:
        """Same edge written with the smaller label on the left."""
        return self if self.u <= self.v else self.reversed()

    @property
    def kind(self) -> str:
        marks = (self.mark_at_u, self.mark_at_v)
        if marks == (ARROW, ARROW):
            return "bidirected"
        if marks == (TAIL, TAIL):
            return "undirected"
        return "directed"

    def __str__(self) -> str:
        left = "<" if self.mark_at_u is ARROW else "-"
        right = ">" if self.mark_at_v is ARROW else "-"
        return f"{self.u} {left}-{right} {self.v}"


@dataclass(frozen=True, eq=False)
class MixedGraph:
    """Immutable simple mixed graph.

    ``marks[v][u]`` is the mark at ``v`` on the edge joining ``u`` and ``v``;
    the lookup is defined in both directions for every edge.
    """

    vertices: tuple[str, ...]
    marks: dict[str, dict[str, EdgeMark]] = field(repr=False)
    _anc: dict[str, frozenset[str]] = field(default_factory=dict, repr=False, compare=False)

    def __contains__(self, v: object) -> bool:
        return v in self.marks

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"MixedGraph(vertices={list(self.vertices)}, edges={[str(e) for e in self.edges]})"

    @property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for u in self.vertices:
            for v in sorted(self.marks[u]):
                if u < v:
                    out.append(Edge(u, v, self.marks[u][v], self.marks[v][u]))
        return tuple(out)

    def neighbors(self, v: str) -> Iterable[str]:
        return self.marks[v].keys()

    def adjacent(self, u: str, v: str) -> bool:
        return v in self.marks[u]

    def mark_at(self, at: str, other: str) -> EdgeMark:
        """Mark at ``at`` on the edge between ``at`` and ``other``."""
        return self.marks[at][other]

    def edge(self, u: str, v: str) -> Edge:
        return Edge(u, v, self.marks[u][v], self.marks[v][u])

    def parents(self, v: str) -> set[str]:
        return {u for u, m in self.marks[v].items() if m is ARROW and self.marks[u][v] is TAIL}

    def require(self, *vs: str) -> None:
        for v in vs:
            if v not in self.marks:
                raise GraphError(f"unknown vertex {v!r}")

    def with_edges(self, add: Iterable[Edge] = (), remove: Iterable[tuple[str, str]] = ()) -> MixedGraph:
        """Copy of the graph with edges removed and then added."""
        drop = {frozenset(p) for p in remove}
        kept = [e for e in self.edges if frozenset((e.u, e.v)) not in drop]
        return build_graph(self.vertices, kept + list(add))


def build_graph(vertices: Iterable[str], edges: Iterable[Edge] = ()) -> MixedGraph:
    verts = list(vertices)
    seen: set[str] = set()
    for v in verts:
        if not isinstance(v, str) or not LABEL_RE.fullmatch(v):
            raise GraphError(f"invalid vertex label {v!r}")
        if v in seen:
            raise GraphError(f"duplicate vertex {v!r}")
        seen.add(v)
    marks: dict[str, dict[str, EdgeMark]] = {v: {} for v in sorted(verts)}
    for e in edges:
        if e.u == e.v:
            raise GraphError(f"self-loop at {e.u!r}")
        for end in (e.u, e.v):
            if end not in marks:
                raise GraphError(f"edge {e} references unknown vertex {end!r}")
        if e.v in marks[e.u]:
            raise GraphError(f"duplicate edge between {e.u!r} and {e.v!r}")
        marks[e.u][e.v] = e.mark_at_u
        marks[e.v][e.u] = e.mark_at_v
    return MixedGraph(tuple(sorted(verts)), marks)


def ancestors(g: MixedGraph, x: str) -> frozenset[str]:
    """Vertices with a directed path into ``x``, including ``x`` itself."""
    g.require(x)
    cached = g._anc.get(x)
    if cached is not None:
        return cached
    seen = {x}
    stack = [x]
    while stack:
        for p in g.parents(stack.pop()):
            if p not in seen:
                seen.add(p)
                stack.append(p)
    result = frozenset(seen)
    g._anc[x] = result
    return result


def ancestors_of_set(g: MixedGraph, xs: Iterable[str]) -> set[str]:
    out: set[str] = set()
    for x in xs:
        out |= ancestors(g, x)
    return out


def spouses(g: MixedGraph, x: str) -> set[str]:
    g.require(x)
    return {y for y, m in g.marks[x].items() if m is ARROW and g.marks[y][x] is ARROW}


def _directed_ends(e: Edge) -> tuple[str, str]:
    return (e.u, e.v) if e.mark_at_u is TAIL else (e.v, e.u)


def has_directed_cycle(g: MixedGraph) -> bool:
    for e in g.edges:
        if e.kind == "directed":
            tail, head = _directed_ends(e)
            if head in ancestors(g, tail):
                return True
    return False


def is_ancestral(g: MixedGraph) -> bool:
    """No directed or almost-directed cycle, no arrowhead into an undirected endpoint."""
    if has_directed_cycle(g):
        return False
    for e in g.edges:
        if e.kind == "bidirected" and (e.u in ancestors(g, e.v) or e.v in ancestors(g, e.u)):
            return False
    for v in g.vertices:
        ms = g.marks[v]
        has_line = any(m is TAIL and g.marks[u][v] is TAIL for u, m in ms.items())
        if has_line and ARROW in ms.values():
            return False
    return True


def _check_query(g: MixedGraph, x: str, y: str, z: Iterable[str]) -> frozenset[str]:
    zs = frozenset(z)
    g.require(x, y, *zs)
    if x == y:
        raise GraphError("m-separation query needs two distinct vertices")
    if x in zs or y in zs:
        raise GraphError("conditioning set must exclude the queried vertices")
    return zs


def m_separated(g: MixedGraph, x: str, y: str, z: Iterable[str] = ()) -> bool:
    """True when no path between ``x`` and ``y`` is m-connecting given ``z``.

    Reachability over (vertex, arrowhead-on-arrival) states; a connecting
    walk reduces to a connecting simple path in an ancestral graph.
    """
    zs = _check_query(g, x, y, z)
    an_z = ancestors_of_set(g, zs)
    start = [(w, g.marks[w][x] is ARROW) for w in g.marks[x]]
    seen = set(start)
    queue = deque(start)
    while queue:
        v, arrow_in = queue.popleft()
        if v == y:
            return False
        for w, m in g.marks[v].items():
            if w == x:
                continue
            if arrow_in and m is ARROW:
                if v not in an_z:
                    continue
            elif v in zs:
                continue
            state = (w, g.marks[w][v] is ARROW)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return True


def simple_paths(g: MixedGraph, x: str, y: str) -> Iterator[tuple[str, ...]]:
    """Every simple path from ``x`` to ``y`` (exhaustive DFS)."""
    path = [x]
    on_path = {x}

    def extend() -> Iterator[tuple[str, ...]]:
        v = path[-1]
        for w in sorted(g.marks[v]):
            if w == y:
                yield (*path, y)
            elif w not in on_path:
                path.append(w)
                on_path.add(w)
                yield from extend()
                path.pop()
                on_path.discard(w)

    yield from extend()


def path_m_connecting(g: MixedGraph, path: tuple[str, ...], z: frozenset[str], an_z: set[str]) -> bool:
    for prev, v, nxt in zip(path, path[1:], path[2:]):
        collider = g.marks[v][prev] is ARROW and g.marks[v][nxt] is ARROW
        if collider and v not in an_z:
            return False
        if not collider and v in z:
            return False
    return True


def m_separated_brute(g: MixedGraph, x: str, y: str, z: Iterable[str] = ()) -> bool:
    """Oracle: test every simple ``x``-``y`` path against the m-connection rule."""
    zs = _check_query(g, x, y, z)
    an_z = ancestors_of_set(g, zs)
    return not any(path_m_connecting(g, p, zs, an_z) for p in simple_paths(g, x, y))


def separating_set(g: MixedGraph, x: str, y: str) -> frozenset[str] | None:
    """Smallest-first exhaustive search for a set m-separating ``x`` and ``y``."""
    rest = [v for v in g.vertices if v not in (x, y)]
    for size in range(len(rest) + 1):
        for z in itertools.combinations(rest, size):
            if m_separated(g, x, y, z):
                return frozenset(z)
    return None


def has_inducing_path(g: MixedGraph, x: str, y: str) -> bool:
    """Path from ``x`` to ``y`` whose internal vertices are colliders in An({x, y})."""
    allowed = ancestors_of_set(g, (x, y)) - {x, y}
    start = [w for w in g.marks[x] if w in allowed and g.marks[w][x] is ARROW]
    seen = set(start)
    stack = list(start)
    while stack:
        v = stack.pop()
        for w, m in g.marks[v].items():
            if m is not ARROW:
                continue
            if w == y:
                return True
            if w in allowed and w not in seen and g.marks[w][v] is ARROW:
                seen.add(w)
                stack.append(w)
    return False


def nonadjacent_pairs(g: MixedGraph) -> Iterator[tuple[str, str]]:
    for x, y in itertools.combinations(g.vertices, 2):
        if not g.adjacent(x, y):
            yield x, y


def is_maximal(g: MixedGraph, method: str = "exhaustive") -> bool:
    """Every non-adjacent pair admits an m-separating set.

    ``method="exhaustive"`` searches subsets directly; ``"inducing"`` uses the
    inducing-path characterisation and runs in polynomial time.
    """
    if not is_ancestral(g):
        raise GraphError("maximality is only defined for ancestral graphs")
    if method == "exhaustive":
        return all(separating_set(g, x, y) is not None for x, y in nonadjacent_pairs(g))
    if method == "inducing":
        return not any(has_inducing_path(g, x, y) for x, y in nonadjacent_pairs(g))
    raise ValueError(f"unknown method {method!r}")


def is_mag(g: MixedGraph, method: str = "exhaustive") -> bool:
    return is_ancestral(g) and is_maximal(g, method)


def default_labels(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    width = len(str(n - 1))
    return [f"v{i:0{width}d}" for i in range(n)]


def random_mag(seed: int, n: int, p_dir: float = 0.3, p_bi: float = 0.2) -> MixedGraph:
    """Random directed/bidirected MAG, deterministic in ``seed``.

    Forward edges over a random total order, bidirected edges that would form
    an almost-directed cycle dropped, then non-separable pairs joined until
    the graph is maximal.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not (0.0 <= p_dir <= 1.0 and 0.0 <= p_bi <= 1.0):
        raise ValueError("probabilities must lie in [0, 1]")
    rng = random.Random(seed)
    labels = default_labels(n)
    order = labels[:]
    rng.shuffle(order)
    directed: list[Edge] = []
    bidirected: list[Edge] = []
    for i, j in itertools.combinations(range(n), 2):
        u, v = order[i], order[j]
        if rng.random() < p_dir:
            directed.append(Edge.directed(u, v))
        elif rng.random() < p_bi:
            bidirected.append(Edge.bidirected(u, v))
    g = build_graph(labels, directed)
    kept = [e for e in bidirected if e.u not in ancestors(g, e.v)]
    g = build_graph(labels, directed + kept)
    while True:
        pair = next((p for p in nonadjacent_pairs(g) if has_inducing_path(g, *p)), None)
        if pair is None:
            return g
        x, y = pair
        if x in ancestors(g, y):
            new = Edge.directed(x, y)
        elif y in ancestors(g, x):
            new = Edge.directed(y, x)
        else:
            new = Edge.bidirected(x, y)
        g = g.with_edges(add=[new])
