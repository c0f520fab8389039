"""Collider paths, the minimality test and minimal-collider-path enumeration."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from magpath.graph import ARROW, GraphError, MixedGraph, is_ancestral

Path = tuple[str, ...]

# DP state bits: (arrowhead on the edge into the current vertex, some index skipped)
_PLAIN, _SKIP, _ARROW, _ARROW_SKIP = 1, 2, 4, 8
_ARROW_STATES = _ARROW | _ARROW_SKIP
_SKIP_STATES = _SKIP | _ARROW_SKIP


class BudgetExceeded(RuntimeError):
    """Enumeration would have to exceed its path-count or length budget."""

    def __init__(self, reached: int, budget: Budget, reason: str):
        self.reached = reached
        self.budget = budget
        self.reason = reason
        super().__init__(f"{reason}: reached {reached} paths (max_paths={budget.max_paths}, max_len={budget.max_len})")


@dataclass(frozen=True)
class Budget:
    max_paths: int = 5_000_000
    max_len: int | None = None


class PathError(GraphError):
    """Sequence does not satisfy the precondition of a path predicate."""


def _state_bit(arrow_in: bool, skipped: bool) -> int:
    return (_ARROW if arrow_in else _PLAIN) << (1 if skipped else 0)


def reverse(p: Sequence[str]) -> Path:
    return tuple(reversed(p))


def canonicalize(p: Sequence[str]) -> Path:
    """Orient a path so its first vertex is not greater than its last."""
    p = tuple(p)
    return p if p[0] <= p[-1] else p[::-1]


def path_sort_key(p: Path) -> tuple[int, Path]:
    return len(p), p


def is_path(g: MixedGraph, p: Sequence[str]) -> bool:
    g.require(*p)
    if len(p) < 2 or len(set(p)) != len(p):
        return False
    return all(g.adjacent(a, b) for a, b in zip(p, p[1:]))


def _colliders_ok(g: MixedGraph, p: Sequence[str]) -> bool:
    return all(g.marks[v][a] is ARROW and g.marks[v][b] is ARROW for a, v, b in zip(p, p[1:], p[2:]))


def is_collider_path(g: MixedGraph, p: Sequence[str]) -> bool:
    """Every internal vertex carries arrowheads on both of its path edges."""
    if not is_path(g, p):
        raise PathError(f"{list(p)} is not a path")
    return _colliders_ok(g, p)


def _extend_states(g: MixedGraph, p: Sequence[str], states: list[int]) -> int:
    """States reachable at index ``len(states)`` of ``p`` given those before it.

    A subsequence may jump from index j to j' when the two vertices are
    adjacent; from an interior index the arriving edge and the leaving edge
    must both carry an arrowhead there.
    """
    m = len(states)
    u = p[m]
    into_u = g.marks[u]
    out = 0
    for j, s in enumerate(states):
        if not s:
            continue
        v = p[j]
        if v not in into_u:
            continue
        if j:
            if g.marks[v][u] is not ARROW:
                continue
            s &= _ARROW_STATES
            if not s:
                continue
        arrow = into_u[v] is ARROW
        jumped = m > j + 1
        if s & ~_SKIP_STATES:
            out |= _state_bit(arrow, jumped)
        if s & _SKIP_STATES:
            out |= _state_bit(arrow, True)
    return out


def _minimality_states(g: MixedGraph, p: Sequence[str]) -> list[int]:
    states = [_PLAIN]
    for _ in range(1, len(p)):
        states.append(_extend_states(g, p, states))
    return states


def is_minimal_collider_path(g: MixedGraph, p: Sequence[str]) -> bool:
    """No proper endpoint-preserving subsequence of ``p`` is a collider path."""
    if not is_collider_path(g, p):
        raise PathError(f"{list(p)} is not a collider path")
    return not _minimality_states(g, p)[-1] & _SKIP_STATES


def shortcut_witness(g: MixedGraph, p: Sequence[str]) -> Path | None:
    """A proper subsequence of ``p`` that is a collider path, or None if ``p`` is minimal."""
    if not is_collider_path(g, p):
        raise PathError(f"{list(p)} is not a collider path")
    n = len(p)
    # back[(index, state_bit)] = (previous index, previous state bit)
    back: dict[tuple[int, int], tuple[int, int] | None] = {(0, _PLAIN): None}
    frontier: list[list[int]] = [[_PLAIN]] + [[] for _ in range(n - 1)]
    for m in range(1, n):
        u = p[m]
        for j in range(m):
            v = p[j]
            if not g.adjacent(v, u) or (j and g.marks[v][u] is not ARROW):
                continue
            for s in frontier[j]:
                if j and not s & _ARROW_STATES:
                    continue
                nxt = _state_bit(g.marks[u][v] is ARROW, bool(s & _SKIP_STATES) or m > j + 1)
                if (m, nxt) not in back:
                    back[(m, nxt)] = (j, s)
                    frontier[m].append(nxt)
    end = next((s for s in frontier[n - 1] if s & _SKIP_STATES), None)
    if end is None:
        return None
    idx: list[int] = []
    node: tuple[int, int] | None = (n - 1, end)
    while node is not None:
        idx.append(node[0])
        node = back[node]
    return tuple(p[i] for i in reversed(idx))


def is_minimal_by_subsequences(g: MixedGraph, p: Sequence[str]) -> bool:
    """Oracle: try all 2^(n-2) - 1 proper endpoint-preserving subsequences."""
    if not is_collider_path(g, p):
        raise PathError(f"{list(p)} is not a collider path")
    inner = range(1, len(p) - 1)
    for size in range(len(p) - 2):
        for keep in itertools.combinations(inner, size):
            sub = [p[0], *(p[i] for i in keep), p[-1]]
            if is_path(g, sub) and _colliders_ok(g, sub):
                return False
    return True


class McpSet:
    """Sorted, duplicate-free set of canonical minimal collider paths of one graph."""

    __slots__ = ("paths", "fingerprint", "_members")

    def __init__(self, paths: Iterable[Path], fingerprint: str = ""):
        self._members = frozenset(canonicalize(p) for p in paths)
        self.paths: tuple[Path, ...] = tuple(sorted(self._members, key=path_sort_key))
        self.fingerprint = fingerprint

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __contains__(self, p: object) -> bool:
        return isinstance(p, tuple) and bool(p) and canonicalize(p) in self._members

    def __eq__(self, other: object) -> bool:
        if isinstance(other, McpSet):
            return self._members == other._members
        if isinstance(other, (set, frozenset)):
            return self._members == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"McpSet(count={len(self)}, graph={self.fingerprint or '?'})"

    def as_set(self) -> frozenset[Path]:
        return self._members

    def difference(self, other: McpSet) -> McpSet:
        return McpSet(self._members - other._members, self.fingerprint)


def enumerate_minimal_collider_paths(g: MixedGraph, budget: Budget | None = None) -> McpSet:
    """All minimal collider paths of ``g``, canonicalised.

    Depth-first extension along collider transitions; minimality of every
    prefix is maintained incrementally by the subsequence DP. Raises
    :class:`BudgetExceeded` instead of returning a partial set.
    """
    from magpath.codec import fingerprint

    budget = budget or Budget()
    if not is_ancestral(g):
        raise GraphError("minimal collider paths are enumerated on ancestral graphs only")
    max_len = budget.max_len if budget.max_len is not None else max(len(g) - 1, 1)
    found: set[Path] = set()
    path: list[str] = []
    on_path: set[str] = set()
    states: list[int] = []

    def visit() -> None:
        last = path[-1]
        if len(path) >= 2:
            states.append(_extend_states(g, path, states))
            if not states[-1] & _SKIP_STATES and path[0] < last:
                found.add(tuple(path))
                if len(found) > budget.max_paths:
                    raise BudgetExceeded(len(found), budget, "max_paths exceeded")
            prev = path[-2]
            if g.marks[last][prev] is not ARROW:
                states.pop()
                return
        for u, m in g.marks[last].items():
            if u in on_path or (len(path) >= 2 and m is not ARROW):
                continue
            if len(path) > max_len:
                raise BudgetExceeded(len(found), budget, "max_len exceeded")
            path.append(u)
            on_path.add(u)
            visit()
            path.pop()
            on_path.discard(u)
        if len(path) >= 2:
            states.pop()

    for start in g.vertices:
        path.append(start)
        on_path.add(start)
        states.append(_PLAIN)
        visit()
        states.clear()
        path.clear()
        on_path.clear()
    return McpSet(found, fingerprint(g))


def enumerate_collider_paths_brute(g: MixedGraph, max_len: int | None = None) -> set[Path]:
    """Oracle: every simple path of at most ``max_len`` edges, kept if it is a collider path."""
    if max_len is None:
        max_len = max(len(g) - 1, 1)
    out: set[Path] = set()

    def walk(path: list[str]) -> None:
        if len(path) >= 2 and _colliders_ok(g, path):
            out.add(canonicalize(path))
        if len(path) > max_len:
            return
        for u in g.marks[path[-1]]:
            if u not in path:
                path.append(u)
                walk(path)
                path.pop()

    for v in g.vertices:
        walk([v])
    return out
