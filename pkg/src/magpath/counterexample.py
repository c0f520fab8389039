"""The bipartite bidirected family G_k and its minimal-collider-path growth."""

from __future__ import annotations

import csv
import io
import math
import time
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from magpath.graph import Edge, MixedGraph, build_graph
from magpath.paths import Budget, BudgetExceeded, Path, enumerate_minimal_collider_paths

CSV_HEADER = ("k", "n_vertices", "n_edges", "mcp_count", "lower_bound", "elapsed_ms", "status")
DEFAULT_KMAX = 7
DEFAULT_MAX_PATHS = 5_000_000
# largest factorial we are willing to materialise exactly
MAX_EXACT_K = 10_000


@dataclass(frozen=True)
class GkSpec:
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")

    @property
    def v1_labels(self) -> list[str]:
        return [f"x{i}" for i in range(1, self.k + 1)]

    @property
    def v2_labels(self) -> list[str]:
        return [connector(a, b) for a, b in self.pairs()]

    def pairs(self) -> list[tuple[str, str]]:
        v1 = self.v1_labels
        return [(v1[i], v1[j]) for i in range(self.k) for j in range(i + 1, self.k)]

    @property
    def n_vertices(self) -> int:
        return self.k * (self.k + 1) // 2

    @property
    def n_edges(self) -> int:
        return self.k * (self.k - 1)


def _index(label: str) -> int:
    return int(label[1:])


def connector(a: str, b: str) -> str:
    """Label of the V2 vertex joining ``a`` and ``b``; symmetric in its arguments."""
    if a == b:
        raise ValueError("a connector needs two distinct outer vertices")
    lo, hi = sorted((a, b), key=_index)
    return f"v_{lo}_{hi}"


def generate_gk(k: int) -> MixedGraph:
    spec = GkSpec(k)
    edges = []
    for a, b in spec.pairs():
        v = connector(a, b)
        edges += [Edge.bidirected(a, v), Edge.bidirected(b, v)]
    return build_graph(spec.v1_labels + spec.v2_labels, edges)


def sequence_to_path(spec: GkSpec, seq: Sequence[str]) -> Path:
    """Interleave consecutive outer vertices with their connector."""
    outer = set(spec.v1_labels)
    if len(seq) < 2:
        raise ValueError("need at least two outer vertices")
    if len(set(seq)) != len(seq):
        raise ValueError("outer vertices must be distinct")
    for a in seq:
        if a not in outer:
            raise ValueError(f"{a!r} is not an outer vertex of G_{spec.k}")
    out = [seq[0]]
    for a, b in zip(seq, seq[1:]):
        out += [connector(a, b), b]
    return tuple(out)


def k_of_n(n: int) -> int:
    """Largest k with k(k+1)/2 <= n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    k = (math.isqrt(8 * n + 1) - 1) // 2
    while k * (k + 1) // 2 > n:
        k -= 1
    while (k + 1) * (k + 2) // 2 <= n:
        k += 1
    return k


def mcp_lower_bound(k: int) -> int:
    """k!/2, exact."""
    if k < 2:
        raise ValueError("the bound k!/2 needs k >= 2")
    if k > MAX_EXACT_K:
        raise OverflowError(f"k={k} exceeds the exact-arithmetic limit {MAX_EXACT_K}")
    half = Fraction(math.factorial(k), 2)
    assert half.denominator == 1
    return int(half)


@dataclass(frozen=True)
class GrowthRow:
    k: int
    n_vertices: int
    n_edges: int
    mcp_count: int | None
    lower_bound: int
    elapsed: float
    status: str = "ok"

    @property
    def elapsed_ms(self) -> int:
        return round(self.elapsed * 1000)

    @property
    def sqrt_n(self) -> int:
        return math.isqrt(self.n_vertices)

    def csv_fields(self) -> list[str]:
        count = "" if self.mcp_count is None else str(self.mcp_count)
        return [str(self.k), str(self.n_vertices), str(self.n_edges), count, str(self.lower_bound), str(self.elapsed_ms), self.status]


def growth_report(k_max: int = DEFAULT_KMAX, budget: Budget | None = None) -> list[GrowthRow]:
    """One row per k in 2..k_max; stops after the first row whose budget trips."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    budget = budget or Budget(max_paths=DEFAULT_MAX_PATHS)
    rows = []
    for k in range(2, k_max + 1):
        g = generate_gk(k)
        spec = GkSpec(k)
        t0 = time.perf_counter()
        try:
            count: int | None = len(enumerate_minimal_collider_paths(g, budget))
            status = "ok"
        except BudgetExceeded:
            count, status = None, "budget_exceeded"
        rows.append(GrowthRow(k, spec.n_vertices, spec.n_edges, count, mcp_lower_bound(k), time.perf_counter() - t0, status))
        if status != "ok":
            break
    return rows


def rows_to_csv(rows: Sequence[GrowthRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.csv_fields())
    return buf.getvalue()


def format_table(rows: Sequence[GrowthRow]) -> str:
    head = ("k", "n", "edges", "floor(sqrt n)", "mcp_count", "k!/2", "ratio", "ms", "status")
    body = []
    prev = None
    for r in rows:
        ratio = f"{r.mcp_count / prev:.2f}" if prev and r.mcp_count else "-"
        body.append((r.k, r.n_vertices, r.n_edges, r.sqrt_n, r.mcp_count if r.mcp_count is not None else "-", r.lower_bound, ratio, r.elapsed_ms, r.status))
        prev = r.mcp_count
    table = [tuple(map(str, head))] + [tuple(map(str, b)) for b in body]
    widths = [max(len(row[i]) for row in table) for i in range(len(head))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in table) + "\n"
