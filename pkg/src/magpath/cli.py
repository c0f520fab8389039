"""Command-line front end.

Exit codes: 0 success / positive answer, 1 negative answer (not a MAG, not
separated, not equivalent), 2 usage or parse errors, 3 budget overflow.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Sequence
from pathlib import Path as FsPath

from magpath.codec import parse_mag, serialize_mag, serialize_mcp
from magpath.counterexample import DEFAULT_KMAX, DEFAULT_MAX_PATHS, format_table, generate_gk, growth_report, rows_to_csv
from magpath.equivalence import ORACLE_MAX_VERTICES, oracle_equivalent, zzl_equivalent
from magpath.graph import GraphError, MixedGraph, is_ancestral, is_maximal, m_separated
from magpath.paths import Budget, BudgetExceeded, enumerate_minimal_collider_paths

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "MAGPATH_BUDGET_PATHS"


class UsageError(Exception):
    pass


def default_budget_paths() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_MAX_PATHS
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _load(path: str) -> MixedGraph:
    try:
        text = FsPath(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_mag(text)


def _budget(args: argparse.Namespace) -> Budget:
    paths = args.budget_paths if args.budget_paths is not None else default_budget_paths()
    return Budget(max_paths=paths, max_len=args.budget_len)


def _bool(b: bool) -> str:
    return str(b).lower()


def cmd_validate(args: argparse.Namespace) -> int:
    g = _load(args.file)
    if len(g) > ORACLE_MAX_VERTICES and not args.force:
        raise UsageError(f"{len(g)} vertices exceeds {ORACLE_MAX_VERTICES}; pass --force to run the exhaustive check")
    ancestral = is_ancestral(g)
    maximal = ancestral and is_maximal(g)
    print(f"ancestral: {_bool(ancestral)}")
    print(f"maximal: {_bool(maximal)}")
    return EXIT_OK if ancestral and maximal else EXIT_NEGATIVE


def cmd_msep(args: argparse.Namespace) -> int:
    g = _load(args.file)
    given = [v for v in (args.given or "").split(",") if v]
    sep = m_separated(g, args.x, args.y, given)
    print(f"m-separated: {_bool(sep)}")
    return EXIT_OK if sep else EXIT_NEGATIVE


def cmd_mcp(args: argparse.Namespace) -> int:
    g = _load(args.file)
    mcps = enumerate_minimal_collider_paths(g, _budget(args))
    sys.stdout.write(serialize_mcp(mcps))
    print(f"count={len(mcps)}")
    return EXIT_OK


def cmd_equiv(args: argparse.Namespace) -> int:
    g1, g2 = _load(args.file1), _load(args.file2)
    verdicts = []
    if args.method in ("zzl", "both"):
        verdicts.append(zzl_equivalent(g1, g2, _budget(args)))
    if args.method in ("oracle", "both"):
        verdicts.append(oracle_equivalent(g1, g2))
    for v in verdicts:
        sys.stdout.write(v.to_text())
    if len(verdicts) == 2:
        print(f"agreement: {_bool(verdicts[0].equivalent == verdicts[1].equivalent)}")
    return EXIT_OK if verdicts[0].equivalent else EXIT_NEGATIVE


def cmd_gen_gk(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise UsageError("k must be at least 1")
    text = serialize_mag(generate_gk(args.k))
    if args.out:
        FsPath(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if args.kmax < 2:
        raise UsageError("--kmax must be at least 2")
    paths = args.budget_paths if args.budget_paths is not None else default_budget_paths()
    rows = growth_report(args.kmax, Budget(max_paths=paths))
    csv_text = rows_to_csv(rows)
    if args.csv:
        FsPath(args.csv).write_text(csv_text)
        sys.stdout.write(format_table(rows))
    else:
        sys.stderr.write(format_table(rows))
        sys.stdout.write(csv_text)
    if any(r.status != "ok" for r in rows):
        print(f"budget exceeded at k={rows[-1].k} (max_paths={paths})", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="magpath", description="Maximal ancestral graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check ancestrality and maximality")
    p.add_argument("file")
    p.add_argument("--force", action="store_true", help="run the exhaustive maximality check on large graphs")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("msep", help="m-separation query")
    p.add_argument("file")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--given", default="", help="comma-separated conditioning set")
    p.set_defaults(func=cmd_msep)

    def budget_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget-paths", type=int, default=None, help=f"max paths (default ${BUDGET_ENV} or {DEFAULT_MAX_PATHS})")
        p.add_argument("--budget-len", type=int, default=None, help="max path length in edges")

    p = sub.add_parser("mcp", help="list minimal collider paths")
    p.add_argument("file")
    budget_flags(p)
    p.set_defaults(func=cmd_mcp)

    p = sub.add_parser("equiv", help="Markov equivalence of two MAGs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--method", choices=("zzl", "oracle", "both"), default="zzl")
    budget_flags(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("gen-gk", help="write the bipartite bidirected graph G_k")
    p.add_argument("k", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen_gk)

    p = sub.add_parser("bench", help="minimal-collider-path growth over G_2..G_kmax")
    p.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    p.add_argument("--budget-paths", type=int, default=None)
    p.add_argument("--csv", default=None, help="write CSV here (default: stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
