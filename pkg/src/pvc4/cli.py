"""Command line interface.

Subcommands: solve, minimize, verify, gen, bench, selftest. Exit codes:
0 = yes / ok, 1 = no / not-a-cover, 2 = usage or internal error.

Reports are deterministic for identical inputs and flags; wall-clock
timings are only emitted under --timing. The node budget can be overridden
with --node-cap or the PVC4_NODE_CAP environment variable.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional

from . import generators
from .errors import (
    GenerationError,
    GraphFormatError,
    InvalidInstanceError,
    InvariantViolation,
    NodeBudgetExceeded,
)
from .fileformat import parse, render
from .graph import Graph
from .instance import Instance
from .oracle import brute_min_pvc4, enumerate_labeled_graphs
from .solver import (
    DEFAULT_NODE_CAP,
    CoverResult,
    iterative_compression,
    minimize,
    solve_disjoint,
    verify_cover,
)

LEAF_BOUND_BASE = 1.62


def leaf_bound(k: int) -> int:
    return math.ceil(LEAF_BOUND_BASE ** max(k, 0))


def _node_cap(args) -> int:
    if args.node_cap is not None:
        return args.node_cap
    env = os.environ.get("PVC4_NODE_CAP")
    return int(env) if env else DEFAULT_NODE_CAP


def _read_input(path: str):
    try:
        with open(path) as fh:
            return parse(fh.read())
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc}") from exc


class _Usage(Exception):
    pass


def _stats_dict(result: CoverResult, timing: bool) -> dict:
    stats = result.stats
    out = {
        "nodes": stats.nodes,
        "leaves": stats.leaves,
        "max_depth": stats.max_depth,
        "rule_fires": {str(rid): n for rid, n in sorted(stats.rule_fires.items())},
    }
    if timing:
        out["elapsed_sec"] = stats.elapsed
    return out


def _emit_result(args, result: CoverResult, k: int) -> int:
    cover = sorted(v + 1 for v in result.cover) if result.cover is not None else None
    if args.format == "json":
        payload = {
            "schema": 1,
            "command": "solve",
            "k": k,
            "answer": "yes" if cover is not None else "no",
            "cover": cover,
            "stats": _stats_dict(result, args.timing),
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"answer: {'yes' if cover is not None else 'no'}")
        if cover is not None:
            print(f"size: {len(cover)}")
            print(f"cover: {' '.join(map(str, cover))}")
        stats = _stats_dict(result, args.timing)
        print(f"nodes: {stats['nodes']}")
        print(f"leaves: {stats['leaves']}")
        print(f"max_depth: {stats['max_depth']}")
        fires = " ".join(f"{rid}:{n}" for rid, n in stats["rule_fires"].items())
        print(f"rule_fires: {fires}")
        if args.timing:
            print(f"elapsed_sec: {stats['elapsed_sec']:.3f}")
    return 0 if cover is not None else 1


def _cmd_solve(args) -> int:
    obj = _read_input(args.input)
    trace = _make_tracer(args)
    if isinstance(obj, Instance):
        inst = obj.with_budget(args.k) if args.k is not None else obj
        result = solve_disjoint(inst, node_cap=_node_cap(args), on_node=trace)
        return _emit_result(args, result, inst.k)
    if args.k is None:
        raise _Usage("-k is required when the input file has no v1 lines")
    result = iterative_compression(obj, args.k, node_cap=_node_cap(args))
    return _emit_result(args, result, args.k)


def _make_tracer(args):
    if not getattr(args, "trace", False):
        return None

    def tracer(depth, match, outcome):
        sizes = [len(s) for s in outcome.branches] if hasattr(outcome, "branches") else []
        line = {
            "depth": depth,
            "rule": match.rule_id,
            "witness": _jsonable(match.witness),
            "branch_sizes": sizes,
        }
        print(json.dumps(line, sort_keys=True), file=sys.stderr)

    return tracer


def _jsonable(obj):
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = list(obj) if isinstance(obj, (list, tuple)) else sorted(obj)
        return [_jsonable(x) for x in items]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return repr(obj)


def _cmd_minimize(args) -> int:
    obj = _read_input(args.input)
    if isinstance(obj, Instance):
        raise _Usage("minimize expects a plain graph file (no v1 lines)")
    size, cover = minimize(obj, node_cap=_node_cap(args))
    cover_ids = sorted(v + 1 for v in cover)
    if args.format == "json":
        payload = {
            "schema": 1,
            "command": "minimize",
            "minimum": size,
            "cover": cover_ids,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"minimum: {size}")
        print(f"cover: {' '.join(map(str, cover_ids))}")
    return 0


def _cmd_verify(args) -> int:
    obj = _read_input(args.input)
    graph = obj.graph if isinstance(obj, Instance) else obj
    raw = args.cover.strip()
    try:
        cover = {int(f) - 1 for f in raw.replace(",", " ").split()} if raw else set()
    except ValueError:
        raise _Usage(f"malformed cover list {args.cover!r}") from None
    for v in cover:
        if v not in graph:
            raise _Usage(f"cover vertex {v + 1} is not in the graph")
    ok = verify_cover(graph, cover)
    print("cover valid" if ok else "cover invalid")
    return 0 if ok else 1


def _cmd_gen(args) -> int:
    spec = generators.GenSpec(
        model=args.model,
        n=args.n,
        p=args.p,
        s=args.s,
        seed=args.seed,
        rule_id=args.rule,
    )
    obj = generators.generate(spec)
    meta = f"generator: model={args.model}"
    for name in ("n", "p", "s", "rule"):
        value = getattr(args, name)
        if value is not None:
            meta += f" {name}={value}"
    meta += f" seed={args.seed} rng={generators.RNG_ALGORITHM}"
    text = render(obj, comments=(meta,))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_bench(args) -> int:
    rows: dict[int, dict] = {}
    violations = 0
    fit_points: list[tuple[int, int]] = []
    for idx in range(args.count):
        graph = generators.gnp(args.n, args.p, args.seed + idx)
        records: list[tuple[int, int]] = []

        def sink(k0, stats, records=records):
            records.append((k0, stats.leaves))

        first_yes: Optional[int] = None
        for k in range(args.kmax + 1):
            records.clear()
            result = iterative_compression(
                graph, k, node_cap=_node_cap(args), disjoint_stats_sink=sink
            )
            row = rows.setdefault(
                k, {"yes": 0, "no": 0, "nodes": 0, "leaves": 0, "bound_bad": 0}
            )
            row["yes" if result.cover is not None else "no"] += 1
            row["nodes"] += result.stats.nodes
            row["leaves"] += result.stats.leaves
            bad = sum(1 for k0, leaves in records if leaves > leaf_bound(k0))
            row["bound_bad"] += bad
            violations += bad
            if result.cover is not None and first_yes is None:
                first_yes = k
            if result.cover is None:
                fit_points.append((k, result.stats.nodes))
            if first_yes is not None and k >= first_yes:
                break
    print(f"{'k':>4} {'yes':>5} {'no':>5} {'nodes':>10} {'leaves':>10} {'bound_ok':>9}")
    for k in sorted(rows):
        row = rows[k]
        ok = "yes" if row["bound_bad"] == 0 else f"no({row['bound_bad']})"
        print(
            f"{k:>4} {row['yes']:>5} {row['no']:>5} {row['nodes']:>10} "
            f"{row['leaves']:>10} {ok:>9}"
        )
    base = _fit_growth_base(fit_points)
    if base is None:
        print("fitted growth base: n/a (need >= 2 distinct fully-explored budgets)")
    else:
        print(f"fitted growth base: {base:.3f}")
    print(f"leaf bound violations: {violations}")
    return 0 if violations == 0 else 1


def _fit_growth_base(points: list[tuple[int, int]]) -> Optional[float]:
    """Least-squares slope of ln(nodes) against k, exponentiated."""
    data = [(k, math.log(n)) for k, n in points if n > 0]
    ks = sorted({k for k, _ in data})
    if len(ks) < 2:
        return None
    mean_k = sum(k for k, _ in data) / len(data)
    mean_y = sum(y for _, y in data) / len(data)
    var = sum((k - mean_k) ** 2 for k, _ in data)
    if var == 0:
        return None
    cov = sum((k - mean_k) * (y - mean_y) for k, y in data)
    return math.exp(cov / var)


def _cmd_selftest(args) -> int:
    failures = 0
    checked = 0
    for n in range(args.max_n + 1):
        for graph in enumerate_labeled_graphs(n):
            expected = brute_min_pvc4(graph).min_size
            got, cover = minimize(graph, node_cap=_node_cap(args))
            checked += 1
            if got != expected or not verify_cover(graph, cover):
                failures += 1
                print(
                    f"MISMATCH n={n} edges={graph.edges()} oracle={expected} solver={got}",
                    file=sys.stderr,
                )
    print(f"oracle equivalence: {checked} graphs checked, {failures} mismatches")

    obs_failures = 0
    solves = 0
    for idx in range(args.instances):
        graph = generators.gnp(8 + idx % 5, 0.25 + 0.05 * (idx % 6), 1000 + idx)
        try:
            inst = generators.make_disjoint_instance(graph, idx)
        except GenerationError:
            continue
        for k in range(len(inst.v2) + 1):
            solves += 1
            try:
                solve_disjoint(
                    inst.with_budget(k),
                    node_cap=_node_cap(args),
                    check_observations=True,
                )
            except InvariantViolation as exc:
                obs_failures += 1
                print(f"OBSERVATION VIOLATION seed={idx} k={k}: {exc}", file=sys.stderr)
    print(f"observation invariants: {solves} solves checked, {obs_failures} violations")
    return 0 if failures == 0 and obs_failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pvc4",
        description="Exact 4-path vertex cover solver (decision, minimization, tooling).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--node-cap", type=int, default=None, help="search node budget")

    p_solve = sub.add_parser("solve", help="decide a (graph, k) or disjoint instance")
    p_solve.add_argument("--input", "-i", required=True)
    p_solve.add_argument("-k", type=int, default=None)
    p_solve.add_argument("--format", choices=("text", "json"), default="text")
    p_solve.add_argument("--trace", action="store_true", help="JSON per-node trace on stderr")
    p_solve.add_argument("--timing", action="store_true", help="include wall-clock time")
    p_solve.add_argument(
        "--seedless",
        action="store_true",
        help="deterministic single-threaded solve (always on; flag kept for interface stability)",
    )
    add_common(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_min = sub.add_parser("minimize", help="smallest feasible k for a graph file")
    p_min.add_argument("--input", "-i", required=True)
    p_min.add_argument("--format", choices=("text", "json"), default="text")
    add_common(p_min)
    p_min.set_defaults(func=_cmd_minimize)

    p_ver = sub.add_parser("verify", help="check a proposed cover")
    p_ver.add_argument("--input", "-i", required=True)
    p_ver.add_argument("--cover", required=True, help="comma or space separated 1-based ids")
    add_common(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    p_gen = sub.add_parser("gen", help="generate graphs / instances")
    p_gen.add_argument("--model", required=True, choices=generators.MODELS)
    p_gen.add_argument("--n", type=int, default=None)
    p_gen.add_argument("--p", type=float, default=None)
    p_gen.add_argument("--s", type=int, default=None)
    p_gen.add_argument("--rule", type=int, default=None)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--output", "-o", default=None)
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="per-k node/leaf table over random graphs")
    p_bench.add_argument("--n", type=int, default=40)
    p_bench.add_argument("--p", type=float, default=0.08)
    p_bench.add_argument("--count", type=int, default=3)
    p_bench.add_argument("--kmax", type=int, default=12)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--timing", action="store_true")
    add_common(p_bench)
    p_bench.set_defaults(func=_cmd_bench)

    p_self = sub.add_parser("selftest", help="oracle equivalence + observation invariants")
    p_self.add_argument("--max-n", type=int, default=4)
    p_self.add_argument("--instances", type=int, default=25)
    add_common(p_self)
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, GenerationError, InvalidInstanceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NodeBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
