"""``tribreak`` command line.

Exit codes: 0 success, 2 usage, 3 infeasible request, 4 data error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from . import bench
from .baselines import (
    EDGE_SCORE_RULE,
    PageRankConfig,
    evaluate_set,
    max_degree_edges,
    max_degree_nodes,
    pagerank_edges,
    pagerank_nodes,
    random_edges,
    random_nodes,
)
from .edge_breaker import bound_edge, dak_e, min_break_edge
from .errors import DatasetMissingError, GraphFormatError, InfeasibleError, InstanceTooLargeError
from .generators import PowerLawParams, gnp_graph, power_law_graph
from .graph import read_edge_list
from .node_breaker import bound_node, dak_n, min_break_node
from .oracle import brute_force_opt_edges, brute_force_opt_nodes
from .plan import RemovalPlan, cumulative_sums
from .triangles import count_forward, list_triangles

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_DATA = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # the subparser copies use SUPPRESS so a flag given before the
    # subcommand is not clobbered by the subparser default
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv"), default=d("json"))
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--out", default=d(None), help="write output here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribreak", parents=[_global_flags(False)],
        description="Find nodes or edges whose removal breaks the most triangles.",
    )
    common = _global_flags(True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count (or list) triangles")
    p.add_argument("file")
    p.add_argument("--list", action="store_true", help="stream every triangle as CSV")

    for name, what in (("break-node", "nodes"), ("break-edge", "edges")):
        p = sub.add_parser(name, parents=[common], help=f"greedy triangle-breaking {what}")
        p.add_argument("file")
        p.add_argument("--k", type=int)
        p.add_argument("--min-p", type=int, help="fewest removals that break at least P triangles")
        p.add_argument("--bound", action="store_true", help="attach the optimality certificate")

    p = sub.add_parser("baseline", parents=[common], help="heuristic baselines")
    p.add_argument("file")
    p.add_argument("--method", required=True, choices=("maxdeg", "pagerank", "random"))
    p.add_argument("--target", default="node", choices=("node", "edge"))
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("oracle", parents=[common], help="exact optimum by enumeration (small graphs)")
    p.add_argument("file")
    p.add_argument("--target", default="node", choices=("node", "edge"))
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("bench", parents=[common], help="quality/runtime sweep or scaling probe")
    p.add_argument("--dataset", action="append", default=[],
                   help=f"manifest entry ({', '.join(bench.MANIFEST)}); repeatable")
    p.add_argument("--file", action="append", default=[], help="edge-list file; repeatable")
    p.add_argument("--methods", default=",".join(bench.METHODS))
    p.add_argument("--target", default="node", choices=("node", "edge"))
    p.add_argument("--k-grid", default=",".join(map(str, bench.DEFAULT_K_GRID)))
    p.add_argument("--scaling", action="store_true", help="run the Phase-2/Phase-1 scaling probe")
    p.add_argument("--sizes", default="10000,100000,1000000")
    p.add_argument("--gamma", type=float, default=2.5)
    p.add_argument("--repeats", type=int, default=3)

    p = sub.add_parser("gen", parents=[common], help="write a synthetic edge list")
    p.add_argument("--model", default="powerlaw", choices=("powerlaw", "gnp"))
    p.add_argument("--m", type=int, default=10_000, help="target edge count (powerlaw)")
    p.add_argument("--gamma", type=float, default=2.5)
    p.add_argument("--n", type=int, default=100, help="node count (gnp)")
    p.add_argument("--p", type=float, default=0.1, help="edge probability (gnp)")
    return parser


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _plan_csv(payload: dict) -> str:
    rows = []
    for i, (sel, gain, cum) in enumerate(zip(payload["selected"], payload["gains"], payload["cumulative"]), 1):
        ident = f"{sel[0]}-{sel[1]}" if isinstance(sel, list) else sel
        rows.append((i, ident, gain, cum))
    return _csv(rows, ("step", "selected", "gain", "cumulative"))


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cmd_count(args, out):
    g, _ = read_edge_list(args.file)
    if args.list:
        tri = list_triangles(g).as_original(g)
        out.write(_csv(tri, ("a", "b", "c")))
        return
    total = count_forward(g).total
    payload = {"n": g.n, "m": g.edge_count, "total_triangles": total}
    if args.format == "csv":
        out.write(_csv([payload.values()], payload.keys()))
    else:
        out.write(_dump(payload))


def _plan_payload(plan: RemovalPlan, bound, elapsed_s: float, k=None) -> dict:
    d = plan.to_dict()
    if k is not None:
        d["k"] = k
    d.pop("target")
    d["bound"] = bound.to_dict() if bound is not None else None
    d["runtime_ms"] = round(elapsed_s * 1e3, 3)
    return d


def _cmd_break(args, out, target):
    if (args.k is None) == (args.min_p is None):
        raise UsageError("give exactly one of --k or --min-p")
    g, _ = read_edge_list(args.file)
    t0 = time.perf_counter()
    if args.k is not None:
        plan = (dak_n if target == "node" else dak_e)(g, args.k)
    else:
        plan = (min_break_node if target == "node" else min_break_edge)(g, args.min_p)
    elapsed = time.perf_counter() - t0
    bound = (bound_node if target == "node" else bound_edge)(g, plan) if args.bound else None
    payload = _plan_payload(plan, bound, elapsed)
    if args.min_p is not None:
        payload["p"] = args.min_p
    out.write(_plan_csv(payload) if args.format == "csv" else _dump(payload))


def _cmd_baseline(args, out):
    g, _ = read_edge_list(args.file)
    node = args.target == "node"
    t0 = time.perf_counter()
    if args.method == "maxdeg":
        chosen = (max_degree_nodes if node else max_degree_edges)(g, args.k)
    elif args.method == "pagerank":
        chosen = (pagerank_nodes if node else pagerank_edges)(g, args.k, PageRankConfig())
    else:
        chosen = (random_nodes if node else random_edges)(g, args.k, args.seed)
    elapsed = time.perf_counter() - t0
    ev = evaluate_set(g, chosen, args.target)
    gains = [ev.cumulative[0]] + [b - a for a, b in zip(ev.cumulative, ev.cumulative[1:])] if chosen else []
    plan = RemovalPlan(args.target, args.method, chosen, gains, cumulative_sums(gains), count_forward(g).total)
    payload = _plan_payload(plan, None, elapsed, k=args.k)
    if args.method == "random":
        payload["seed"] = args.seed
    elif args.method == "pagerank":
        payload["pagerank"] = PageRankConfig().to_dict()
    if not node:
        payload["edge_score_rule"] = EDGE_SCORE_RULE
    out.write(_plan_csv(payload) if args.format == "csv" else _dump(payload))


def _cmd_oracle(args, out):
    g, _ = read_edge_list(args.file)
    res = (brute_force_opt_nodes if args.target == "node" else brute_force_opt_edges)(g, args.k)
    payload = {"target": args.target, "k": args.k, **res.to_dict()}
    if args.format == "csv":
        sel = [f"{s[0]}-{s[1]}" if isinstance(s, (list, tuple)) else s for s in payload["best_set"]]
        out.write(_csv([(args.k, payload["opt_value"], " ".join(map(str, sel)))], ("k", "opt_value", "best_set")))
    else:
        out.write(_dump(payload))


def _cmd_bench(args, out):
    if args.scaling:
        rows = bench.scaling_probe(_int_list(args.sizes), args.gamma, args.seed, args.repeats)
        if args.format == "csv":
            out.write(_csv([r.values() for r in rows], rows[0].keys() if rows else ()))
        else:
            out.write(_dump({"schema_version": bench.SCHEMA_VERSION, "scaling": rows}))
        return
    methods = [m for m in args.methods.split(",") if m]
    unknown = set(methods) - set(bench.METHODS)
    if unknown:
        raise UsageError(f"unknown methods: {', '.join(sorted(unknown))}")
    graphs = {name: bench.load_dataset(name) for name in args.dataset}
    for f in args.file:
        graphs[Path(f).name] = read_edge_list(f)[0]
    if not graphs:
        raise UsageError("bench needs --dataset, --file or --scaling")
    results = bench.run_bench(graphs, methods, _int_list(args.k_grid), args.target, args.seed)
    out.write(bench.emit_report(results, args.format))


def _cmd_gen(args, out):
    if args.model == "powerlaw":
        g = power_law_graph(PowerLawParams(args.m, args.gamma, args.seed))
    else:
        g = gnp_graph(args.n, args.p, args.seed)
    out.write(g.serialize())


COMMANDS = {
    "count": _cmd_count,
    "break-node": lambda a, o: _cmd_break(a, o, "node"),
    "break-edge": lambda a, o: _cmd_break(a, o, "edge"),
    "baseline": _cmd_baseline,
    "oracle": _cmd_oracle,
    "bench": _cmd_bench,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        COMMANDS[args.command](args, buf)
    except InfeasibleError as exc:
        print(f"tribreak: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (GraphFormatError, DatasetMissingError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"tribreak: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (UsageError, InstanceTooLargeError, ValueError, TypeError) as exc:
        print(f"tribreak: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = buf.getvalue()
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            print(f"tribreak: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_DATA
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
