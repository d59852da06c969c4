"""Command line front end: ``cliquecover <problem> GRAPH ... [options]``.

Vertices are printed with 0-based ids; DIMACS input (1-based) is shifted
down by one on reading.  Exit status 0 means the question was answered
(YES or NO, valid or invalid); usage and input errors exit with 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import BenchConfigError, bench_run, format_report, load_config
from .drivers import ACC_ENGINES, ECC_ENGINES, min_assignment_cover, min_ecc, solve_acc, solve_ecc
from .formats import FormatError, fraction_str, load_solution, parse_graph, parse_pairs, parse_weighted
from .oracles import verify_solution
from .problems import AewcdInstance, AwecpInstance, SearchStats, SearchTimeout
from .reduction import NO, awecp_sanity
from .search_f2 import aewcds, awecps, lrccs, solve_pmc


class UsageError(Exception):
    pass


def _graph(args):
    return parse_graph(args.graph, args.format)


def _weights(path, g, integral):
    we, ws = parse_weighted(path)
    missing = [e for e in g.edges if e not in we]
    extra = [e for e in we if e not in set(g.edges)]
    if missing or extra:
        raise FormatError(f"weights do not match the edges (missing {missing[:3]}, extra {extra[:3]})")
    if integral:
        if any(w.denominator != 1 for w in list(we.values()) + list(ws.values())):
            raise FormatError("exact multiplicities must be integers")
        we = {e: int(w) for e, w in we.items()}
        ws = {v: int(w) for v, w in ws.items()}
    return we, ws


def _reductions(g, red=None) -> dict:
    if red is None:
        return {"rules_applied": 0, "kernel_n": g.n, "kernel_m": g.m}
    return {"rules_applied": red.trace.rules_applied, "kernel_n": red.graph.n, "kernel_m": red.graph.m}


def _envelope(answer, cover, stats: SearchStats, reductions: dict, gamma=None, **extra) -> dict:
    out = {"answer": "YES" if answer else "NO", "cover": [sorted(c) for c in cover] if cover is not None else None}
    if gamma is not None:
        out["gamma"] = [fraction_str(w) for w in gamma]
    out["stats"] = stats.as_json()
    out["reductions"] = reductions
    out.update(extra)
    return out


def _emit(args, env: dict) -> None:
    if args.json:
        print(json.dumps(env))
        return
    if "valid" in env:
        print("valid" if env["valid"] else f"invalid: {env['reason']}")
        return
    print(env["answer"])
    if "value" in env:
        print(f"value {env['value']}")
    gamma = env.get("gamma")
    for i, c in enumerate(env["cover"] or []):
        line = " ".join(map(str, c))
        print(line if gamma is None else f"{line}  weight {gamma[i]}")
    if args.stats:
        s = env["stats"]
        r = env["reductions"]
        print(f"nodes {s['nodes']} depth {s['depth']} max_branching {s['max_branching']} time_ms {s['time_ms']}")
        print(f"rules_applied {r['rules_applied']} kernel_n {r['kernel_n']} kernel_m {r['kernel_m']}")


def cmd_ecc(args) -> dict:
    g = _graph(args)
    out = solve_ecc(g, args.k, args.engine, reduce=not args.no_reduce, time_limit=args.time_limit)
    return _envelope(out.answer, out.cliques, out.stats, _reductions(g, out.reduced))


def cmd_acc(args) -> dict:
    g = _graph(args)
    out = solve_acc(g, args.t, args.engine, reduce=not args.no_reduce, time_limit=args.time_limit)
    return _envelope(out.answer, out.cliques, out.stats, _reductions(g, out.reduced))


def cmd_wecp(args) -> dict:
    g = _graph(args)
    we, ws = _weights(args.weights, g, integral=True)
    inst = AwecpInstance(g, args.k, we, ws)
    if not args.no_reduce and awecp_sanity(inst) == NO:
        red = {"rules_applied": 1, "kernel_n": g.n, "kernel_m": g.m}
        return _envelope(False, None, SearchStats(), red)
    sol = awecps(inst, time_limit=args.time_limit)
    return _envelope(sol.answer, sol.cliques, sol.stats, _reductions(g))


def cmd_ewcd(args) -> dict:
    if args.integer != (args.wmax is not None):
        raise UsageError("--integer and --wmax go together")
    g = _graph(args)
    we, ws = _weights(args.weights, g, integral=False)
    inst = AewcdInstance(g, args.k, we, ws)
    sol = aewcds(inst, merged=args.merged, wmax=args.wmax, time_limit=args.time_limit)
    return _envelope(sol.answer, sol.cliques, sol.stats, _reductions(g), gamma=sol.gamma)


def cmd_lrcc(args) -> dict:
    g = _graph(args)
    estar = parse_pairs(args.estar) if args.estar else []
    for u, v in estar:
        if not g.has_edge(u, v):
            raise FormatError(f"({u}, {v}) in {args.estar} is not an edge")
    sol = lrccs(g, args.k, estar, time_limit=args.time_limit)
    return _envelope(sol.answer, sol.cliques, sol.stats, _reductions(g))


def cmd_pmc(args) -> dict:
    g = _graph(args)
    pairs = parse_pairs(args.pairs) if args.pairs else []
    try:
        colours, sol = solve_pmc(g, args.k, pairs, time_limit=args.time_limit)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    extra = {}
    if colours is not None:
        extra["colours"] = {str(v): sorted(cs) for v, cs in colours.items()}
    return _envelope(sol.answer, sol.cliques, sol.stats, _reductions(g), **extra)


def cmd_min_ecc(args) -> dict:
    g = _graph(args)
    k, cover, stats = min_ecc(g, args.engine, reduce=not args.no_reduce)
    return _envelope(True, cover, stats, _reductions(g), value=k)


def cmd_min_assign(args) -> dict:
    g = _graph(args)
    t, cover, stats = min_assignment_cover(g, args.engine)
    return _envelope(True, cover, stats, _reductions(g), value=t)


def cmd_verify(args) -> dict:
    g = _graph(args)
    cover, gamma = load_solution(args.solution)
    we = ws = None
    if args.weights:
        we, ws = _weights(args.weights, g, integral=args.problem == "wecp")
    elif args.problem in ("wecp", "ewcd"):
        raise UsageError(f"verify {args.problem} needs --weights")
    pairs = []
    if args.problem == "lrcc" and args.estar:
        pairs = parse_pairs(args.estar)
    if args.problem == "pmc" and args.pairs:
        pairs = parse_pairs(args.pairs)
    param = args.t if args.problem == "acc" else args.k
    chk = verify_solution(args.problem, g, cover, param, gamma=gamma, edge_w=we, vertex_w=ws, pairs=pairs)
    return {"valid": chk.ok, "reason": chk.reason}


def cmd_bench(args) -> dict:
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg.seed = args.seed
    rep = bench_run(cfg)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(rep.to_csv())
    if args.json:
        print(json.dumps(rep.to_json()))
    else:
        print(format_report(rep))
    return None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON result envelope")
    common.add_argument("--stats", action="store_true", help="print search statistics")
    common.add_argument("--seed", type=int, default=None, help="base seed (bench)")
    common.add_argument("--time-limit", type=float, default=None, metavar="SEC")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("graph", help="DIMACS .col or 0-based edge list")
    graph.add_argument("--format", choices=["auto", "dimacs", "edgelist"], default="auto")
    graph.add_argument("--no-reduce", action="store_true", help="search the input graph without kernelization")

    p = argparse.ArgumentParser(prog="cliquecover", description="Exact clique cover solvers.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ecc", parents=[common, graph], help="edge clique cover with at most k cliques")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--engine", choices=sorted(ECC_ENGINES), default="f2")
    s.set_defaults(func=cmd_ecc)

    s = sub.add_parser("acc", parents=[common, graph], help="edge clique cover of total size at most t")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--engine", choices=sorted(ACC_ENGINES), default="f2")
    s.set_defaults(func=cmd_acc)

    s = sub.add_parser("wecp", parents=[common, graph], help="exact edge (and vertex) multiplicities")
    s.add_argument("weights")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_wecp)

    s = sub.add_parser("ewcd", parents=[common, graph], help="weighted clique decomposition")
    s.add_argument("weights")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--integer", action="store_true", help="integer clique weights only")
    s.add_argument("--wmax", type=int, default=None, help="largest integer weight tried")
    s.add_argument("--merged", action="store_true", help="merged branching variant")
    s.set_defaults(func=cmd_ewcd)

    s = sub.add_parser("lrcc", parents=[common, graph], help="vertex clique cover respecting required edges")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--estar", metavar="FILE", help="required edges, one pair per line")
    s.set_defaults(func=cmd_lrcc)

    s = sub.add_parser("pmc", parents=[common, graph], help="multicolouring with shared-colour pairs")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--pairs", metavar="FILE", help="non-adjacent pairs that must share a colour")
    s.set_defaults(func=cmd_pmc)

    s = sub.add_parser("min-ecc", parents=[common, graph], help="fewest cliques covering all edges")
    s.add_argument("--engine", choices=sorted(ECC_ENGINES), default="f2")
    s.set_defaults(func=cmd_min_ecc)

    s = sub.add_parser("min-assign", parents=[common, graph], help="smallest total clique size")
    s.add_argument("--engine", choices=sorted(ACC_ENGINES), default="f2")
    s.set_defaults(func=cmd_min_assign)

    s = sub.add_parser("verify", parents=[common, graph], help="check a solution file")
    s.add_argument("--solution", required=True, metavar="FILE")
    s.add_argument("--problem", choices=["ecc", "acc", "wecp", "ewcd", "lrcc", "pmc"], default="ecc")
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--t", type=int, default=None)
    s.add_argument("--weights", metavar="FILE")
    s.add_argument("--estar", metavar="FILE")
    s.add_argument("--pairs", metavar="FILE")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", parents=[common], help="compare engine search trees on G(n, p)")
    s.add_argument("--config", required=True, metavar="FILE")
    s.add_argument("--csv", metavar="FILE", help="also write per-instance rows as CSV")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        env = args.func(args)
    except UsageError as exc:
        print(f"cliquecover: error: {exc}", file=sys.stderr)
        return 2
    except (FormatError, BenchConfigError, OSError) as exc:
        print(f"cliquecover: error: {exc}", file=sys.stderr)
        return 2
    except SearchTimeout:
        print("cliquecover: time limit reached without an answer", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"cliquecover: error: {exc}", file=sys.stderr)
        return 2
    if env is not None:
        _emit(args, env)
    return 0


if __name__ == "__main__":
    sys.exit(main())
