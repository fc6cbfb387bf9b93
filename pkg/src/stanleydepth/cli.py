"""Command-line front end.

Subcommands map onto the library: ``qdepth``/``sdepth``/``poset`` consume
ideal files (two files mean a subquotient J/I, upper ideal first),
``indep``/``gamma`` consume graph files, ``scan`` sweeps a graph family
writing one JSON line per graph, and ``check-examples`` runs the embedded
regression fixtures.

Exit codes: 0 success, 1 usage or parse error, 2 violated mathematical
precondition, 3 search undecided within budget.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import checks
from .errors import (
    LatticeLimitError,
    NotASubidealError,
    ParseError,
    StanleyDepthError,
)
from .fileio import parse_graph_file, parse_ideal_file
from .graph_ideals import independence_ideal, invariants, gamma, sandwich_report
from .graphs import all_graphs, canonical_key, graph_families
from .ideals import (
    MonomialIdeal,
    poset_of_ideal,
    poset_of_quotient,
    poset_of_subquotient,
    unit_ideal,
)
from .intervals import partition_to_json
from .qdepth import beta_profile, qdepth_from_alpha
from .search import SearchBudget, sdepth
from .subsets import alpha_vector

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_UNDECIDED = 3

REPORT_SCHEMA = "stanleydepth-report/1"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems via exit code 1."""

    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="stanleydepth", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--budget", type=float, default=600.0,
                        help="wall-clock budget in seconds for exact search (default 600)")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker processes for scan (default 1)")
    parser.add_argument("--max-n", type=int, default=None,
                        help="lattice enumeration guard (default 24 or STANLEY_MAX_N)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qdepth", help="quasi-depth of S/I or J/I from ideal files")
    p.add_argument("ideal", help="ideal file (J when a second file is given)")
    p.add_argument("subideal", nargs="?", help="contained ideal I for the subquotient J/I")

    p = sub.add_parser("sdepth", help="exact Stanley depth of S/I or J/I")
    p.add_argument("ideal")
    p.add_argument("subideal", nargs="?")
    p.add_argument("--witness", action="store_true", help="include a verified witness partition")

    p = sub.add_parser("poset", help="level counts of the posets attached to ideal files")
    p.add_argument("ideal")
    p.add_argument("subideal", nargs="?")

    p = sub.add_parser("indep", help="independence-ideal report for a graph file")
    p.add_argument("graph")
    p.add_argument("--witness", action="store_true")

    p = sub.add_parser("gamma", help="gamma invariant of a graph file")
    p.add_argument("graph")

    p = sub.add_parser("scan", help="sweep a graph family, one JSON line per graph")
    p.add_argument("--family", default="all",
                   choices=["all", "complete", "cycle", "path", "discrete"])
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", required=True, help="JSON-lines output path")
    p.add_argument("--resume", action="store_true",
                   help="skip graph keys already present in the output file")
    p.add_argument("--no-dedup", action="store_true",
                   help="scan all labeled graphs instead of one per isomorphism class")

    sub.add_parser("check-examples", help="run the embedded regression fixtures")
    return parser


def _load_pair(args) -> tuple[MonomialIdeal, MonomialIdeal, str]:
    """Load (J, I) from one or two ideal files; one file means J = S."""
    first = parse_ideal_file(args.ideal)
    if args.subideal is None:
        return unit_ideal(first.n), first, "S/I"
    second = parse_ideal_file(args.subideal)
    return first, second, "J/I"


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True))
        return
    for key, value in report.items():
        if key == "schema":
            continue
        print(f"{key}: {value}")


def _origin(value, origin: str) -> dict:
    return {"value": value, "origin": origin}


def cmd_qdepth(args) -> int:
    upper, lower, kind = _load_pair(args)
    family = poset_of_subquotient(upper, lower, args.max_n)
    alphas = alpha_vector(family)
    value = qdepth_from_alpha(alphas)
    report = {
        "schema": REPORT_SCHEMA,
        "command": "qdepth",
        "module": kind,
        "inputs": {"ideal": args.ideal, "subideal": args.subideal},
        "n": family.n,
        "members": len(family),
        "alpha": list(alphas.counts),
        "qdepth": _origin(value, "closed-form"),
        "beta_at_qdepth": list(beta_profile(alphas, value).betas),
        "note": "sdepth <= qdepth always; qdepth = n on an empty family by convention",
    }
    if value < family.n:
        above = beta_profile(alphas, value + 1)
        report["beta_above"] = {
            "d": value + 1,
            "betas": list(above.betas),
            "first_negative_index": above.first_negative_index(),
        }
    _emit(report, args.json)
    return EXIT_OK


def cmd_sdepth(args) -> int:
    upper, lower, kind = _load_pair(args)
    family = poset_of_subquotient(upper, lower, args.max_n)
    alphas = alpha_vector(family)
    started = time.monotonic()
    result = sdepth(family, SearchBudget.of(args.budget))
    elapsed = time.monotonic() - started
    report = {
        "schema": REPORT_SCHEMA,
        "command": "sdepth",
        "module": kind,
        "inputs": {"ideal": args.ideal, "subideal": args.subideal},
        "n": family.n,
        "members": len(family),
        "qdepth": _origin(qdepth_from_alpha(alphas), "closed-form"),
        "status": result.status,
        "timing_seconds": round(elapsed, 3),
    }
    if result.decided:
        report["sdepth"] = _origin(result.value, "search")
        if args.witness and result.witness is not None:
            report["witness"] = json.loads(partition_to_json(result.witness))
    else:
        report["sdepth"] = _origin(None, "search")
        report["undecided_at"] = result.undecided_at
        report["upper_bound"] = _origin(result.upper_bound, "bound")
    _emit(report, args.json)
    return EXIT_OK if result.decided else EXIT_UNDECIDED


def cmd_poset(args) -> int:
    report = {
        "schema": REPORT_SCHEMA,
        "command": "poset",
        "inputs": {"ideal": args.ideal, "subideal": args.subideal},
    }
    if args.subideal is None:
        ideal = parse_ideal_file(args.ideal)
        p_ideal = poset_of_ideal(ideal, args.max_n)
        p_quot = poset_of_quotient(ideal, args.max_n)
        report.update(
            n=ideal.n,
            generators=len(ideal.generators),
            ideal_alpha=list(alpha_vector(p_ideal).counts),
            quotient_alpha=list(alpha_vector(p_quot).counts),
        )
    else:
        upper, lower, _ = _load_pair(args)
        family = poset_of_subquotient(upper, lower, args.max_n)
        report.update(
            n=family.n,
            members=len(family),
            subquotient_alpha=list(alpha_vector(family).counts),
        )
    _emit(report, args.json)
    return EXIT_OK


def _graph_record(graph, budget_seconds: float, max_n) -> dict:
    rep = sandwich_report(
        graph,
        budget=SearchBudget.of(budget_seconds),
        max_n=max_n,
    )
    result = rep.sdepth_
    return {
        "graph_key": canonical_key(graph),
        "n": rep.n,
        "alpha": rep.alpha_g,
        "g": rep.g,
        "depth": rep.depth,
        "gamma": rep.gamma_,
        "qdepth": rep.qdepth_,
        "sdepth": result.value,
        "status": rep.conjecture,
    }


def cmd_indep(args) -> int:
    graph = parse_graph_file(args.graph)
    data = independence_ideal(graph, args.max_n)
    record = invariants(data)
    started = time.monotonic()
    rep = sandwich_report(graph, SearchBudget.of(args.budget), args.max_n)
    elapsed = time.monotonic() - started
    result = rep.sdepth_
    report = {
        "schema": REPORT_SCHEMA,
        "command": "indep",
        "inputs": {"graph": args.graph},
        "n": graph.n,
        "edges": sorted(graph.edges),
        "independent_sets": rep.g,
        "independence_number": rep.alpha_g,
        "reg": _origin(record.reg, "closed-form"),
        "betti": _origin(list(record.betti), "closed-form"),
        "pd": _origin(record.pd, "closed-form"),
        "dim": _origin(record.dim, "closed-form"),
        "depth": _origin(record.depth, "closed-form"),
        "cohen_macaulay": record.cohen_macaulay,
        "gamma": _origin(rep.gamma_, "closed-form"),
        "qdepth": _origin(rep.qdepth_, "closed-form"),
        "sdepth": _origin(
            result.value, "bound" if rep.used_shortcut else "search"
        ),
        "conjecture_gamma_status": rep.conjecture,
        "timing_seconds": round(elapsed, 3),
    }
    if args.witness and result.witness is not None:
        report["witness"] = json.loads(partition_to_json(result.witness))
    _emit(report, args.json)
    return EXIT_OK if result.decided else EXIT_UNDECIDED


def cmd_gamma(args) -> int:
    graph = parse_graph_file(args.graph)
    data = independence_ideal(graph, args.max_n)
    report = {
        "schema": REPORT_SCHEMA,
        "command": "gamma",
        "inputs": {"graph": args.graph},
        "n": graph.n,
        "g": data.g,
        "gamma": _origin(gamma(data), "closed-form"),
        "depth": _origin(2 * graph.n - data.alpha_g - 1, "closed-form"),
    }
    _emit(report, args.json)
    return EXIT_OK


def _scan_worker(task):
    n, edges, budget_seconds, max_n = task
    from .graphs import Graph

    graph = Graph(n, frozenset(edges))
    try:
        return _graph_record(graph, budget_seconds, max_n)
    except StanleyDepthError as exc:
        return {
            "graph_key": canonical_key(graph),
            "n": n,
            "status": "error",
            "error": str(exc),
        }


def cmd_scan(args) -> int:
    if args.n_min < 1 or args.n_max < args.n_min:
        raise _UsageError("need 1 <= n-min <= n-max")
    done: set[str] = set()
    mode = "a"
    try:
        with open(args.out, "r", encoding="utf-8") as fh:
            existing = [json.loads(line) for line in fh if line.strip()]
    except FileNotFoundError:
        existing = []
    if existing:
        if not args.resume:
            raise _UsageError(
                f"output file {args.out} already has {len(existing)} records; "
                "pass --resume to continue it"
            )
        done = {rec["graph_key"] for rec in existing}

    tasks = []
    for n in range(args.n_min, args.n_max + 1):
        if args.family == "all":
            graphs = all_graphs(n, dedup=not args.no_dedup)
        else:
            if args.family == "cycle" and n < 3:
                continue
            graphs = [graph_families(args.family, n)]
        for graph in graphs:
            if canonical_key(graph) in done:
                continue
            tasks.append((graph.n, tuple(sorted(graph.edges)), args.budget, args.max_n))

    records = []
    with open(args.out, mode, encoding="utf-8") as fh:
        def write(rec):
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
            fh.flush()
            records.append(rec)

        if args.threads > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=args.threads) as pool:
                for rec in pool.map(_scan_worker, tasks):
                    write(rec)
        else:
            for task in tasks:
                write(_scan_worker(task))

    summary = sorted(records + existing, key=lambda r: r["graph_key"])
    holds = sum(1 for r in summary if r.get("status") == "holds")
    fails = sum(1 for r in summary if r.get("status") == "fails")
    undecided = len(summary) - holds - fails
    if args.json:
        print(json.dumps({
            "schema": REPORT_SCHEMA,
            "command": "scan",
            "out": args.out,
            "graphs": len(summary),
            "holds": holds,
            "fails": fails,
            "undecided_or_error": undecided,
        }, sort_keys=True))
    else:
        print(f"scanned {len(summary)} graphs -> {args.out}")
        print(f"conjecture holds: {holds}, fails: {fails}, undecided/error: {undecided}")
    return EXIT_OK


def cmd_check_examples(args) -> int:
    results = checks.run_all(budget_seconds=args.budget)
    if args.json:
        print(json.dumps({
            "schema": REPORT_SCHEMA,
            "command": "check-examples",
            "fixtures": [
                {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
            ],
            "passed": all(r.ok for r in results),
        }, sort_keys=True))
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}  {r.detail}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_USAGE


_COMMANDS = {
    "qdepth": cmd_qdepth,
    "sdepth": cmd_sdepth,
    "poset": cmd_poset,
    "indep": cmd_indep,
    "gamma": cmd_gamma,
    "scan": cmd_scan,
    "check-examples": cmd_check_examples,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.budget <= 0:
            raise _UsageError("--budget must be positive")
        if args.threads < 1:
            raise _UsageError("--threads must be >= 1")
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotASubidealError, LatticeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
