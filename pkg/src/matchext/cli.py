"""Command-line surface: analyze graphs, run single property checks, emit
constructions, sweep theorem checks, and cross-check paired oracles.

Exit status doubles as the predicate so the tool is scriptable in pipes:
0 = holds / no violations, 1 = fails / violations found, 2 = usage error.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Iterable, Iterator, TextIO

from .families import FAMILIES, FamilyError, FamilySpec, build_family
from .graph import Graph, GraphError, parse_edge_list, structure_metrics
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .harness import (
    CHECKS,
    DEFAULT_SEED,
    analyze,
    format_records,
    format_table,
    max_extendability,
    max_factor_criticality,
    random_connected_graphs,
    run_checks,
)
from .properties import (
    PreconditionError,
    is_factor_critical,
    is_k_extendable,
    is_k_half_extendable,
    is_k_half_extendable_via_join,
    is_n_factor_critical,
    tutte_criterion,
)

MAX_VERTICES_LIMIT = 62

PROPERTIES = {
    "k-extendable": (True, is_k_extendable),
    "k-half-extendable": (True, is_k_half_extendable),
    "n-factor-critical": (True, is_n_factor_critical),
    "tutte-criterion": (True, tutte_criterion),
    "factor-critical": (False, lambda g: is_factor_critical(g)),
}


def _open_input(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    return open(path, "r", encoding="ascii")


def _iter_lines(path: str, edge_list: bool = False) -> Iterator[tuple[int, str]]:
    stream = _open_input(path)
    try:
        if edge_list:
            # the fixture format holds a single human-written graph
            yield 1, emit_graph6(parse_edge_list(stream.read()))
            return
        for lineno, line in enumerate(stream, start=1):
            if line.strip():
                yield lineno, line
    finally:
        if stream is not sys.stdin:
            stream.close()


def _decode_all(
    path: str, max_vertices: int, edge_list: bool = False
) -> tuple[list[tuple[int, Graph]], list[tuple[int, str]]]:
    graphs = []
    errors = []
    try:
        lines = list(_iter_lines(path, edge_list))
    except GraphError as exc:
        return [], [(1, str(exc))]
    for lineno, line in lines:
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            errors.append((lineno, str(exc)))
            continue
        if g.order > max_vertices:
            errors.append((lineno, f"order {g.order} above cap {max_vertices}"))
            continue
        graphs.append((lineno, g))
    return graphs, errors


def _report_decode_errors(errors: list[tuple[int, str]]) -> None:
    for lineno, message in errors:
        print(f"line {lineno}: {message}", file=sys.stderr)


def _default_jobs() -> int:
    env = os.environ.get("MATCHEXT_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def cmd_analyze(args) -> int:
    graphs, errors = _decode_all(args.input, args.max_vertices, args.edge_list)
    _report_decode_errors(errors)
    if not graphs and errors:
        return 1
    for lineno, g in graphs:
        report = analyze(g)
        metrics = structure_metrics(g)
        fields = {
            "graph": emit_graph6(g),
            "order": report.order,
            "size": g.edge_count,
            "min_degree": report.min_degree,
            "connectivity": report.connectivity,
            "independence": report.independence,
            "matching_number": report.matching_number,
            "connected": metrics.connected,
            "bipartite": report.bipartite,
            "factor_critical": report.verdicts[("factor-critical", None)],
            "max_extendability": max_extendability(report),
            "max_factor_criticality": max_factor_criticality(report),
        }
        if args.format == "records":
            print(" ".join(f"{key}={value}" for key, value in fields.items()))
        else:
            print(f"graph {lineno}: {fields['graph']}")
            for key, value in fields.items():
                if key != "graph":
                    print(f"  {key:<22} {value}")
    return 0


def cmd_check(args) -> int:
    takes_param, fn = PROPERTIES[args.property]
    if takes_param and args.param is None:
        print(f"property {args.property} requires --param", file=sys.stderr)
        return 2
    if not takes_param and args.param is not None:
        print(f"property {args.property} takes no parameter", file=sys.stderr)
        return 2
    graphs, errors = _decode_all(args.input, args.max_vertices, args.edge_list)
    _report_decode_errors(errors)
    if not graphs:
        return 1
    all_hold = True
    for lineno, g in graphs:
        try:
            verdict = fn(g, args.param) if takes_param else fn(g)
        except PreconditionError as exc:
            print(f"line {lineno}: precondition: {exc}", file=sys.stderr)
            return 2
        all_hold &= verdict
        print(f"line {lineno}: {args.property}"
              + (f"({args.param})" if takes_param else "")
              + f" = {verdict}")
    return 0 if all_hold else 1


def cmd_construct(args) -> int:
    core = None
    if args.core is not None:
        try:
            core = parse_graph6(args.core)
        except Graph6Error as exc:
            print(f"bad --core graph6: {exc}", file=sys.stderr)
            return 2
    spec = FamilySpec(args.family, nu=args.nu, n=args.n, k=args.k, m=args.m, core=core)
    try:
        g = build_family(spec)
    except FamilyError as exc:
        print(f"construct: {exc}", file=sys.stderr)
        return 2
    print(emit_graph6(g))
    return 0


def _verify_stream(args) -> Iterable[tuple[int, str]]:
    if args.random is not None:
        return (
            (i, emit_graph6(g))
            for i, g in enumerate(
                random_connected_graphs(args.random, seed=args.seed), start=1
            )
        )

    def capped():
        for lineno, line in _iter_lines(args.input, args.edge_list):
            payload = line.strip().removeprefix(">>graph6<<")
            if payload and 63 <= ord(payload[0]) <= 125:
                order = ord(payload[0]) - 63
                if order > args.max_vertices:
                    print(
                        f"line {lineno}: order {order} above cap {args.max_vertices}",
                        file=sys.stderr,
                    )
                    continue
            yield lineno, line

    return capped()


def cmd_verify(args) -> int:
    check_ids = list(CHECKS) if args.check == "all" else [args.check]
    if args.check != "all" and args.check not in CHECKS:
        print(f"unknown check {args.check!r}; known: {', '.join(CHECKS)} or all",
              file=sys.stderr)
        return 2
    try:
        verdicts, decode_errors = run_checks(check_ids, _verify_stream(args), jobs=args.jobs)
    except GraphError as exc:
        print(f"input: {exc}", file=sys.stderr)
        return 1
    formatter = format_records if args.format == "records" else format_table
    print(formatter(verdicts, decode_errors))
    for verdict in verdicts.values():
        if verdict.status == "VACUOUS-PASS":
            print(f"warning: {verdict.check_id} never fired on this stream",
                  file=sys.stderr)
    if any(v.violations for v in verdicts.values()):
        return 1
    scanned = next(iter(verdicts.values())).scanned if verdicts else 0
    if scanned == 0 and decode_errors:
        return 1
    return 0


def cmd_oracle_diff(args) -> int:
    graphs, errors = _decode_all(args.input, args.max_vertices, args.edge_list)
    _report_decode_errors(errors)
    if not graphs and errors:
        return 1
    disagreements = 0
    for lineno, g in graphs:
        details = []
        for n in range(max(0, g.order - 1)):
            a = is_n_factor_critical(g, n)
            b = tutte_criterion(g, n)
            if a != b:
                details.append(f"criticality n={n}: definitional={a} deficiency={b}")
        if g.order % 2 == 1 and structure_metrics(g).connected:
            for k in range(min(2, (g.order - 3) // 2) + 1):
                a = is_k_half_extendable(g, k)
                b = is_k_half_extendable_via_join(g, k)
                if a != b:
                    details.append(f"half-extendability k={k}: definitional={a} join={b}")
        if details:
            disagreements += len(details)
            for detail in details:
                print(f"line {lineno}: DISAGREE {detail}")
        else:
            print(f"line {lineno}: agree")
    return 1 if disagreements else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchext",
        description="Exact matching-extendability toolkit and theorem harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-",
                           help="graph6 file, one graph per line (default: stdin)")
        p.add_argument("--max-vertices", type=int, default=MAX_VERTICES_LIMIT,
                       help="skip graphs above this order (cap 62)")
        p.add_argument("--edge-list", action="store_true",
                       help="input is one graph in plain 'order size' + edge lines")

    p = sub.add_parser("analyze", help="per-graph property report")
    add_common(p)
    p.add_argument("--format", choices=["table", "records"], default="table")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("check", help="run one property checker; exit reflects verdict")
    p.add_argument("property", choices=sorted(PROPERTIES))
    add_common(p)
    p.add_argument("--param", type=int, default=None, help="k or n parameter")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("construct", help="emit a named family graph as graph6")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--nu", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--core", help="graph6 string for the join core")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="sweep theorem checks over a graph stream")
    p.add_argument("check", help="a check id or 'all'")
    add_common(p)
    p.add_argument("--jobs", type=int, default=None,
                   help="parallel workers (default: MATCHEXT_JOBS or 1)")
    p.add_argument("--format", choices=["table", "records"], default="table")
    p.add_argument("--random", type=int, default=None, metavar="COUNT",
                   help="sweep COUNT seeded random connected graphs instead of input")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("oracle-diff", help="compare every dual-oracle pair")
    add_common(p)
    p.set_defaults(fn=cmd_oracle_diff)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_vertices", None) is not None:
        if args.max_vertices > MAX_VERTICES_LIMIT or args.max_vertices < 1:
            print(f"--max-vertices must be within [1, {MAX_VERTICES_LIMIT}]",
                  file=sys.stderr)
            return 2
    if getattr(args, "jobs", None) is None and args.command == "verify":
        args.jobs = _default_jobs()
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
