"""Command-line front end.

Exit codes: 0 positive answer / success, 1 negative answer or failed
claim, 2 bad input, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .decide import is_23_cordial, is_23_orientable, extremal_zero_count, max_arcs, tournament_census, verify_extremal_bound
from .graphs import (
    Digraph,
    gen_complete_graph,
    gen_cycle_out_fan,
    gen_cycle_out_wheel,
    gen_fan,
    gen_parallel_edges_graph,
    gen_wheel,
)
from .harness import CLAIMS, run_claims
from .io import ParseError, format_graph_text, format_labelling_text, parse_graph_text, to_dot
from .labelling import CapExceededError, Scope

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

GENERATORS = {
    "wheel": gen_wheel,
    "fan": gen_fan,
    "cycle-out-wheel": gen_cycle_out_wheel,
    "cycle-out-fan": gen_cycle_out_fan,
    "parallel": gen_parallel_edges_graph,
    "complete": gen_complete_graph,
}


def _emit(args, payload: dict | list, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _verdict_text(kind: str, verdict) -> str:
    lines = [f"{kind}: {'yes' if verdict.decision else 'no'}", f"labellings examined: {verdict.search_space}"]
    if verdict.witness is not None:
        lam = verdict.witness.lam
        lines.append(f"lambda: alpha={lam.alpha} beta={lam.beta} gamma={lam.gamma}")
        lines.append("witness labelling:")
        lines.append(format_labelling_text(verdict.witness.labelling).rstrip())
        if verdict.witness.orientation is not None:
            lines.append("witness orientation:")
            lines.append(format_graph_text(verdict.witness.orientation).rstrip())
    return "\n".join(lines) + "\n"


def _read(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def cmd_check(args) -> int:
    obj = _read(args.path)
    if isinstance(obj, Digraph):
        verdict, kind = is_23_cordial(obj, args.scope), "(2,3)-cordial"
    else:
        verdict, kind = is_23_orientable(obj, args.scope), "(2,3)-orientable"
    _emit(args, dict(verdict.to_dict(), property=kind), _verdict_text(kind, verdict))
    return EXIT_YES if verdict.decision else EXIT_NO


def cmd_orientable(args) -> int:
    obj = _read(args.path)
    graph = obj.underlying() if isinstance(obj, Digraph) else obj
    verdict = is_23_orientable(graph, args.scope)
    kind = "(2,3)-orientable"
    _emit(args, dict(verdict.to_dict(), property=kind), _verdict_text(kind, verdict))
    return EXIT_YES if verdict.decision else EXIT_NO


def cmd_gen(args) -> int:
    obj = GENERATORS[args.family](args.n)
    text = to_dot(obj, name=args.family.replace("-", "_")) if args.dot else format_graph_text(obj)
    sys.stdout.write(text)
    return EXIT_YES


def cmd_census(args) -> int:
    report = tournament_census(args.n)
    lines = [
        f"n={report.n}: {report.total} labelled tournaments, {len(report.rows)} classes, "
        f"{report.cordial} cordial, {report.noncordial} non-cordial",
        f"{'canonical form':<20} {'out-degrees':<20} {'size':>6}  cordial",
    ]
    for row in report.rows:
        degrees = ",".join(map(str, row.out_degrees))
        lines.append(f"{row.form.hex():<20} {degrees:<20} {row.size:>6}  {'yes' if row.cordial else 'no'}")
    _emit(args, [r.to_dict() for r in report.rows], "\n".join(lines))
    return EXIT_YES


def cmd_extremal(args) -> int:
    bound = max_arcs(args.n)
    zeros = extremal_zero_count(args.n)
    payload: dict = {"n": args.n, "Z": zeros, "max_arcs": bound}
    lines = [f"n={args.n} Z={zeros} max_arcs={bound}"]
    code = EXIT_YES
    if args.verify:
        report = verify_extremal_bound(args.n)
        payload["verification"] = report.to_dict()
        lines.append(f"witness with {bound} arcs cordial: {'yes' if report.witness_cordial else 'no'}")
        lines.append(
            f"subgraphs with {bound + 1} edges examined: {report.subsets_examined}, "
            f"orientable: {len(report.orientable_above_bound)}"
        )
        lines.append(f"bound confirmed: {'yes' if report.confirmed else 'no'}")
        code = EXIT_YES if report.confirmed else EXIT_NO
    _emit(args, payload, "\n".join(lines))
    return code


def cmd_verify(args) -> int:
    ids = [c for c in args.claims.split(",") if c] if args.claims else None
    report = run_claims(ids, threads=args.threads)
    lines = []
    for row in report.rows:
        lines.append(f"[{'PASS' if row.passed else 'FAIL'}] {row.id:<14} {row.runtime:7.2f}s  {row.result} ({row.instances})")
        lines.append(f"       {row.detail}")
    lines.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
    _emit(args, report.to_dict(), "\n".join(lines))
    return EXIT_YES if report.passed else EXIT_NO


def _add_globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument("--json", action="store_true", default=default(False), help="machine-readable output")
    parser.add_argument(
        "--scope",
        choices=[s.value for s in Scope],
        default=default(Scope.NONISOLATED.value),
        help="vertices counted for friendliness (default: nonisolated)",
    )
    parser.add_argument("--threads", type=int, default=default(1), help="worker threads for verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cordial", description="(2,3)-cordiality of digraphs")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _add_globals(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "decide cordiality (D file) or orientability (G file)")
    p.add_argument("path")
    p = add("orientable", cmd_orientable, "decide orientability of a graph or a digraph's underlying graph")
    p.add_argument("path")
    p = add("gen", cmd_gen, "emit a graph family member")
    p.add_argument("family", choices=sorted(GENERATORS))
    p.add_argument("n", type=int)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of the text format")
    p = add("census", cmd_census, "isomorphism-class census of labelled tournaments")
    p.add_argument("n", type=int)
    p = add("extremal", cmd_extremal, "closed-form maximum arc count")
    p.add_argument("n", type=int)
    p.add_argument("--verify", action="store_true", help="exhaustively check the bound (n <= 7)")
    p = add("verify", cmd_verify, "re-check every claim")
    p.add_argument("--claims", default="", help=f"comma-separated subset of: {','.join(c.id for c in CLAIMS)}")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
