"""
Command-line frontend.

Each subcommand reads graph files (see homvariant.multigraph and
homvariant.weighted_target for the formats), validates every option before
computing, and prints exact rationals as "p/q" text on stdout. Logs go to
stderr.

EXIT CODES:
    0  success, or every verdict consistent
    1  a verdict came out inconsistent
    2  input error (the message names the offending field)
    3  budget exceeded, or a verdict is inconclusive
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Callable, Sequence
from typing import Any

from homvariant import __version__
from homvariant.errors import BudgetExceeded, HomvariantError, InputError, ZeroWeightSum
from homvariant.hom_engine import h, hom_fast, hom_tensor, rank_test
from homvariant.invariance_lab import (
    CONSISTENT,
    INCONCLUSIVE,
    INCONSISTENT,
    check_lemma1,
    check_lemma2,
    check_theorem1,
    exhaustive_survey,
    render_json_lines,
    render_table,
)
from homvariant.logger import configure_logging, logger, with_run_context
from homvariant.matroid_poly import (
    METHODS,
    chromatic_polynomial,
    chromatic_value,
    count_tensions,
    flow_polynomial,
    flow_value,
    tutte,
    verify_tutte_hom_identity,
)
from homvariant.multigraph import read_labeled_graph, read_multigraph
from homvariant.rational import format_rational
from homvariant.weighted_target import (
    automorphisms,
    dump_weighted_graph,
    is_symmetric_set,
    orbits_on_maps,
    read_weighted_graph,
    twin_reduction,
    weighted_graph_to_dict,
)

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

_STATUS_EXIT = {CONSISTENT: EXIT_OK, INCONSISTENT: EXIT_INCONSISTENT, INCONCLUSIVE: EXIT_BUDGET}

# Options whose value may start with "-" (argparse reads "-1,1" as a flag).
_SIGNED_VALUE_OPTIONS = ("--set",)


# =============================================================================
# OUTPUT
# =============================================================================


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _key_values(payload: dict[str, Any]) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _orbit_text(orbits: Sequence[Sequence[int]]) -> str:
    return " ".join("{" + ", ".join(map(str, orbit)) + "}" for orbit in orbits)


def parse_residues(text: str) -> list[int]:
    """Comma-separated integers, e.g. "1,4" or "-1,1"."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}", field="--set") from exc


def attach_signed_values(argv: Sequence[str]) -> list[str]:
    """Rewrite `--set -1,1` as `--set=-1,1`."""
    tokens = list(argv)
    joined: list[str] = []
    index = 0
    while index < len(tokens):
        token = tokens[index]
        following = tokens[index + 1] if index + 1 < len(tokens) else None
        if token in _SIGNED_VALUE_OPTIONS and following is not None and following.startswith("-"):
            joined.append(f"{token}={following}")
            index += 2
            continue
        joined.append(token)
        index += 1
    return joined


# =============================================================================
# SUBCOMMANDS
# =============================================================================


def cmd_hom(args: argparse.Namespace) -> int:
    graph, target = read_multigraph(args.graph), read_weighted_graph(args.target)
    value = format_rational(hom_fast(graph, target))
    _emit(args, {"hom": value}, value)
    return EXIT_OK


def cmd_h(args: argparse.Namespace) -> int:
    graph, target = read_multigraph(args.graph), read_weighted_graph(args.target)
    value = format_rational(h(graph, target))
    _emit(args, {"h": value}, value)
    return EXIT_OK


def cmd_tensor(args: argparse.Namespace) -> int:
    graph, target = read_labeled_graph(args.graph), read_weighted_graph(args.target)
    if graph.k != args.k:
        raise InputError(f"--k {args.k} but the graph has {graph.k} labels", field="labels")
    tensor = hom_tensor(graph, target)
    rows = [
        f"{' '.join(map(str, phi))}: {format_rational(value)}"
        for phi, value in zip(tensor.maps(), tensor.entries)
    ]
    _emit(args, tensor.to_dict(), "\n".join(rows))
    return EXIT_OK


def cmd_tutte(args: argparse.Namespace) -> int:
    poly = tutte(read_multigraph(args.graph), method=args.method)
    _emit(args, poly.to_dict(), str(poly))
    return EXIT_OK


def _specialization(
    args: argparse.Namespace,
    name: str,
    value_of: Callable[..., Any],
    poly_of: Callable[..., Any],
) -> int:
    graph = read_multigraph(args.graph)
    if args.n is None:
        poly = poly_of(graph)
        _emit(args, poly.to_dict(), str(poly))
        return EXIT_OK
    value = format_rational(value_of(graph, args.n))
    _emit(args, {name: value, "n": args.n}, value)
    return EXIT_OK


def cmd_chromatic(args: argparse.Namespace) -> int:
    return _specialization(args, "chromatic", chromatic_value, chromatic_polynomial)


def cmd_flow(args: argparse.Namespace) -> int:
    return _specialization(args, "flow", flow_value, flow_polynomial)


def cmd_aut(args: argparse.Namespace) -> int:
    group = automorphisms(read_weighted_graph(args.target))
    payload = {
        "order": group.order,
        "orbits": [list(orbit) for orbit in group.orbits()],
        "elements": [list(gamma.images) for gamma in group.elements],
    }
    lines = [f"order: {group.order}", f"orbits: {_orbit_text(group.orbits())}"]
    lines += [" ".join(map(str, gamma.images)) for gamma in group.elements]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_gentrans(args: argparse.Namespace) -> int:
    group = automorphisms(read_weighted_graph(args.target))
    verdict = group.is_generously_transitive()
    unswappable = group.unswappable_pairs()
    payload = {
        "generously_transitive": verdict,
        "transitive": group.is_transitive(),
        "orbits": [list(orbit) for orbit in group.orbits()],
        "unswappable": [list(pair) for pair in unswappable],
    }
    lines = [
        _bool(verdict),
        f"transitive: {_bool(group.is_transitive())}",
        f"orbits: {_orbit_text(group.orbits())}",
    ]
    if unswappable:
        lines.append("unswappable: " + " ".join(f"({u}, {v})" for u, v in unswappable))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_twinreduce(args: argparse.Namespace) -> int:
    reduction = twin_reduction(read_weighted_graph(args.target))
    payload = {
        "target": weighted_graph_to_dict(reduction.target),
        "kept": [list(members) for members in reduction.kept],
        "dropped": [list(members) for members in reduction.dropped],
    }
    _emit(args, payload, dump_weighted_graph(reduction.target))
    return EXIT_OK


def cmd_orbits(args: argparse.Namespace) -> int:
    if args.k < 0:
        raise InputError(f"expected k >= 0, got {args.k}", field="--k")
    orbits = orbits_on_maps(read_weighted_graph(args.target), args.k)
    payload = {"k": args.k, "count": len(orbits), "orbits": [list(map(list, o)) for o in orbits]}
    lines = [str(len(orbits))]
    lines += [" ".join("(" + ",".join(map(str, phi)) + ")" for phi in orbit) for orbit in orbits]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_ranktest(args: argparse.Namespace) -> int:
    if args.k < 0:
        raise InputError(f"expected k >= 0, got {args.k}", field="--k")
    report = rank_test(read_weighted_graph(args.target), args.k)
    payload = report.to_dict()
    _emit(args, payload, _key_values(payload))
    return EXIT_OK


def cmd_tensions(args: argparse.Namespace) -> int:
    if args.m < 1:
        raise InputError(f"expected m >= 1, got {args.m}", field="--m")
    residues = parse_residues(args.set)
    if not is_symmetric_set(args.m, residues):
        logger.warning("tension_set_not_symmetric", m=args.m, residues=residues)
        print(
            f"warning: S = {{{args.set}}} is not closed under negation mod {args.m}",
            file=sys.stderr,
        )
    value = count_tensions(read_multigraph(args.graph), args.m, residues)
    _emit(args, {"tensions": value, "m": args.m}, str(value))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.claim == "example1":
        if args.n is None or args.y is None:
            raise InputError("example1 needs --n and --y", field="--n/--y")
        report = verify_tutte_hom_identity(read_multigraph(args.path), args.n, args.y)
        payload = report.to_dict()
        text = f"{payload['hom']} = {payload['tutte']}"
        if report.checks:
            text += "\n" + _key_values(payload["checks"])
        _emit(args, payload, text)
        return EXIT_OK if report.holds else EXIT_INCONSISTENT

    target = read_weighted_graph(args.path)
    if args.claim == "lemma1":
        report = check_lemma1(target, reduce_twins=True)
    elif args.claim == "lemma2":
        report = check_lemma2(target, reduce_twins=True)
    else:
        report = check_theorem1(target, seed=args.seed, pair_count=args.pairs)
    payload = report.to_dict()
    _emit(args, payload, _key_values(payload))
    return _STATUS_EXIT[report.status]


def cmd_witness(args: argparse.Namespace) -> int:
    verdict = check_theorem1(read_weighted_graph(args.target), seed=args.seed)
    if verdict.generously_transitive and verdict.witness is None:
        payload = {"witness": None, "generously_transitive": True}
        _emit(args, payload, "none: the automorphism group is generously transitive")
        return EXIT_OK
    if verdict.witness is None:
        _emit(args, verdict.to_dict(), "inconclusive: no witness within bounds")
        return EXIT_BUDGET
    payload = verdict.witness.to_dict()
    _emit(args, payload, _key_values(payload))
    return _STATUS_EXIT[verdict.status]


def cmd_survey(args: argparse.Namespace) -> int:
    rows = exhaustive_survey(args.max_n, jobs=args.jobs, seed=args.seed)
    if args.format == "json":
        print(render_json_lines(rows))
    else:
        print(render_table(rows))
    statuses = {status for row in rows for status in (row.lemma1, row.lemma2, row.theorem1)}
    if INCONSISTENT in statuses or not all(row.twin_lemma for row in rows):
        return EXIT_INCONSISTENT
    if INCONCLUSIVE in statuses:
        return EXIT_BUDGET
    return EXIT_OK


# =============================================================================
# PARSER
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("table", "json"), default="table", help="Output layout"
    )

    parser = argparse.ArgumentParser(
        prog="homvariant",
        description="Exact hom counts, Tutte polynomials and cycle matroid invariance checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace], int], help_text: str):
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.set_defaults(handler=handler)
        return command

    for name, handler, help_text in (
        ("hom", cmd_hom, "hom(F, G)"),
        ("h", cmd_h, "hom(F, G) / (sum of a)^c(F)"),
    ):
        command = add(name, handler, help_text)
        command.add_argument("graph", help="Graph file F")
        command.add_argument("target", help="Weighted graph file G")

    command = add("tensor", cmd_tensor, "Hom tensor of a k-labelled graph")
    command.add_argument("--k", type=int, required=True)
    command.add_argument("graph")
    command.add_argument("target")

    command = add("tutte", cmd_tutte, "Tutte polynomial")
    command.add_argument("--method", choices=METHODS, default="auto")
    command.add_argument("graph")

    for name, handler, help_text in (
        ("chromatic", cmd_chromatic, "Chromatic polynomial, or its value at --n"),
        ("flow", cmd_flow, "Flow polynomial, or its value at --n"),
    ):
        command = add(name, handler, help_text)
        command.add_argument("--n", type=int)
        command.add_argument("graph")

    for name, handler, help_text in (
        ("aut", cmd_aut, "Automorphism group"),
        ("gentrans", cmd_gentrans, "Generous transitivity with orbit breakdown"),
        ("twinreduce", cmd_twinreduce, "Twin-reduced weighted graph"),
    ):
        add(name, handler, help_text).add_argument("target")

    for name, handler, help_text in (
        ("orbits", cmd_orbits, "Orbits of the automorphism group on maps [k] -> [n]"),
        ("ranktest", cmd_ranktest, "Rank of hom tensors against the orbit count"),
    ):
        command = add(name, handler, help_text)
        command.add_argument("--k", type=int, required=True)
        command.add_argument("target")

    command = add("tensions", cmd_tensions, "Count Z_m-tensions with values in S")
    command.add_argument("--m", type=int, required=True)
    command.add_argument(
        "--set", required=True, help="Comma-separated residues, e.g. 1,4 or -1,1"
    )
    command.add_argument("graph")

    command = add("verify", cmd_verify, "Verify an identity or characterization")
    command.add_argument("claim", choices=("example1", "lemma1", "lemma2", "theorem1"))
    command.add_argument("--n", type=int)
    command.add_argument("--y", help="Exact rational, e.g. -2 or 1/2")
    command.add_argument("--seed", type=int)
    command.add_argument("--pairs", type=int, help="Generated pairs for theorem1")
    command.add_argument("path", help="Graph file (example1) or weighted graph file")

    command = add("survey", cmd_survey, "Exhaustive survey over simple targets")
    command.add_argument("--max-n", type=int, required=True)
    command.add_argument("--jobs", type=int, default=1)
    command.add_argument("--seed", type=int)

    command = add("witness", cmd_witness, "Two graphs with equal cycle matroids and different h")
    command.add_argument("--seed", type=int)
    command.add_argument("target")

    return parser


# =============================================================================
# ENTRY POINTS
# =============================================================================


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run one subcommand, and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(attach_signed_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT

    configure_logging(level=os.getenv("LOG_LEVEL", "WARNING"))
    with with_run_context(subcommand=args.command):
        try:
            return args.handler(args)
        except (InputError, ZeroWeightSum) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        except BudgetExceeded as exc:
            print(f"budget exceeded: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        except HomvariantError as exc:
            logger.error("claim_refuted", error=str(exc), error_type=type(exc).__name__)
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INCONSISTENT


def main() -> None:
    sys.exit(run())
