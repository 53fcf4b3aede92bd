"""Command-line front door.

Subcommands: ``chromatic`` (chromatic polynomial and series numerator of a
graph file), ``hstar`` (h* of a polytope file), ``decompose`` (the symmetric
decompositions with sign verdicts), ``verify`` (batch theorem/conjecture
verification over corpora), ``random`` (seeded instance generation).

Exit status: 0 success, 1 check or sign failures found, 2 usage or input
error.  Structured output is line-delimited JSON with every integer
serialized as a decimal string, so arbitrary-precision coefficients
round-trip exactly.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import decomp, harness
from .ehrhart import OrderPolytope, h_star, load_polytope
from .errors import HstarError, InvalidInput
from .graph import Graph, chromatic_polynomial
from .polynomial import IntPolynomial
from .poset import Poset

JSON_LINES = "json-lines"


def _padded(poly, degree: int) -> list[str]:
    """Ascending coefficients with explicit zeros up to the declared degree."""
    top = max(degree, len(poly.coeffs) - 1)
    return [str(poly[i]) for i in range(top + 1)]


def _print_poly(label: str, coeffs: list[str]) -> None:
    print(f"{label} = [{', '.join(coeffs)}]")


def _emit(record: dict, fmt: str) -> None:
    if fmt == JSON_LINES:
        print(json.dumps(record, separators=(",", ":")))


def cmd_chromatic(args) -> int:
    graph = Graph.from_text(Path(args.file).read_text())
    chi = chromatic_polynomial(graph)
    h_g = decomp.graph_numerator(graph, budget=args.budget)
    chi_strs = _padded(chi, graph.d)
    h_strs = _padded(h_g, graph.d)
    if args.format == JSON_LINES:
        _emit({"type": "chromatic", "d": str(graph.d), "chi": chi_strs, "h": h_strs}, args.format)
    else:
        _print_poly("chi", chi_strs)
        _print_poly("h", h_strs)
    return 0


def cmd_hstar(args) -> int:
    polytope = load_polytope(args.file)
    hs = h_star(polytope, budget=args.budget)
    strs = [str(c) for c in hs.coeffs]
    if args.format == JSON_LINES:
        _emit({"type": "hstar", "d": str(polytope.dim), "hstar": strs}, args.format)
    else:
        print(f"d = {polytope.dim}")
        _print_poly("hstar", strs)
    return 0


def _parse_coeffs(text: str) -> IntPolynomial:
    try:
        return IntPolynomial([int(tok) for tok in text.replace(",", " ").split()])
    except ValueError as exc:
        raise InvalidInput(f"cannot parse coefficients {text!r}") from exc


def cmd_decompose(args) -> int:
    kind = args.kind
    if kind in ("stapledon", "open"):
        if args.coeffs is None or args.ambient is None:
            raise InvalidInput(f"decompose {kind} needs --coeffs and --d")
        hstar = _parse_coeffs(args.coeffs)
        d = args.ambient
    elif kind == "order":
        if args.file is None:
            raise InvalidInput("decompose order needs a poset file")
        poset = Poset.from_text(Path(args.file).read_text())
        hstar = h_star(OrderPolytope(poset), budget=args.budget)
        d = poset.d
    else:  # graph
        if args.file is None:
            raise InvalidInput("decompose graph needs a graph file")
        graph = Graph.from_text(Path(args.file).read_text())
        d = graph.d

    if kind == "stapledon":
        dec = decomp.stapledon_pair(hstar, d)
        a, b = dec.a, dec.b
        params = {"d": dec.d, "s": dec.s, "l": dec.l}
        passed = dec.a_nonneg and dec.b_nonneg
    elif kind == "open":
        a, b = decomp.open_decomposition(hstar, d)
        params = {"d": d, "s": d + 1, "l": 1}
        passed = a.is_nonnegative() and b.is_nonnegative()
    elif kind == "order":
        a, b = decomp.order_decomposition(hstar, d)
        params = {"d": d, "s": d + 1, "l": 1}
        passed = (-a).is_nonnegative() and b.is_nonnegative()
    else:
        a, b = decomp.graph_decomposition(graph, budget=args.budget)
        params = {"d": d, "s": d + 1, "l": 1}
        passed = (-a).is_nonnegative() and b.is_nonnegative()

    a_strs = [str(c) for c in a.coeffs]
    b_strs = [str(c) for c in b.coeffs]
    verdict = "PASS" if passed else "FAIL"
    if args.format == JSON_LINES:
        _emit(
            {
                "type": "decomposition",
                "kind": kind,
                "params": {k: str(v) for k, v in params.items()},
                "a": a_strs,
                "b": b_strs,
                "symmetry": "confirmed",
                "signs": verdict,
            },
            args.format,
        )
    else:
        print(f"kind = {kind}")
        print(", ".join(f"{k} = {v}" for k, v in params.items()))
        _print_poly("a", a_strs)
        _print_poly("b", b_strs)
        print("symmetry = confirmed")
        print(f"signs = {verdict}")
    return 0 if passed else 1


def cmd_verify(args) -> int:
    corpus = []
    if args.posets is not None:
        corpus.extend(harness.enumerate_labeled_posets(args.posets, max_size=args.max_size))
    if args.graphs is not None:
        corpus.extend(harness.enumerate_labeled_graphs(args.graphs, max_size=args.max_size))
    if args.random is not None:
        try:
            kind, d_str, count_str = args.random.split(",")
            kind, d, count = kind.strip(), int(d_str), int(count_str)
        except ValueError as exc:
            raise InvalidInput("--random wants KIND,D,COUNT") from exc
        corpus.extend(harness.random_instances(kind, d, count, args.seed))
    if not corpus:
        raise InvalidInput("nothing to verify; give --posets, --graphs or --random")
    checks = None if args.checks in (None, "all") else [c.strip() for c in args.checks.split(",")]
    summary = harness.Summary()
    for report in harness.verify_all(
        corpus,
        checks,
        budget=args.budget,
        time_limit=args.time_limit,
        mutate=args.mutate_selftest,
    ):
        summary.add(report)
        if args.format == JSON_LINES:
            _emit(report.to_record(), args.format)
        elif report.failed or report.skipped:
            for check in report.checks:
                if check.passed is True:
                    continue
                status = "SKIP" if check.passed is None else "FAIL"
                print(f"{status} #{report.index} {report.kind} {check.name}: {check.detail}")
                if check.passed is False:
                    for line in report.input_text.rstrip().splitlines():
                        print(f"    {line}")
                    for name, coeffs in check.witnesses.items():
                        print(f"    {name} = [{', '.join(coeffs)}]")
    if args.format == JSON_LINES:
        _emit(summary.to_record(), args.format)
    else:
        print(summary.line())
    return 0 if summary.failures == 0 else 1


def cmd_random(args) -> int:
    instances = harness.random_instances(
        args.kind, args.d, args.count, args.seed,
        relation_probability=args.relation_probability,
    )
    for index, item in enumerate(instances):
        text = item.to_text()
        if args.format == JSON_LINES:
            _emit({"type": args.kind, "index": index, "text": text}, args.format)
        else:
            print(f"c instance {index}")
            print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hstar",
        description="Exact h*-vectors, chromatic series and their symmetric decompositions.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["text", JSON_LINES], default="text", help="output format"
    )
    common.add_argument("--budget", type=int, default=None, help="work budget per operation")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chromatic", parents=[common], help="chromatic polynomial and h_G")
    p.add_argument("file", help="graph file (p/e format)")
    p.set_defaults(fn=cmd_chromatic)

    p = sub.add_parser("hstar", parents=[common], help="h*-polynomial of a polytope file")
    p.add_argument("file", help="polytope file (simplex/hrep/order)")
    p.set_defaults(fn=cmd_hstar)

    p = sub.add_parser("decompose", parents=[common], help="symmetric decompositions")
    p.add_argument("kind", choices=["stapledon", "open", "order", "graph"])
    p.add_argument("file", nargs="?", help="poset or graph file (order/graph kinds)")
    p.add_argument("--coeffs", help="h* coefficients, ascending, comma separated")
    p.add_argument("--d", dest="ambient", type=int, help="ambient degree parameter")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run the conjecture harness")
    p.add_argument("--posets", type=int, help="all labeled posets on this many elements")
    p.add_argument("--graphs", type=int, help="all labeled graphs on this many vertices")
    p.add_argument("--random", help="random corpus as KIND,D,COUNT")
    p.add_argument("--seed", type=int, default=0, help="seed for --random")
    p.add_argument("--checks", help="comma-separated check names (default: all)")
    p.add_argument("--max-size", type=int, default=harness.MAX_EXHAUSTIVE_SIZE)
    p.add_argument(
        "--time-limit", type=float, default=None, help="seconds allowed per input"
    )
    p.add_argument(
        "--mutate-selftest",
        action="store_true",
        help="flip one coefficient sign per input to prove failures are reported",
    )
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("random", parents=[common], help="emit seeded random instances")
    p.add_argument("kind", choices=["poset", "graph"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--relation-probability",
        type=float,
        default=1 / 3,
        help="pair relation probability for random posets",
    )
    p.set_defaults(fn=cmd_random)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except HstarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
