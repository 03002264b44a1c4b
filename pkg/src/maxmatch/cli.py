"""Command line front end.

JSON goes to stdout, a short human summary to stderr.  Exit codes:
0 success, 1 usage, 2 unreadable or invalid input, 3 undecided (search
budget exhausted, or a partial verification), 4 theorem violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .coloring import BUDGET_ENV, DEFAULT_BUDGET, ChromaticIndexUndecided, VizingClass, default_budget
from .enumeration.verify import SUITES, VerificationError, run_suite
from .extremal import ExtremalError, construct_alternative, construct_attaining, construct_c
from .friendly import (
    FriendlyInputError,
    NotClassIError,
    TheoremViolation,
    check_class2_structure,
    decompose,
    is_friendly,
)
from .graph import (
    Graph,
    GraphError,
    GraphFormatError,
    drop_isolated,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .matching import essential_vertices, nu

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_UNDECIDED, EXIT_VIOLATION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which we reserve for input errors
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def detect_format(data: bytes) -> str:
    text = data.strip()
    if text.startswith(b">>graph6<<"):
        return "graph6"
    if text and b"\n" not in text and all(63 <= b <= 126 for b in text):
        return "graph6"
    return "edgelist"


def read_graph(path: str | None, fmt: str) -> Graph:
    if path in (None, "-"):
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    if fmt == "auto":
        fmt = detect_format(data)
    if fmt == "graph6":
        return parse_graph6(data.strip())
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise GraphFormatError("edge list is not valid UTF-8", offset=exc.start) from None
    return parse_edge_list(text)


def _remap_edges(edges: list[list[int]], vmap: list[int]) -> list[list[int]]:
    return sorted(sorted((vmap[u], vmap[v])) for u, v in edges)


def _remap_part(part: dict, vmap: list[int]) -> dict:
    out = dict(part)
    if part["kind"] == "star":
        out["center"] = vmap[part["center"]]
        out["leaves"] = sorted(vmap[x] for x in part["leaves"])
    else:
        out["vertices"] = [vmap[x] for x in part["vertices"]]
        out["edges"] = _remap_edges(part["edges"], vmap)
    return out


def _decomposition_dict(dec, vmap: list[int]) -> dict:
    d = dec.to_dict()
    d["removal_order"] = [vmap[x] for x in d["removal_order"]]
    d["parts"] = [_remap_part(p, vmap) for p in d["parts"]]
    return d


def _prepare(g: Graph, allow_isolated: bool) -> tuple[Graph, list[int]]:
    isolated = g.isolated_vertices()
    if isolated and not allow_isolated:
        raise FriendlyInputError(
            f"isolated vertices {isolated}; pass --allow-isolated to strip them"
        )
    if isolated:
        _note(f"warning: stripping isolated vertices {isolated}")
    return drop_isolated(g)


def analyze(g: Graph, *, allow_isolated: bool = False, budget: int | None = None) -> dict:
    h, vmap = _prepare(g, allow_isolated)
    if h.m == 0:
        raise FriendlyInputError("graph has no edges")
    cert = is_friendly(h, budget)
    out: dict[str, Any] = {
        "graph6": write_graph6(g).decode(),
        "n": g.n,
        "m": g.m,
        "delta": h.max_degree,
        "nu": cert.nu,
        "chi_prime": cert.chi,
        "vizing_class": cert.vizing_class.value,
        "essential_vertices": sorted(vmap[x] for x in essential_vertices(h)),
    }
    body = cert.to_dict()
    if "partition" in body:
        body["partition"] = sorted(_remap_edges(p, vmap) for p in body["partition"])
    out.update(body)
    if cert.verdict and cert.vizing_class is VizingClass.CLASS_I:
        out["decomposition"] = _decomposition_dict(decompose(h, budget), vmap)
    elif cert.verdict:
        out["class2"] = check_class2_structure(h, cert).to_dict()
    assert out["friendly"] == (out["m"] == out["chi_prime"] * out["nu"])
    return out


def cmd_analyze(args: argparse.Namespace) -> int:
    g = read_graph(args.input, args.format)
    result = analyze(g, allow_isolated=args.allow_isolated, budget=args.budget)
    _emit(result)
    _note(
        f"n={result['n']} m={result['m']} delta={result['delta']} nu={result['nu']} "
        f"chi'={result['chi_prime']} class {result['vizing_class']} "
        f"friendly={'yes' if result['friendly'] else 'no'}"
    )
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    if args.kind == "c":
        g = construct_c(args.delta)
    else:
        if args.nu is None:
            raise UsageError(f"construct {args.kind} needs --nu")
        build = construct_attaining if args.kind == "attaining" else construct_alternative
        g = build(args.delta, args.nu)
    if args.format == "edgelist":
        sys.stdout.write(write_edge_list(g))
    else:
        sys.stdout.write(write_graph6(g).decode() + "\n")
    _note(f"{args.kind}: n={g.n} m={g.m} delta={g.max_degree} nu={nu(g)}")
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    g = read_graph(args.input, args.format)
    h, vmap = _prepare(g, args.allow_isolated)
    try:
        dec = decompose(h, args.budget)
    except NotClassIError:
        raise UsageError("class II friendly graph has no star decomposition; run 'maxmatch analyze' for its structure report") from None
    _emit(_decomposition_dict(dec, vmap))
    _note(f"{len(dec.stars)} star(s), {len(dec.parts) - len(dec.stars)} factor-critical part(s)")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    report = run_suite(
        args.suite,
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        delta=args.delta,
        nu=args.nu,
        tighten=args.tighten,
        jobs=args.jobs,
    )
    _emit(report.to_dict(timing=args.timing))
    _note(
        f"suite {report.suite}: examined {report.examined}, "
        f"{len(report.violations)} violation(s), {'partial' if report.partial else 'complete'}, "
        f"{report.elapsed:.1f}s"
    )
    if report.violations:
        return EXIT_VIOLATION
    return EXIT_UNDECIDED if report.partial else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="maxmatch", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--budget", type=int, default=None,
        help=f"node cap for the exact chromatic index search (default: ${BUDGET_ENV} or {DEFAULT_BUDGET})",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", help="graph file; stdin when omitted or '-'")
        p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
        p.add_argument("--allow-isolated", action="store_true", help="strip isolated vertices with a warning")

    p = sub.add_parser("analyze", help="friendliness certificate and structure of one graph")
    graph_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="emit an extremal or attaining graph")
    p.add_argument("kind", choices=("c", "attaining", "alternative"))
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--nu", type=int)
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", help="star / factor-critical decomposition of a class I friendly graph")
    graph_input(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--nu", type=int)
    p.add_argument("--tighten", type=int, default=0, help="lower the edge bound (harness self-test)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in the JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error reported by _Parser
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.budget is None:
            args.budget = default_budget()
        return args.func(args)
    except UsageError as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE
    except (GraphFormatError, GraphError, FriendlyInputError, OSError) as exc:
        _note(f"input error: {exc}")
        return EXIT_INPUT
    except (ExtremalError, VerificationError) as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE
    except ChromaticIndexUndecided as exc:
        _note(f"undecided: {exc}")
        return EXIT_UNDECIDED
    except TheoremViolation as exc:
        _note(f"VIOLATION: {exc}")
        return EXIT_VIOLATION
    except ValueError as exc:  # e.g. a malformed MAXMATCH_BUDGET
        _note(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
