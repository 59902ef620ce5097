"""Command line interface: ``ugb <command> <graph-file> [options]``.

Exit codes:
  0  success
  2  unreadable or malformed input
  3  walk search limit exceeded (import a basis with --basis)
  4  oracle disagreement
  5  classify: input is not a walk binomial of the graph
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .binomial import (
    Binomial,
    check_binomial,
    is_primitive_bruteforce,
    is_primitive_structural,
    support_walkgraph,
)
from .errors import (
    DimensionMismatch,
    GraphError,
    InvalidBinomial,
    LimitExceeded,
    OracleMismatch,
    ParseError,
    SupportTooLarge,
)
from .graph import Graph, connected_components
from .graver import (
    BasisSet,
    EnumerationLimits,
    degree_histogram,
    enumerate_walk_binomials,
    graver_basis,
)
from .io import format_binomial, parse_basis, parse_binomial, parse_graph
from .ugb import filter_element, is_mixed_blocks, is_mixed_forest, universal_groebner_basis

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_LIMIT = 3
EXIT_MISMATCH = 4
EXIT_NOT_WALK = 5


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _limits(args) -> EnumerationLimits:
    kw = {}
    if args.max_degree is not None:
        kw["max_degree"] = args.max_degree
    if args.max_walks is not None:
        kw["max_walks"] = args.max_walks
    return EnumerationLimits(**kw)


def _load_graph(args) -> Graph:
    return parse_graph(_read(args.graph))


def _primitive(b: Binomial, g: Graph) -> bool:
    return bool(is_primitive_structural(support_walkgraph(b, g), g))


def _load_basis(args, g: Graph) -> tuple[BasisSet, list[Binomial]]:
    """Graver basis (imported or enumerated) plus imported rows failing primitivity."""
    if getattr(args, "basis", None):
        imported = parse_basis(_read(args.basis), g)
        good = [b for b in imported if _primitive(b, g)]
        bad = [b for b in imported if not _primitive(b, g)]
        if bad:
            print(f"warning: {len(bad)} imported element(s) are not primitive; "
                  "excluded from UGB classification", file=sys.stderr)
        return BasisSet(tuple(good), "imported"), bad
    return graver_basis(g, _limits(args), workers=args.parallel), []


def _print_listing(basis, style: str) -> None:
    print(len(basis))
    for b in basis:
        print(format_binomial(b, style))


def cmd_graver(args) -> int:
    g = _load_graph(args)
    basis = graver_basis(g, _limits(args), workers=args.parallel)
    _print_listing(basis, args.format)
    return EXIT_OK


def cmd_ugb(args) -> int:
    g = _load_graph(args)
    basis, bad = _load_basis(args, g)
    ugb, traces = universal_groebner_basis(basis, g, verify=args.verify, workers=args.parallel)
    _print_listing(ugb, args.format)
    if args.explain:
        rejected = [(b, t) for b, t in zip(basis, traces) if t.verdict != "accepted"]
        print(f"rejected: {len(rejected)}")
        for b, t in rejected:
            print(f"{format_binomial(b, args.format)}  {t.certificate()}")
        if bad:
            print(f"non-primitive: {len(bad)}")
            for b in bad:
                cert = is_primitive_structural(support_walkgraph(b, g), g)
                print(f"{format_binomial(b, args.format)}  {cert}")
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load_graph(args)
    try:
        b = parse_binomial(args.binomial, g.m)
    except DimensionMismatch as exc:
        raise InputError(str(exc)) from None
    try:
        check_binomial(b, g)
        if len(connected_components(g, b.support)) != 1:
            raise InvalidBinomial("support is disconnected")
    except InvalidBinomial as exc:
        print(f"irreducible walk binomial: no ({exc.invariant})")
        return EXIT_NOT_WALK
    print("irreducible walk binomial: yes")
    cert = is_primitive_structural(support_walkgraph(b, g), g)
    if not cert:
        print(f"primitive: no ({cert})")
        print("in UGB: no (not primitive)")
        return EXIT_OK
    print(f"primitive: yes ({cert.clause})")
    ok, trace = filter_element(b, g)
    if ok:
        print("in UGB: yes (mixed)")
    else:
        print(f"in UGB: no, pure cycle {trace.certificate()}")
    if args.basis:
        basis = parse_basis(_read(args.basis), g)
        print(f"in basis: {'yes' if b in basis else 'no'}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args)
    limits = _limits(args)
    if args.basis:
        candidates = parse_basis(_read(args.basis), g)
    else:
        candidates = enumerate_walk_binomials(g, limits, workers=args.parallel)
    primitive = []
    for b in candidates:
        structural = _primitive(b, g)
        try:
            brute = is_primitive_bruteforce(b, g, limits.max_edges_support)
        except SupportTooLarge:
            brute = structural
        if brute != structural:
            print(f"MISMATCH primitivity: {format_binomial(b, args.format)} "
                  f"structural={structural} bruteforce={brute}")
            return EXIT_MISMATCH
        if structural:
            primitive.append(b)
    accepted = 0
    for b in primitive:
        ok, _ = filter_element(b, g)
        by_blocks, _ = is_mixed_blocks(b, g)
        by_forest = is_mixed_forest(b, g)
        if not ok == by_blocks == by_forest:
            print(f"MISMATCH mixedness: {format_binomial(b, args.format)} "
                  f"peeling={ok} blocks={by_blocks} forest={by_forest}")
            return EXIT_MISMATCH
        accepted += ok
    label = "imported" if args.basis else "irreducible"
    print(f"{label}: {len(candidates)}, primitive: {len(primitive)}, ugb: {accepted}, OK")
    return EXIT_OK


def cmd_stats(args) -> int:
    g = _load_graph(args)
    basis, _ = _load_basis(args, g)
    ugb, traces = universal_groebner_basis(basis, g, workers=args.parallel)
    hist = degree_histogram(basis)
    lengths = [b.walk_length for b in basis]
    max_len = max(lengths, default=0)
    total = sum(t.step_count for t in traces)
    ratios = [t.step_count / L ** 3 for t, L in zip(traces, lengths)]
    print(f"|Gr_A|: {len(basis)}")
    print(f"|U_A|: {len(ugb)}")
    print("degree histogram: " + " ".join(f"{d}:{c}" for d, c in hist.items()))
    print(f"max |B_w|: {max_len}")
    print(f"total steps: {total}")
    if basis:
        print(f"envelope |Gr_A|*max|B_w|^3: {len(basis) * max_len ** 3}")
        print(f"max steps/|B_w|^3: {max(ratios):.4f}")
        print("element\t|B_w|\tsteps\tsteps/|B_w|^3\tverdict")
        for b, t, L, r in zip(basis, traces, lengths, ratios):
            print(f"{format_binomial(b, args.format)}\t{L}\t{t.step_count}\t{r:.4f}\t{t.verdict}")
    return EXIT_OK


COMMANDS = {
    "graver": cmd_graver,
    "ugb": cmd_ugb,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "stats": cmd_stats,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ugb",
        description="Graver and universal Groebner bases of toric ideals of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("graph", help="graph file: header 'n m' then m lines 'u v'")
        if name == "classify":
            p.add_argument("binomial", help="e.g. 'e1*e3 - e2*e4' or a signed row '1 -1 1 -1'")
        if name != "graver":
            p.add_argument("--basis", help="import a Graver basis instead of enumerating")
        p.add_argument("--format", choices=("monomial", "vector"), default="monomial")
        p.add_argument("--max-degree", type=int)
        p.add_argument("--max-walks", type=int)
        p.add_argument("--parallel", type=int, default=1, metavar="K")
        p.add_argument("--explain", action="store_true")
        if name == "ugb":
            p.add_argument("--verify", action="store_true",
                           help="cross-check every verdict against both mixedness oracles")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.parallel < 1:
        print("error: --parallel must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except (InputError, ParseError, GraphError, DimensionMismatch, InvalidBinomial) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except OracleMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
