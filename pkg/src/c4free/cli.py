"""Command line interface.

Exit codes: 0 success / all checks pass, 1 a check failed or a bound
was violated, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .edgelist import CLI_VERTEX_LIMIT, parse_graph, serialize_graph
from .extraction import (
    extract_dirac,
    extract_general,
    extract_large_alpha,
    extract_regular,
    extract_triple,
)
from .generators import clique_substitution, cycle_power, random_c4free, w5_blowup
from .graph import (
    Graph,
    GraphInputError,
    InvariantViolation,
    find_induced_c4,
    greedy_maximal_independent_set,
    max_clique_exact,
)
from .structure import HypothesisViolation, alpha2_decompose
from .suites import SuiteConfig, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _sizes_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _vertex_list(text: str) -> list[int]:
    return _sizes_list(text)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c4free",
        description=(
            "Certified clique extraction and bound verification for graphs "
            "with no induced 4-cycle."
        ),
    )
    parser.add_argument("--version", action="version", version=f"c4free {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph and print its edge list")
    gen_sub = gen.add_subparsers(dest="generator", required=True)

    p = gen_sub.add_parser("cycle-power", help="cycle on 4k+1 vertices with chords up to distance k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", metavar="FILE", default=None)

    p = gen_sub.add_parser("w5", help="clique substitution into the 5-wheel")
    p.add_argument("--sizes", type=_sizes_list, required=True,
                   help="six sizes: hub,s1,s2,s3,s4,s5")
    p.add_argument("-o", metavar="FILE", default=None)

    p = gen_sub.add_parser("substitute", help="clique substitution into a base graph")
    p.add_argument("--base", metavar="FILE", required=True)
    p.add_argument("--sizes", type=_sizes_list, required=True)
    p.add_argument("-o", metavar="FILE", default=None)

    p = gen_sub.add_parser("random", help="seeded random graph repaired to be C4-free")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_fraction, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", metavar="FILE", default=None)

    check = sub.add_parser("check", help="recognition checks")
    check_sub = check.add_subparsers(dest="check_kind", required=True)
    p = check_sub.add_parser("c4free", help="report an induced 4-cycle or 'c4-free'")
    p.add_argument("file")

    clique = sub.add_parser("clique", help="clique oracles and extractors")
    clique_sub = clique.add_subparsers(dest="clique_kind", required=True)

    p = clique_sub.add_parser("exact", help="exact maximum clique (small graphs)")
    p.add_argument("file")
    p.add_argument("--oracle-limit", type=int, default=48)

    p = clique_sub.add_parser("extract", help="certified clique extraction")
    p.add_argument("file")
    p.add_argument(
        "--method",
        choices=["auto", "regular", "general", "triple", "large-alpha"],
        default="auto",
    )
    p.add_argument("--epsilon", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--independent-set", type=_vertex_list, default=None)
    p.add_argument(
        "--dirac",
        action="store_true",
        help="large-alpha preset for min degree >= n/2: threshold 3/eps+1, "
        "bound (1-eps)*n/4",
    )
    p.add_argument(
        "--exact-alpha",
        action="store_true",
        help="start the general method from a maximum independent set "
        "(oracle-sized graphs only)",
    )
    p.add_argument("--oracle-limit", type=int, default=48)

    p = sub.add_parser("structure", help="decompose a C4-free graph with independence number <= 2")
    p.add_argument("file")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--oracle-limit", type=int, default=48)
    p.add_argument("--epsilon", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--json", metavar="FILE", default=None)

    return parser


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.generator == "cycle-power":
        g = cycle_power(args.k)
    elif args.generator == "w5":
        g = w5_blowup(args.sizes)
    elif args.generator == "substitute":
        base = _load_graph(args.base)
        g = clique_substitution(base, args.sizes)
    else:
        if args.n > CLI_VERTEX_LIMIT:
            raise GraphInputError(f"n={args.n} exceeds the vertex limit {CLI_VERTEX_LIMIT}")
        g = random_c4free(args.n, args.p, args.seed)
    if g.n > CLI_VERTEX_LIMIT:
        raise GraphInputError(
            f"generated graph has n={g.n}, above the vertex limit {CLI_VERTEX_LIMIT}"
        )
    _write_text(args.o, serialize_graph(g))
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    witness = find_induced_c4(g)
    if witness is None:
        print("c4-free")
        return EXIT_OK
    print(f"induced-c4: {witness.a} {witness.b} {witness.c} {witness.d}")
    return EXIT_FAIL


def _cmd_clique(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    if args.clique_kind == "exact":
        clique = max_clique_exact(g, limit=args.oracle_limit)
        _print_json({"clique": list(clique), "size": len(clique)})
        return EXIT_OK

    method = args.method
    if getattr(args, "dirac", False):
        if method not in ("auto", "large-alpha"):
            raise GraphInputError("--dirac is a preset of --method large-alpha")
        method = "dirac"
    if method == "auto":
        k = (g.n - 1) // 4
        regular_fit = (
            g.n >= 5
            and g.n % 4 == 1
            and k >= 1
            and all(deg == 2 * k for deg in g.degrees())
        )
        method = "regular" if regular_fit else "general"

    exact_alpha = getattr(args, "exact_alpha", False)
    if exact_alpha and method != "general":
        raise GraphInputError("--exact-alpha applies to the general method only")
    if method == "regular":
        cert = extract_regular(g)
    elif method == "general":
        cert = extract_general(
            g, exact_alpha=exact_alpha, oracle_limit=args.oracle_limit
        )
    elif method == "triple":
        cert = extract_triple(g)
    else:
        members = args.independent_set
        if members is None:
            members = list(greedy_maximal_independent_set(g))
        if method == "dirac":
            cert = extract_dirac(g, members, args.epsilon)
        else:
            cert = extract_large_alpha(g, members, args.epsilon)
    _print_json(cert.to_json_dict(g))
    return EXIT_OK


def _cmd_structure(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    try:
        cert = alpha2_decompose(g)
    except HypothesisViolation as exc:
        print("alpha>2")
        print(f"witness: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _print_json(cert.to_json_dict())
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    config = SuiteConfig(
        suite=args.suite,
        seed=args.seed,
        samples=args.samples,
        max_n=args.max_n,
        oracle_limit=args.oracle_limit,
        epsilon=args.epsilon,
    )
    report = run_suite(config)
    print(f"{report.suite}: {report.passed}/{len(report.records)} pass")
    for record in report.records:
        if not record["pass"]:
            print(f"FAIL {record['id']}: repro: {record['repro']}")
    if args.json:
        _write_text(args.json, report.to_json())
    return EXIT_OK if report.all_passed() else EXIT_FAIL


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "clique":
            return _cmd_clique(args)
        if args.command == "structure":
            return _cmd_structure(args)
        return _cmd_verify(args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
