"""Command-line front end: ``tensorpi <subcommand> ...``.

Exit codes: ``decide`` returns 0 for an identity and 1 otherwise; every
subcommand returns 2 on bad input or an exceeded budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import tables
from .decision import is_tpi, lattice_dot, non_tpi_set, refinement_graph
from .oracle import PRIME_ENV, BudgetExceededError, certify, default_prime
from .partitions import Composition, Partition
from .symmetric import DEFAULT_MAX_DEGREE, DegreeCapError

EXIT_TPI, EXIT_NOT_TPI, EXIT_ERROR = 0, 1, 2

# defaults of the enumeration caps that --budget may raise
DEFAULT_BUDGET = {"degree": DEFAULT_MAX_DEGREE, "variables": 12, "c_d": 4}


class CliError(Exception):
    pass


def _budget(args) -> dict:
    caps = dict(DEFAULT_BUDGET)
    for item in args.budget or []:
        key, _, value = item.partition("=")
        if key not in caps or not value.isdigit():
            raise CliError(f"bad --budget entry {item!r}; expected one of "
                           + ", ".join(f"{k}=<int>" for k in caps))
        caps[key] = int(value)
    if caps != DEFAULT_BUDGET and not args.accept_cost:
        raise CliError("--budget raises enumeration caps; pass --accept-cost to confirm")
    return caps


def _prime(args) -> int:
    if args.prime is not None:
        return args.prime
    return default_prime()


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_decide(args) -> int:
    verdict = is_tpi(Partition.parse(args.lam), args.d)
    _emit(args, verdict.describe(), verdict.to_json())
    return EXIT_TPI if verdict.is_tpi else EXIT_NOT_TPI


def cmd_table(args) -> int:
    caps = _budget(args)
    if args.which == "rect":
        if args.format == "json":
            _emit(args, "", tables.rect_table_json(args.dmax))
        else:
            _emit(args, tables.rect_table_text(args.dmax), None)
    elif args.which == "jdelta":
        if args.d > caps["degree"]:
            raise DegreeCapError(f"J_d for d={args.d} exceeds the degree cap of {caps['degree']}")
        if args.format == "json":
            _emit(args, "", tables.jdelta_json(args.d, args.basis))
        else:
            _emit(args, tables.jdelta_text(args.d, args.basis), None)
    else:
        lam = Composition.parse(args.lam)
        cap = caps["degree"]
        if args.format == "json":
            _emit(args, "", tables.jlambda_json(lam, args.d, max_degree=cap))
        else:
            _emit(args, tables.jlambda_text(lam, args.d, max_degree=cap), None)
    return 0


def cmd_hasse(args) -> int:
    single = not args.no_single_box
    nodes = non_tpi_set(args.d, args.min_part, args.kmax, include_single_box=single)
    if args.format == "json":
        graph = refinement_graph(nodes)
        payload = {
            "nodes": [list(n) for n in nodes],
            "edges": sorted([list(a), list(b)] for a, b in graph.edges),
        }
        _emit(args, "", payload)
    else:
        sys.stdout.write(lattice_dot(args.d, args.min_part, args.kmax, single))
    return 0


def cmd_verify(args) -> int:
    caps = _budget(args)
    report = certify(
        args.lam, args.d, trials=args.trials, seed=args.seed, p=_prime(args),
        max_variables=caps["variables"], c_d_max=caps["c_d"],
    )
    if args.no_timing:
        report.pop("elapsed_ms")
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0 if report["verdict"] != "FAILURE" else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tensorpi", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--prime", type=int, default=None,
                        help=f"modulus for oracle arithmetic (default: ${PRIME_ENV} or built-in)")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; evaluation is single-threaded")
    common.add_argument("--budget", action="append", metavar="CAP=N",
                        help="raise a cap: degree, variables or c_d (repeatable)")
    common.add_argument("--accept-cost", action="store_true",
                        help="acknowledge that a raised --budget may be slow or memory-hungry")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="is ST(lambda) an identity on d x d matrices")
    p.add_argument("--lambda", dest="lam", required=True, help='e.g. "5,3,1" or "2^4"')
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("table", help="reproduce a table")
    tsub = p.add_subparsers(dest="which", required=True)
    t = tsub.add_parser("rect", parents=[common], help="minimal rectangular identities")
    t.add_argument("--dmax", type=int, required=True)
    t = tsub.add_parser("jdelta", parents=[common], help="J_d in a central basis")
    t.add_argument("--d", type=int, required=True)
    t.add_argument("--basis", choices=["omega", "class"], default="omega")
    t = tsub.add_parser("jlambda", parents=[common], help="Phi(J/C) and J for a composition")
    t.add_argument("--lambda", dest="lam", required=True)
    t.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("hasse", parents=[common], help="refinement Hasse diagram of non-identities")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--min-part", type=int, default=1)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--no-single-box", action="store_true", help="omit the one-box diagram (1)")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", parents=[common], help="certify a verdict by explicit evaluation")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true",
                   help="drop elapsed_ms so the report is byte-stable")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    try:
        return args.func(args)
    except (CliError, ValueError, IndexError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
