"""Command-line front end.

Subcommands: count, enumerate, reduce, classify, j, height, verify.
Exact fractions print as "p/q"; reals print with 12 significant digits.
Exit codes: 0 ok, 1 failed verification, 2 usage error (argparse default).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import arith, census, classes, lattice, modular, verify
from .census import ClassSetId

SIEVE_BOUND_ENV = "LATSIM_SIEVE_BOUND"

SET_IDS = {"all": ClassSetId.ALL,
           "semistable": ClassSetId.SEMISTABLE,
           "wr": ClassSetId.WELL_ROUNDED}


def _real(x: float) -> str:
    return f"{x:.12g}"


def _parse_quadruple(text: str) -> classes.TauQuadruple:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected a,b,c,d")
    try:
        a, b, c, d = (int(p) for p in parts)
        return classes.validate_quadruple(a, b, c, d)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parse_basis(text: str) -> lattice.PlanarLattice:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            "expected four rationals p/q (column-major)")
    try:
        m11, m21, m12, m22 = (Fraction(p) for p in parts)
        return lattice.PlanarLattice((m11, m21), (m12, m22))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latsim",
        description="Classify, enumerate and count similarity classes of "
                    "planar arithmetic lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count classes of height <= T")
    p.add_argument("--set", choices=SET_IDS, required=True)
    p.add_argument("--max-height", type=int, required=True, metavar="T")
    p.add_argument("--method", choices=("fast", "bruteforce"), default="fast")
    p.add_argument("--memory-mode", choices=("moebius", "prefix_tables"),
                   default="moebius")
    p.add_argument("--jobs", type=int, default=1,
                   help="partitions of the b-loop to count in parallel")
    p.add_argument("--sieve-bound", type=int,
                   default=int(os.environ.get(SIEVE_BOUND_ENV, 0)) or None)

    p = sub.add_parser("enumerate", help="stream classes of height <= T")
    p.add_argument("--set", choices=SET_IDS, required=True)
    p.add_argument("--max-height", type=int, required=True, metavar="T")
    p.add_argument("--format", choices=("jsonl", "csv", "plain"),
                   default="jsonl")

    p = sub.add_parser("reduce", help="canonical tau and predicates of a basis")
    p.add_argument("--basis", type=_parse_basis, required=True,
                   metavar="p1/q1,p2/q2,p3/q3,p4/q4",
                   help="basis matrix entries, column-major")

    p = sub.add_parser("classify", help="classify a quadruple a,b,c,d")
    p.add_argument("--tau", type=_parse_quadruple, required=True,
                   metavar="a,b,c,d")

    p = sub.add_parser("j", help="j-invariant of a class")
    p.add_argument("--tau", type=_parse_quadruple, required=True,
                   metavar="a,b,c,d")
    p.add_argument("--terms", type=int, default=20)
    p.add_argument("--normalized", action="store_true")

    p = sub.add_parser("height", help="Weil-height bound of a class")
    p.add_argument("--tau", type=_parse_quadruple, required=True,
                   metavar="a,b,c,d")

    p = sub.add_parser("verify", help="run a self-verification suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)

    return parser


def _cmd_count(args) -> int:
    set_id = SET_IDS[args.set]
    if args.method == "bruteforce":
        print(census.count_bruteforce(set_id, args.max_height))
        return 0
    bound = args.sieve_bound or args.max_height
    if bound < args.max_height:
        print(f"sieve bound {bound} < requested height {args.max_height}",
              file=sys.stderr)
        return 2
    tables = arith.build_sieve(bound)
    print(census.count_fast(set_id, args.max_height, tables,
                            memory_mode=args.memory_mode,
                            parallelism=args.jobs))
    return 0


def _class_record(item) -> dict:
    if isinstance(item, classes.WrPair):
        q = classes.wr_pair_to_quadruple(item)
        height = classes.pair_height(item)
    else:
        q = item
        height = classes.max_height(q)
    return {"a": q.a, "b": q.b, "c": q.c, "d": q.d,
            "kind": str(classes.classify(q)), "height": height}


def _cmd_enumerate(args) -> int:
    set_id = SET_IDS[args.set]
    for item in census.enumerate_classes(set_id, args.max_height):
        rec = _class_record(item)
        if args.format == "jsonl":
            print(json.dumps(rec))
        elif args.format == "csv":
            print("{a},{b},{c},{d},{kind},{height}".format(**rec))
        else:
            print("({a},{b},{c},{d}) {kind} height={height}".format(**rec))
    return 0


def _cmd_reduce(args) -> int:
    tau = lattice.canonical_tau(args.basis)
    form = lattice.tau_gram(tau)
    print(f"re={tau.re} im_sq={tau.im_sq} im={_real(tau.im)}")
    print(f"well_rounded={lattice.is_well_rounded(form)} "
          f"semistable={lattice.is_semistable(form)} "
          f"stable={lattice.is_stable(form)} "
          f"arithmetic={lattice.is_arithmetic(form)}")
    return 0


def _cmd_classify(args) -> int:
    q = args.tau
    kind = classes.classify(q)
    line = f"{kind} height_quadruple={classes.max_height(q)}"
    if kind is classes.ClassKind.WELL_ROUNDED:
        line += f" height_pair={q.b}"
    print(line)
    return 0


def _cmd_j(args) -> int:
    tau = modular.tau_of_quadruple(args.tau)
    fn = modular.j_normalized if args.normalized else modular.j_invariant
    jv = fn(tau, args.terms)
    print(f"j={_real(jv.value.real)}{jv.value.imag:+.12g}i "
          f"est_error={jv.est_error:.3g} terms={jv.terms_used}")
    return 0


def _cmd_height(args) -> int:
    q = args.tau
    print(f"weil_height_bound={_real(classes.weil_height_bound(q))} "
          f"ceiling={_real(classes.weil_height_ceiling(q))}")
    return 0


def _cmd_verify(args) -> int:
    if args.suite in ("euler", "modular"):
        suite = verify.SUITES[args.suite]
        ok = True
        for name, passed, detail in suite(seed=args.seed):
            print(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
            ok = ok and passed
        return 0 if ok else 1
    return 0 if verify.run_suite(args.suite) else 1


COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "reduce": _cmd_reduce,
    "classify": _cmd_classify,
    "j": _cmd_j,
    "height": _cmd_height,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
