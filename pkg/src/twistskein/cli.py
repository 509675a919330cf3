"""Command line front end.

    twistskein omega  --p P --max-n N [--raw]
    twistskein jones  --p P --color N [--qform]
    twistskein bracket --pd FILE
    twistskein verify [--suite S] [--max-n N] [--max-p P]

Global ``--format json|text`` (default json) goes before the subcommand.
Exit status: 0 success, 1 failed identity, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import checks
from .habiro import OmegaCoefficients
from .jones import (
    MalformedDiagram,
    PlanarDiagram,
    TooManyCrossings,
    colored_jones,
    colored_jones_qform,
    kauffman_oracle,
    normalized_bracket_invariant,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, sort_keys=False) + "\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_omega(args) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    omega = OmegaCoefficients(args.p)
    for n in range(args.max_n + 1):
        if args.raw:
            num, den = omega.raw(n)
            row = {"n": n, "coeff": {"numerator": num.to_json(), "denominator": den.to_json()}}
            text = f"c[{n},{args.p}] = ({num}) / ({den})"
        else:
            c = omega[n]
            row = {"n": n, "coeff": c.to_json()}
            text = f"c'[{n},{args.p}] = {c}"
        _emit(row, args.format, text)
    return EXIT_OK


def cmd_jones(args) -> int:
    if args.color < 1:
        raise UsageError("--color must be >= 1")
    inv = colored_jones(args.p, args.color)
    obj = inv.to_json()
    value = inv.value
    if args.qform:
        value = colored_jones_qform(args.p, args.color)
        obj["value"] = value.to_json()
        obj["form"] = "qpochhammer"
    text = f"J'_K{args.p}({args.color}) = {value}\n" + "\n".join(
        f"  f[{n}] = {f}" for n, f in enumerate(inv.f_coeffs))
    _emit(obj, args.format, text)
    return EXIT_OK


def cmd_bracket(args) -> int:
    try:
        with open(args.pd) as fh:
            d = PlanarDiagram.from_json(json.load(fh))
        d.validate()
        raw = kauffman_oracle(d)
        norm = normalized_bracket_invariant(d)
    except (OSError, json.JSONDecodeError, MalformedDiagram, TooManyCrossings) as exc:
        raise UsageError(str(exc)) from exc
    obj = {"crossings": len(d), "writhe": d.writhe, "bracket": raw.to_json(),
           "normalized": norm.to_json()}
    text = f"crossings {len(d)}, writhe {d.writhe}\n<D> = {raw}\nJ'(2) = {norm}"
    _emit(obj, args.format, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = checks.run_suite(args.suite, args.max_n, args.max_p)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        obj = {"suite": args.suite, "passed": not failed,
               "results": [r.to_json() for r in results]}
        _emit(obj, "json", "")
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            sys.stdout.write(f"{mark} {r.suite}/{r.check} ({r.cases} cases)\n")
        if failed:
            params, lhs, rhs = failed[0].counterexample
            sys.stdout.write(f"first counterexample in {failed[0].check}: {params}\n"
                             f"  lhs = {checks.render(lhs)}\n  rhs = {checks.render(rhs)}\n")
    return EXIT_FAIL if failed else EXIT_OK


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistskein",
        description="Exact skein-module computations: omega^p coefficients and "
                    "colored Jones polynomials of twist knots.")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("omega", help="coefficients c'_{n,p} of omega^p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--raw", action="store_true",
                   help="print c_{n,p} as the pair (c'_{n,p}, {n}!)")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("jones", help="normalized colored Jones polynomial of K_p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--qform", action="store_true", help="evaluate the q-Pochhammer form")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("bracket", help="state-sum Kauffman bracket of a PD code")
    p.add_argument("--pd", required=True, metavar="FILE")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", choices=checks.SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-p", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
