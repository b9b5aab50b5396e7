"""Command-line front end.

Every command reads an instance file, calls the library and prints JSON.
Exit codes: 0 success, 1 verification failure, 2 input error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .abelian import DEFAULT_SUBSET_CAP, ElementList, FgAbelianGroup, GSpec, lcm_period
from .errors import CapExceededError, InputError
from .io import Instance, load_graph, load_instance, pair_to_json
from .oracle import DEFAULT_ENUM_CAP, bm_count, cw_count, verify
from .quasipoly import QuasiPolynomial, has_gcd_property
from .transforms import bm_to_cw, cw_to_bm, graph_to_list
from .tutte import (
    chromatic_quasi,
    chromatic_quasi_dc,
    g_char_poly,
    g_tutte,
    minimal_period,
    real_char_poly,
)

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _pair(args: argparse.Namespace) -> tuple[FgAbelianGroup, ElementList]:
    if getattr(args, "graph", None):
        return graph_to_list(*load_graph(args.graph))
    if args.input is None:
        raise InputError("an input file is required")
    return load_instance(args.input).pair()


def _poly_json(p) -> dict:
    return {"coeffs": list(p.coeffs), "expr": p.format("t")}


def cmd_chromatic(args: argparse.Namespace) -> int:
    gamma, a = _pair(args)
    f = (chromatic_quasi_dc if args.dc else chromatic_quasi)(gamma, a, args.subset_cap)
    payload = f.to_json()
    if args.latex:
        payload["latex"] = f.to_latex("q")
    _emit(payload)
    return EXIT_OK


def cmd_tutte(args: argparse.Namespace) -> int:
    gamma, a = _pair(args)
    _emit(g_tutte(gamma, a, GSpec.parse(args.g), args.subset_cap).to_json())
    return EXIT_OK


def cmd_charpoly(args: argparse.Namespace) -> int:
    gamma, a = _pair(args)
    _emit(_poly_json(g_char_poly(gamma, a, GSpec.parse(args.g), args.subset_cap)))
    return EXIT_OK


def cmd_real_charpoly(args: argparse.Namespace) -> int:
    gamma, a = _pair(args)
    _emit(_poly_json(real_char_poly(gamma, a, args.subset_cap)))
    return EXIT_OK


def cmd_period(args: argparse.Namespace) -> int:
    gamma, a = _pair(args)
    f = chromatic_quasi(gamma, a, args.subset_cap)
    _emit({"lcm_period": lcm_period(gamma, a, args.subset_cap), "minimal_period": minimal_period(f)})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    gamma, a = _pair(args)
    f = chromatic_quasi(gamma, a, args.subset_cap)
    ok = True

    report = verify(gamma, a, args.qmax, f, args.enum_cap)
    for line in report.lines():
        print(line)
    ok &= report.passed

    if args.expect:
        try:
            expected = QuasiPolynomial.from_json(json.loads(Path(args.expect).read_text()))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read expected quasi-polynomial from {args.expect}: {exc}") from None
        exp_report = verify(gamma, a, args.qmax, expected, args.enum_cap)
        for line in exp_report.lines():
            print(f"expect {line}")
        ok &= exp_report.passed

    dc = chromatic_quasi_dc(gamma, a, args.subset_cap)
    dc_ok = all(dc(q) == f(q) for q in range(1, 2 * f.period + 1))
    print(f"deletion-contraction {'PASS' if dc_ok else 'FAIL'}")
    gcd_ok = has_gcd_property(f.expand())
    print(f"gcd-property {'PASS' if gcd_ok else 'FAIL'}")
    ok &= dc_ok and gcd_ok
    print("verify PASS" if ok else "verify FAIL")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_convert(args: argparse.Namespace) -> int:
    inst: Instance = load_instance(args.input)
    if args.to == "cw":
        gamma, a = inst.pair()
        cw, _ = bm_to_cw(gamma, a)
        out = {"cw": cw.to_json()}
    else:
        if inst.cw is None:
            raise InputError("--to bm needs an instance with a 'cw' block")
        cw = inst.cw
        gamma, a = cw_to_bm(cw)
        out = pair_to_json(gamma, a)
    text = json.dumps(out, sort_keys=True)
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    if args.check:
        ok = True
        for q in range(1, args.qmax + 1):
            bm, cwc = bm_count(gamma, a, q, args.enum_cap), cw_count(cw, q, args.enum_cap)
            good = bm == cwc
            ok &= good
            print(f"q={q} bm={bm} cw={cwc} {'PASS' if good else 'FAIL'}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--subset-cap", type=int, default=DEFAULT_SUBSET_CAP,
                        help="maximum list length for sublist enumeration (default %(default)s)")
    common.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP,
                        help="maximum brute-force enumeration size (default %(default)s)")

    parser = argparse.ArgumentParser(
        prog="quasichrom",
        description="Chromatic quasi-polynomials and G-Tutte polynomials of lists in abelian groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, graph: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("input", nargs="?" if graph else None, help="instance JSON file")
        if graph:
            p.add_argument("--graph", help="read a graph edge-list file instead of an instance")
        p.set_defaults(func=func)
        return p

    p = add("chromatic", cmd_chromatic, "chromatic quasi-polynomial")
    p.add_argument("--latex", action="store_true", help="add a LaTeX cases display")
    p.add_argument("--dc", action="store_true", help="use the deletion-contraction recursion")

    p = add("tutte", cmd_tutte, "G-Tutte polynomial")
    p.add_argument("--g", default="Z", help="k:<int>, Z or QZ (default Z)")

    p = add("charpoly", cmd_charpoly, "G-characteristic polynomial")
    p.add_argument("--g", default="k:1", help="k:<int>, Z or QZ (default k:1)")

    add("real-charpoly", cmd_real_charpoly, "characteristic polynomial of the real arrangement")
    add("period", cmd_period, "LCM-period and minimal period")

    p = add("verify", cmd_verify, "check symbolic results against brute force")
    p.add_argument("--qmax", type=int, default=24)
    p.add_argument("--expect", help="also check this quasi-polynomial JSON against brute force")

    p = add("convert", cmd_convert, "convert between pair and CW instances", graph=False)
    p.add_argument("--to", choices=["cw", "bm"], required=True)
    p.add_argument("--check", action="store_true", help="compare both brute-force counts")
    p.add_argument("--qmax", type=int, default=12)
    p.add_argument("-o", "--output", help="write the converted instance here")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
