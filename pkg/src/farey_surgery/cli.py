"""Command-line front end: ``farey-surgery {omega,distance,flip-path,cf,enumerate,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time

from . import kernels
from .farey import flip_path, geodesic_distance, parse_triangle
from .rationals import InfiniteSlopeError, expand_cf, parse_coefficient, s_sum
from .surgery import (
    CSV_COLUMNS,
    PAPER_HYPERBOLIC_COUNT,
    SHARPNESS_LIMIT,
    audit_enumeration,
    formula_report,
    report,
)
from .verify import run_all

MAX_INPUT = 10**9
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _coefficient(text: str):
    try:
        x = parse_coefficient(text)
    except InfiniteSlopeError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if x.p > MAX_INPUT or x.q > MAX_INPUT:
        raise UsageError(f"|p| and q must be at most {MAX_INPUT}")
    return x


def _triangle(text: str):
    try:
        t = parse_triangle(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if any(abs(v.a) > MAX_INPUT or v.b > MAX_INPUT for v in t.vertices):
        raise UsageError(f"slope entries must be at most {MAX_INPUT} in absolute value")
    return t


def _no_csv(args, command: str) -> None:
    if args.format == "csv":
        raise UsageError(f"csv output is only available for list-valued commands, not {command}")


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_omega(args) -> int:
    _no_csv(args, "omega")
    x = _coefficient(args.slope)
    r = report(x) if args.explain or args.format == "json" else formula_report(x)
    if args.format == "json":
        _emit_json(r.to_dict())
        return EXIT_OK
    if r.complexity_claim is None:
        tail = f"upper bound only (omega > {SHARPNESS_LIMIT})"
    elif r.hyperbolic:
        tail = f"complexity = {r.complexity_claim} (omega <= {SHARPNESS_LIMIT})"
    else:
        tail = f"complexity = {r.complexity_claim}"
    print(f"omega({x}) = {r.omega}; {tail}")
    if args.explain:
        print(f"  a(p/q) = {r.a_value}, [p/q] = {x.integer_part}, rem = {x.remainder}, "
              f"S(p,q) = {s_sum(x)}, z = {r.z}")
        print(f"  hyperbolicity: {r.hyperbolicity.value}")
        if r.pipeline_vertices is None:
            print(f"  pipeline: {r.note}")
        else:
            print(f"  triangle_m = {{{r.triangle_m}}}, d(triangle_m, base 0) = {r.d_m_0}")
            print(f"  triangle_V = {{{r.triangle_v}}}, d(triangle_V, base 0) = {r.d_v_0}, "
                  f"d(triangle_V, base {r.z}) = {r.d_v_z}")
            for step, v in r.assembly:
                print(f"    {v:+d}  {step}")
            print(f"  pipeline vertices = {r.pipeline_vertices}, "
                  f"integer correction = {r.integer_correction}, "
                  f"net = {r.pipeline_vertices - r.integer_correction}")
    return EXIT_OK


def cmd_distance(args) -> int:
    _no_csv(args, "distance")
    t1, t2 = _triangle(args.t1), _triangle(args.t2)
    if args.path:
        return _print_path(args, t1, t2)
    d = geodesic_distance(t1, t2)
    if args.format == "json":
        _emit_json({"t1": str(t1), "t2": str(t2), "distance": d})
    else:
        print(d)
    return EXIT_OK


def _print_path(args, t1, t2) -> int:
    path = flip_path(t1, t2)
    if args.format == "json":
        _emit_json({
            "t1": str(t1),
            "t2": str(t2),
            "distance": len(path),
            "path": [str(t) for t in path],
        })
    else:
        for t in path:
            print(t)
    return EXIT_OK


def cmd_flip_path(args) -> int:
    _no_csv(args, "flip-path")
    return _print_path(args, _triangle(args.t1), _triangle(args.t2))


def cmd_cf(args) -> int:
    _no_csv(args, "cf")
    x = _coefficient(args.slope)
    cf = expand_cf(x)
    if args.format == "json":
        _emit_json({"p": x.p, "q": x.q, "quotients": list(cf.quotients), "S": cf.total})
    else:
        print(f"{x} = {cf}  S = {cf.total}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.max_omega < 7:
        raise UsageError("--max-omega must be at least 7")
    audit = audit_enumeration(args.max_omega, with_pipeline=True)
    if args.format == "json":
        _emit_json({
            "max_omega": audit.max_omega,
            "count": len(audit.reports),
            "hyperbolic_count": audit.hyperbolic_count,
            "exceptional_count": audit.exceptional_count,
            "paper_claim": PAPER_HYPERBOLIC_COUNT,
            "matches_paper": audit.matches_paper,
            "summary": audit.summary(),
            "proof": audit.proof,
            "slopes": [r.to_dict() for r in audit.reports],
        })
        return EXIT_OK
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in audit.reports:
            w.writerow(r.csv_row())
        # keep stdout parseable as pure CSV
        print(audit.summary(), file=sys.stderr)
        return EXIT_OK
    print(f"{'slope':>8} {'omega':>5}  {'kind':<11} complexity")
    for r in audit.reports:
        claim = "" if r.complexity_claim is None else str(r.complexity_claim)
        print(f"{str(r.slope):>8} {r.omega:>5}  {r.hyperbolicity.value:<11} {claim}")
    if args.proof:
        for line in audit.proof:
            print(f"# {line}")
    print(audit.summary())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.radius < 1:
        raise UsageError("--radius must be >= 1")
    start = time.perf_counter()
    results = run_all(args.radius, pairs=args.pairs, seed=args.seed, fault=args.inject_fault)
    ok = True
    total = 0
    for res in results:
        print(res.line())
        for msg in res.failures:
            print(f"  mismatch: {msg}")
        total += res.checks
        ok &= res.passed
    elapsed = time.perf_counter() - start
    print(f"{'PASS' if ok else 'FAIL'}: {total} checks in {elapsed:.2f}s "
          f"(kernel backend: {kernels.BACKEND})")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="farey-surgery",
        description="Complexity bounds for surgeries on the figure-eight knot.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log enumeration proofs")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("plain", "json")):
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain",
                       help=f"output format ({', '.join(choices)})")

    p = sub.add_parser("omega", help="omega(p/q) and its derivation")
    p.add_argument("slope", help='surgery coefficient "p/q" or "p"')
    p.add_argument("--explain", action="store_true", help="show the assembly pipeline")
    fmt(p)
    p.set_defaults(func=cmd_omega)

    for name, func, help_ in (
        ("distance", cmd_distance, "flip distance between two Farey triangles"),
        ("flip-path", cmd_flip_path, "geodesic flip sequence between two triangles"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("t1", help='triangle "a/b,c/d,e/f" (inf allowed)')
        p.add_argument("t2")
        if name == "distance":
            p.add_argument("--path", action="store_true", help="print the whole flip path")
        fmt(p)
        p.set_defaults(func=func, path=True)
        if name == "distance":
            p.set_defaults(path=False)

    p = sub.add_parser("cf", help="continued fraction and quotient sum")
    p.add_argument("slope")
    fmt(p)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("enumerate", help="all slopes with omega <= N")
    p.add_argument("--max-omega", type=int, default=SHARPNESS_LIMIT)
    p.add_argument("--proof", action="store_true", help="print the search-bound proof")
    fmt(p, ("plain", "json", "csv"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="oracle and identity sweeps")
    p.add_argument("--radius", type=int, default=10)
    p.add_argument("--pairs", type=int, default=1000, help="random triangle pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true",
                   help="shift one measured distance by 1 (harness self-test)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"farey-surgery: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
