"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .confrac import (
    ContinuedFraction,
    InvalidFractionError,
    evaluate,
    format_cf,
    parse_cf,
)
from .knots import (
    KnotId,
    NotHyperbolicError,
    TwoComponentLinkError,
    double_twist_to_two_bridge,
)
from .surfaces import slope_report
from .valuation import (
    fixes_vertex,
    nontriviality_certificate,
    ord_at_zero,
    parse_matrix_line,
    translation_length,
)


def _parse_fraction(text: str) -> Fraction:
    from math import gcd

    try:
        if "/" not in text:
            raise ValueError
        num, den = (int(part) for part in text.split("/"))
    except (ValueError, ZeroDivisionError):
        raise InvalidFractionError(f"expected a fraction p/q, got {text!r}")
    if den <= 0 or gcd(num, den) != 1:
        raise InvalidFractionError(f"{text}: need a reduced p/q with q > 0")
    return Fraction(num, den)


def _knot_record(fraction: Fraction) -> dict:
    knot = KnotId(fraction.numerator, fraction.denominator)
    report = slope_report(fraction)
    return {
        "knot": {"p": knot.p, "q": knot.q},
        "expansions": [
            {
                "entries": list(d.expansion.entries),
                "representative": str(evaluate(d.expansion)),
                "slope": d.slope,
                "symmetric": d.symmetric,
                "ideal_points": d.ideal_point_count,
            }
            for d in report
        ],
        "symmetric_slopes": sorted({d.slope for d in report if d.symmetric}),
        "all_slopes": sorted({d.slope for d in report}),
    }


def _cmd_expand(args) -> int:
    text = args.fraction
    if text.strip().startswith("["):
        cf = parse_cf(text)
        value = evaluate(cf)
        fraction = value - (value.numerator // value.denominator)
        if fraction == 0:
            raise InvalidFractionError(f"{text}: evaluates to an integer")
    else:
        fraction = _parse_fraction(text)
    record = _knot_record(fraction)
    if args.json:
        print(json.dumps(record, indent=2))
        return 0
    for exp in record["expansions"]:
        print(f"{format_cf(ContinuedFraction(tuple(exp['entries'])))}"
              f"  = {exp['representative']}")
    return 0


def _cmd_slopes(args) -> int:
    fraction = _parse_fraction(args.fraction)
    record = _knot_record(fraction)
    if args.json:
        print(json.dumps(record, indent=2))
        return 0
    print(f"knot {record['knot']['p']}/{record['knot']['q']}")
    print(f"{'expansion':<28} {'slope':>6} {'symmetric':>10} {'ideal_points':>13}")
    for exp in record["expansions"]:
        cf = format_cf(ContinuedFraction(tuple(exp["entries"])))
        print(f"{cf:<28} {exp['slope']:>6} {str(exp['symmetric']):>10}"
              f" {exp['ideal_points']:>13}")
    print("symmetric slopes:", record["symmetric_slopes"])
    print("all slopes:      ", record["all_slopes"])
    return 0


def _cmd_jkl(args) -> int:
    knot = double_twist_to_two_bridge(args.k, args.l)
    print(f"J({args.k},{args.l}) = K({knot.p},{knot.q})  fraction {knot}")
    return 0


def _cmd_apoly(args) -> int:
    from .charvar import a_polynomial
    from .exactnum import format_apoly

    fraction = _parse_fraction(args.fraction)
    ap = a_polynomial(fraction, keep_abelian=args.keep_abelian)
    text = format_apoly(ap.poly)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_polygon(args) -> int:
    from .charvar import SlopeConvention, edge_slopes, newton_polygon
    from .exactnum import read_apoly

    poly = read_apoly(args.file)
    convention = SlopeConvention(axis=args.convention, negate=args.negate,
                                 half=args.half)
    polygon = newton_polygon(poly)
    slopes = sorted(edge_slopes(polygon, convention))
    print(json.dumps({
        "corners": [list(c) for c in polygon.corners],
        "edge_slopes": [str(s) for s in slopes],
    }, indent=2))
    return 0


def _cmd_valuation(args) -> int:
    matrices = []
    with open(args.file) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                matrices.append(parse_matrix_line(line))
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidFractionError(f"line {lineno}: {exc}")
    if not matrices:
        raise InvalidFractionError(f"no matrices found in {args.file}")
    for i, m in enumerate(matrices):
        o = ord_at_zero(m.trace())
        print(f"matrix {i}: ord(trace) = {o}, fixes_vertex = {fixes_vertex(m)},"
              f" translation_length = {translation_length(m)}")
    cert = nontriviality_certificate(matrices)
    if cert is None:
        print("nontriviality certificate: none found (word length <= 3)")
    else:
        word = "*".join(f"g{i}" for i in cert)
        print(f"nontriviality certificate: {word} (indices {list(cert)})")
    return 0


def _cmd_verify(args) -> int:
    from .regression import run_paper_suite

    if not args.paper:
        print("nothing to verify: pass --paper", file=sys.stderr)
        return 2
    if args.n_min > args.n_max:
        print("--n-min must not exceed --n-max", file=sys.stderr)
        return 2
    report = run_paper_suite(args.n_min, args.n_max)
    if args.json:
        print(report.to_json())
    else:
        for record in report.records:
            for check in record.checks:
                status = "PASS" if check.passed else "FAIL"
                print(f"n={record.n} {check.name}: {status}")
                if not check.passed:
                    print(f"    expected {check.expected}")
                    print(f"    computed {check.computed}")
            for note in record.notes:
                print(f"n={record.n} note: {note}")
        print("RESULT:", "PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tbk",
        description="Exact boundary-slope and character-variety calculator "
                    "for two-bridge knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="admissible expansions of p/q")
    p.add_argument("fraction", help="fraction p/q, or a continued fraction like [4,-4]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("slopes", help="slope table for p/q")
    p.add_argument("fraction")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_slopes)

    p = sub.add_parser("jkl", help="normalize a double twist knot J(k,l)")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.set_defaults(func=_cmd_jkl)

    p = sub.add_parser("apoly", help="A-polynomial of p/q in sparse text form")
    p.add_argument("fraction")
    p.add_argument("--keep-abelian", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_apoly)

    p = sub.add_parser("polygon", help="Newton polygon of a sparse polynomial file")
    p.add_argument("file")
    p.add_argument("--convention", choices=("lm", "ml"), default="lm")
    p.add_argument("--negate", action="store_true")
    p.add_argument("--half", action="store_true")
    p.set_defaults(func=_cmd_polygon)

    p = sub.add_parser("valuation", help="fixed-vertex diagnostics for matrices")
    p.add_argument("file")
    p.set_defaults(func=_cmd_valuation)

    p = sub.add_parser("verify", help="regression suite over double twist knots")
    p.add_argument("--paper", action="store_true",
                   help="re-derive the published double twist knot data")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidFractionError, TwoComponentLinkError, NotHyperbolicError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
