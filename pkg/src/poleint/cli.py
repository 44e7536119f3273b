"""Command-line front end.

Subcommands map one-to-one onto library entry points and add no math of
their own:

    integrate    both antiderivative routes plus their cross-check (JSON)
    pfd          partial fraction decomposition of numerator/Q (JSON)
    identities   the moment identity table m_k vs 0 / 1 / h_l (text)
    vandermonde  determinant vs product, generalized factorization (text)
    limit        shrinking-root far-field table (CSV)

Exact values are printed as reduced "p/q" strings (denominator omitted when
it is 1); the only floating-point outputs are the sup errors of `limit`,
printed with 17 significant digits.

Exit codes: 0 success, 1 domain error (invalid roots and similar),
2 usage or parse error, 3 any exact identity check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .asymptotics import scaling_limit_table
from .integrate import (
    RootConfig,
    check_moment_identities,
    integrate_via_expansion,
    integrate_via_partial_fractions,
    partial_fractions,
)
from .parser import (
    PolyParseError,
    format_rational,
    parse_factored_denominator,
    parse_poly,
    parse_rational,
)
from .symmetric import (
    complete_homogeneous,
    determinant,
    generalized_vandermonde,
    vandermonde_matrix,
    vandermonde_product,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_CHECK_FAILED = 3


def _parse_rational_list(text: str) -> list[Fraction]:
    return [parse_rational(piece.strip()) for piece in text.split(",")]


def _root_config(args: argparse.Namespace) -> RootConfig:
    if args.roots is not None:
        roots = _parse_rational_list(args.roots)
    else:
        roots = parse_factored_denominator(args.den)
    return RootConfig(tuple(roots))


def _add_root_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--roots", help="comma-separated nonzero roots, e.g. 1,2,-3/4")
    group.add_argument(
        "--den",
        help="denominator in explicit factored form, e.g. 'z*(z-1)*(z-2)'",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poleint",
        description=(
            "Exact series-at-infinity integration of 1/(z(z-a_1)...(z-a_q)) "
            "and the identities behind it"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_int = sub.add_parser(
        "integrate", help="antiderivative of 1/Q by two routes, with cross-check"
    )
    _add_root_flags(p_int)
    p_int.add_argument(
        "--terms", type=int, required=True, help="series truncation N (need N >= q+1)"
    )
    p_int.add_argument("--format", choices=["json"], default="json")

    p_pfd = sub.add_parser("pfd", help="partial fraction decomposition of P/Q")
    _add_root_flags(p_pfd)
    p_pfd.add_argument("--num", default="1", help="numerator expression (default 1)")

    p_id = sub.add_parser("identities", help="moment identity table")
    _add_root_flags(p_id)
    p_id.add_argument(
        "--max-k",
        type=int,
        default=None,
        help="largest moment index to check (default q+10)",
    )

    p_vdm = sub.add_parser(
        "vandermonde", help="determinant vs product, generalized factorization"
    )
    p_vdm.add_argument("--points", required=True, help="comma-separated points")
    p_vdm.add_argument(
        "--degree",
        type=int,
        default=None,
        help="also check the generalized determinant of this degree",
    )

    p_lim = sub.add_parser("limit", help="shrinking-root far-field table (CSV)")
    _add_root_flags(p_lim)
    p_lim.add_argument("--scales", default="1,1/2,1/4,1/8")
    p_lim.add_argument("--radius", type=float, default=10.0)
    p_lim.add_argument("--samples", type=int, default=64)
    p_lim.add_argument("--terms", type=int, default=24)
    p_lim.add_argument(
        "--max-l", type=int, default=None, help="largest l to tabulate (default N-q)"
    )
    return parser


def _cmd_integrate(args: argparse.Namespace) -> int:
    cfg = _root_config(args)
    if args.terms < cfg.q + 1:
        print(
            f"error: --terms must be at least q+1 = {cfg.q + 1}, got {args.terms}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    ref = integrate_via_expansion(cfg, args.terms)
    chk = integrate_via_partial_fractions(cfg, args.terms)
    agree = ref.series.agrees_with(chk.series)
    doc = {
        "q": cfg.q,
        "roots": [format_rational(r) for r in cfg.roots],
        "truncation": args.terms,
        "b0_convention": "zero",
        "coefficients": [
            {"n": n, "value": format_rational(ref.series.coefficient(n))}
            for n in range(args.terms + 1)
        ],
        "valuation": int(ref.valuation),
        "paths_agree": agree,
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK if agree else EXIT_CHECK_FAILED


def _cmd_pfd(args: argparse.Namespace) -> int:
    cfg = _root_config(args)
    numerator = parse_poly(args.num)
    pf = partial_fractions(numerator, cfg)
    ok = pf.reconstructed_numerator() == numerator
    doc = {
        "q": cfg.q,
        "roots": [format_rational(r) for r in cfg.roots],
        "numerator": str(numerator),
        "terms": [
            {"pole": format_rational(p), "coefficient": format_rational(c)}
            for p, c in pf.terms
        ],
        "coefficient_sum": format_rational(pf.coefficient_sum()),
        "reconstruction_ok": ok,
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_identities(args: argparse.Namespace) -> int:
    cfg = _root_config(args)
    max_k = args.max_k if args.max_k is not None else cfg.q + 10
    report = check_moment_identities(cfg, max_k)
    passed = 0
    for row in report.rows:
        ok = "true" if row.ok else "false"
        passed += row.ok
        print(
            f"k={row.k} lhs={format_rational(row.lhs)} "
            f"rhs={format_rational(row.rhs)} pass={ok}"
        )
    print(f"{passed}/{len(report.rows)} identities hold")
    return EXIT_OK if report.all_pass else EXIT_CHECK_FAILED


def _cmd_vandermonde(args: argparse.Namespace) -> int:
    points = _parse_rational_list(args.points)
    det = determinant(vandermonde_matrix(points))
    prod = vandermonde_product(points)
    checks = [("determinant_vs_product", det, prod)]
    if args.degree is not None:
        lhs = generalized_vandermonde(points, args.degree)
        rhs = prod * complete_homogeneous(points, args.degree)
        checks.append((f"generalized_degree_{args.degree}", lhs, rhs))
    passed = 0
    for name, lhs, rhs in checks:
        ok = lhs == rhs
        passed += ok
        print(
            f"check={name} lhs={format_rational(lhs)} "
            f"rhs={format_rational(rhs)} pass={'true' if ok else 'false'}"
        )
    print(f"{passed}/{len(checks)} checks hold")
    return EXIT_OK if passed == len(checks) else EXIT_CHECK_FAILED


def _cmd_limit(args: argparse.Namespace) -> int:
    cfg = _root_config(args)
    report = scaling_limit_table(
        cfg,
        _parse_rational_list(args.scales),
        radius=args.radius,
        samples=args.samples,
        truncation=args.terms,
        max_l=args.max_l,
    )
    print("t,l,exact_b,numeric_sup_error")
    for row in report.rows:
        for l, b in enumerate(row.coefficients):
            print(
                f"{format_rational(row.scale)},{l},{format_rational(b)},"
                f"{row.sup_error:.17g}"
            )
    return EXIT_OK


_COMMANDS = {
    "integrate": _cmd_integrate,
    "pfd": _cmd_pfd,
    "identities": _cmd_identities,
    "vandermonde": _cmd_vandermonde,
    "limit": _cmd_limit,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except PolyParseError as exc:
        print(f"parse error at offset {exc.position}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry() -> None:
    sys.exit(main())
