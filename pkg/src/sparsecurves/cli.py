"""Command-line front end: construct / verify / bounds.

Exit codes: 0 verified sparse, 2 not sparse, 3 certificate failure,
4 domain error, 5 I/O or parse error.  Identical invocations produce
byte-identical output: field order is fixed and every logarithm is rendered
at a fixed precision.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from . import bounds as bounds_mod
from . import document as document_mod
from .curves import (
    DEFAULT_WORD_CAP,
    CrossingReport,
    SparsityThreshold,
    generate_system,
    generate_system_analytic,
    verify_sparsity,
)
from .errors import (
    DocumentError,
    DomainError,
    EnumerationCapError,
    PrecisionError,
    SparseCurvesError,
)
from .homology import certify_distinct, certify_generated
from .logspace import DEFAULT_DIGITS
from .surfaces import plan_composite

EXIT_OK = 0
EXIT_NOT_SPARSE = 2
EXIT_CERTIFICATE = 3
EXIT_DOMAIN = 4
EXIT_IO = 5


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _parse_fraction_arg(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"{name} must be an exact fraction like 1/2, got {text!r}: {exc}")


def _nstr(x: mpmath.mpf) -> str:
    return mpmath.nstr(x, 15)


# ----------------------------------------------------------------------
# construct
# ----------------------------------------------------------------------


def _cmd_construct(args: argparse.Namespace) -> int:
    try:
        alpha = _parse_fraction_arg(args.alpha, "--alpha")
        surface = plan_composite(args.g, alpha)
        if args.analytic:
            system = generate_system_analytic(surface)
        else:
            system = generate_system(surface, cap=args.cap)
    except EnumerationCapError as exc:
        return _fail(EXIT_DOMAIN, f"{exc} (pass --analytic for a counts-only document)")
    except DomainError as exc:
        return _fail(EXIT_DOMAIN, str(exc))
    doc = document_mod.SystemDocument.from_system(system)
    try:
        document_mod.save_document(doc, args.out)
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot write {args.out}: {exc}")
    print(
        f"curves={system.curve_count} h={surface.h} hPrime={surface.h_prime} "
        f"baseGenus={surface.base_genus} analytic={'true' if args.analytic else 'false'}"
    )
    return EXIT_OK


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def _threshold_from_arg(text: str, alpha: Fraction) -> SparsityThreshold:
    if text == "gpow":
        return SparsityThreshold.power(alpha)
    return SparsityThreshold.rational(_parse_fraction_arg(text, "--f"))


def _print_report(report: CrossingReport) -> None:
    print(f"crossings={report.total_crossings} pairs={report.pair_count}")
    print(
        f"average={report.average.numerator}/{report.average.denominator} "
        f"threshold={report.threshold.describe()} "
        f"sparse={'true' if report.is_sparse else 'false'} mode={report.mode}"
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        doc = document_mod.load_document(args.document)
    except DocumentError as exc:
        return _fail(EXIT_IO, str(exc))
    system = doc.system()
    try:
        threshold = _threshold_from_arg(args.f, system.surface.alpha)
    except DomainError as exc:
        return _fail(EXIT_DOMAIN, str(exc))

    report: Optional[CrossingReport] = None
    report_error: Optional[str] = None
    try:
        report = verify_sparsity(system, threshold, workers=args.threads)
    except (DomainError, EnumerationCapError) as exc:
        report_error = str(exc)

    if system.analytic:
        certificate = certify_generated(system.surface)
    else:
        certificate = certify_distinct(system)

    if report is not None:
        print(f"curves={system.curve_count}")
        _print_report(report)
    else:
        print(f"curves={system.curve_count}")
        print(f"crossing report unavailable: {report_error}")
    collision = ""
    if certificate.collision is not None:
        first, second = certificate.collision
        collision = (
            f" collision={first.necklace}:{''.join(map(str, first.word))}"
            f"/{second.necklace}:{''.join(map(str, second.word))}"
        )
    print(
        f"certificate: distinct={'true' if certificate.distinct else 'false'} "
        f"method={certificate.method}{collision}"
    )

    if report is not None:
        try:
            verdict = bounds_mod.crossing_inequality_check(
                system.surface.g,
                system.curve_count,
                report.total_crossings,
                digits=args.precision,
            )
            parts = [
                f"inequality: status={verdict.status.value}",
                f"size_log10={_nstr(verdict.size_log10)}",
                f"threshold_log10={_nstr(verdict.threshold_log10)}",
            ]
            if verdict.left_log10 is not None:
                parts.append(f"left_log10={_nstr(verdict.left_log10)}")
            if verdict.crossings_log10 is not None:
                parts.append(f"crossings_log10={_nstr(verdict.crossings_log10)}")
            print(" ".join(parts))
        except (DomainError, PrecisionError) as exc:
            print(f"inequality: unavailable ({exc})")

    if args.out:
        annotated = document_mod.SystemDocument.from_system(
            system, report=report, certificate=certificate
        )
        try:
            document_mod.save_document(annotated, args.out)
        except OSError as exc:
            return _fail(EXIT_IO, f"cannot write {args.out}: {exc}")

    if not certificate.distinct:
        return EXIT_CERTIFICATE
    if report is None:
        return _fail(EXIT_DOMAIN, report_error or "crossing report unavailable")
    if not report.is_sparse:
        return EXIT_NOT_SPARSE
    return EXIT_OK


# ----------------------------------------------------------------------
# bounds
# ----------------------------------------------------------------------


def _parse_g_values(args: argparse.Namespace) -> list[int]:
    values: list[int] = []
    if args.g:
        for chunk in args.g.split(","):
            chunk = chunk.strip()
            if chunk:
                values.append(int(chunk))
    if args.g_range:
        try:
            lo_text, hi_text, count_text = args.g_range.split(":")
            lo, hi, count = int(lo_text), int(hi_text), int(count_text)
        except ValueError as exc:
            raise DomainError(f"--g-range must be MIN:MAX:COUNT, got {args.g_range!r}") from exc
        if lo < 1 or hi < lo or count < 1:
            raise DomainError(f"--g-range needs 1 <= MIN <= MAX and COUNT >= 1")
        if count == 1:
            values.append(lo)
        else:
            span = math.log(hi) - math.log(lo)
            values.extend(
                round(math.exp(math.log(lo) + span * i / (count - 1)))
                for i in range(count)
            )
    if not values:
        raise DomainError("bounds needs --g and/or --g-range")
    return sorted(set(values))


def _cmd_bounds(args: argparse.Namespace) -> int:
    try:
        g_values = _parse_g_values(args)
        alphas = [
            _parse_fraction_arg(chunk.strip(), "--alpha")
            for chunk in args.alpha.split(",")
            if chunk.strip()
        ]
        if not alphas:
            raise DomainError("--alpha needs at least one fraction")
        rows = bounds_mod.bounds_table(
            g_values,
            alphas,
            digits=args.precision,
            cap=args.cap,
            workers=args.threads,
        )
    except (DomainError, PrecisionError) as exc:
        return _fail(EXIT_DOMAIN, str(exc))
    if args.format == "csv":
        text = bounds_mod.render_table_csv(rows)
    else:
        text = bounds_mod.render_table_json(rows)
    if args.out:
        try:
            document_mod.write_text_atomic(args.out, text)
        except OSError as exc:
            return _fail(EXIT_IO, f"cannot write {args.out}: {exc}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparse-curves",
        description=(
            "Construct sparse curve systems on high-genus surfaces, verify their "
            "exact crossing statistics and homology certificates, and tabulate "
            "size bounds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser(
        "construct", help="generate a curve system document for (g, alpha)"
    )
    p_construct.add_argument("--g", type=int, required=True, help="surface genus")
    p_construct.add_argument(
        "--alpha", required=True, help="threshold exponent as an exact fraction p/q"
    )
    p_construct.add_argument("--out", required=True, help="output JSON path")
    p_construct.add_argument(
        "--analytic",
        action="store_true",
        help="write a counts-only document (no curve list)",
    )
    p_construct.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_WORD_CAP,
        help="max words per necklace for explicit enumeration",
    )
    p_construct.set_defaults(func=_cmd_construct)

    p_verify = sub.add_parser(
        "verify", help="verify sparsity and the homology certificate of a document"
    )
    p_verify.add_argument("document", help="system document JSON path")
    p_verify.add_argument(
        "--f",
        default="gpow",
        help="sparsity threshold: an exact fraction p/q, or 'gpow' for g**alpha",
    )
    p_verify.add_argument("--threads", type=int, default=1, help="pairwise-sum workers")
    p_verify.add_argument(
        "--precision", type=int, default=DEFAULT_DIGITS, help="log-space digits"
    )
    p_verify.add_argument("--out", help="write the annotated document here")
    p_verify.set_defaults(func=_cmd_verify)

    p_bounds = sub.add_parser("bounds", help="tabulate bounds over (g, alpha) grids")
    p_bounds.add_argument("--g", help="comma-separated genus list, e.g. 16,25,36")
    p_bounds.add_argument(
        "--g-range", help="log-spaced genus grid MIN:MAX:COUNT, e.g. 16:1000000:50"
    )
    p_bounds.add_argument(
        "--alpha", required=True, help="comma-separated exponents, e.g. 0/1,1/2,1/1"
    )
    p_bounds.add_argument("--format", choices=("csv", "json"), default="csv")
    p_bounds.add_argument("--out", help="output path (stdout when omitted)")
    p_bounds.add_argument(
        "--precision", type=int, default=DEFAULT_DIGITS, help="log-space digits"
    )
    p_bounds.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_WORD_CAP,
        help="max words per necklace for explicit enumeration",
    )
    p_bounds.add_argument("--threads", type=int, default=1, help="pairwise-sum workers")
    p_bounds.set_defaults(func=_cmd_bounds)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SparseCurvesError as exc:
        return _fail(EXIT_DOMAIN, str(exc))


if __name__ == "__main__":
    sys.exit(main())
