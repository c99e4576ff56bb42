"""Exact and log-space evaluation of curve-system size bounds.

Values like 2**sqrt(g) outgrow any machine float long before g gets
interesting, so every bound carries a rigorous base-10 log enclosure, plus an
exact big rational whenever the formula happens to evaluate to one (the
2-power exponent g**((1+alpha)/2) is an integer, say).  Comparisons are
certified: exact when both sides are exact, otherwise by interval separation
with doubling precision.

The three formulas:

  * lower bound   (1/16) * floor(2*g**((1-a)/2)) * 2**(g**((1+a)/2))
  * construction  floor(2*g**((1-a)/2)) * 4**(floor((1/2)*g**((1+a)/2)) - 1)
  * upper bound   (2g-1)*e**(sqrt(64*(2g-2)*f)+6), rounded up to
                  2g*e**(sqrt(128*g*f)+6)

together with the crossing-number inequality gate (applicable only when the
system size reaches e**6 * (2g-1)) and the linear ceiling 2g*e**(sqrt(128)+6)
that caps f = g**alpha systems for alpha <= -1.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence

import mpmath
from mpmath import mp

from .curves import DEFAULT_WORD_CAP, SparsityThreshold, generate_system
from .errors import DomainError, PrecisionError
from .exactint import floor_scaled_power, is_exact_power, min_admissible_genus
from .intersections import total_crossings_analytic, total_crossings_explicit
from .logspace import (
    DEFAULT_DIGITS,
    MAX_DIGITS,
    endpoints,
    interval_context,
    iv_fraction,
    log10_int,
    power_ln,
)
from .surfaces import plan_composite

# Exact values are materialized only below this bit size; larger ones are
# carried purely in log space.
MAX_EXACT_BITS = 8_000_000


@dataclass(frozen=True)
class BoundValue:
    """A bound's value: always a log10 enclosure, exact rational when it exists."""

    formula: str
    log10: mpmath.mpf  # midpoint of [lo, hi]
    lo: mpmath.mpf
    hi: mpmath.mpf
    exact: Optional[Fraction]
    digits: int
    evaluate: Callable[[int], object]  # digits -> interval enclosing log10(value)

    def enclosure(self, digits: int) -> tuple[mpmath.mpf, mpmath.mpf]:
        return endpoints(self.evaluate(digits))


def _make_bound(
    formula: str,
    evaluator: Callable[[int], object],
    digits: int,
    exact: Optional[Fraction] = None,
) -> BoundValue:
    lo, hi = endpoints(evaluator(digits))
    with mp.workdps(digits + 10):
        mid = (lo + hi) / 2
    return BoundValue(
        formula=formula,
        log10=mid,
        lo=lo,
        hi=hi,
        exact=exact,
        digits=digits,
        evaluate=evaluator,
    )


def certified_le(
    a: BoundValue, b: BoundValue, *, max_digits: int = MAX_DIGITS
) -> bool:
    """Certify a <= b: exactly when both sides are exact, else by enclosures."""
    if a.exact is not None and b.exact is not None:
        return a.exact <= b.exact
    digits = max(a.digits, b.digits)
    while True:
        a_lo, a_hi = a.enclosure(digits)
        b_lo, b_hi = b.enclosure(digits)
        if a_hi <= b_lo:
            return True
        if b_hi < a_lo:
            return False
        if digits >= max_digits:
            raise PrecisionError(
                f"{a.formula} vs {b.formula} undecidable at {digits} digits"
            )
        digits = min(2 * digits, max_digits)


def _check_domain(g: int, alpha: Fraction) -> Fraction:
    alpha = Fraction(alpha)
    if not (Fraction(-1) < alpha <= Fraction(1)):
        raise DomainError(f"alpha must lie in (-1, 1], got {alpha}")
    if not isinstance(g, int) or g < 1:
        raise DomainError(f"genus must be a positive integer, got {g!r}")
    minimal = min_admissible_genus(alpha)
    if g < minimal:
        raise DomainError(f"g >= {minimal} required for alpha = {alpha} (got g = {g})")
    return alpha


def lower_bound(
    g: int, alpha: Fraction | int | str, *, digits: int = DEFAULT_DIGITS
) -> BoundValue:
    """(1/16) * floor(2*g**((1-alpha)/2)) * 2**(g**((1+alpha)/2)).

    The floor is exact integer arithmetic; the 2-power exponent is usually
    irrational and lives in the log enclosure, but when g**((1+alpha)/2) is an
    exact integer the whole value is attached as an exact rational.
    """
    alpha = _check_domain(g, alpha)
    prefactor = floor_scaled_power(Fraction(2), g, (1 - alpha) / 2)
    exponent = (1 + alpha) / 2
    exp_int = is_exact_power(g, exponent)
    exact = None
    if exp_int is not None and exp_int <= MAX_EXACT_BITS:
        exact = Fraction(prefactor * 2 ** exp_int, 16)

    def evaluate(d: int):
        ctx = interval_context(d)
        ln10 = ctx.log(ctx.mpf(10))
        power = power_ln(ctx, g, exponent)
        return (
            log10_int(ctx, prefactor)
            - log10_int(ctx, 16)
            + power * ctx.log(ctx.mpf(2)) / ln10
        )

    return _make_bound("count_lower_bound", evaluate, digits, exact)


def construction_count(
    g: int, alpha: Fraction | int | str, *, digits: int = DEFAULT_DIGITS
) -> BoundValue:
    """Size h' * 4**(h-1) of the generated system, as an exact big integer."""
    alpha = _check_domain(g, alpha)
    surface = plan_composite(g, alpha)
    h, h_prime = surface.h, surface.h_prime
    exact = None
    if 2 * (h - 1) <= MAX_EXACT_BITS:
        exact = Fraction(h_prime * 4 ** (h - 1))

    def evaluate(d: int):
        ctx = interval_context(d)
        return log10_int(ctx, h_prime) + (h - 1) * log10_int(ctx, 4)

    return _make_bound("construction_count", evaluate, digits, exact)


@dataclass(frozen=True)
class SizeUpperBound:
    """Both shapes of the size ceiling; tight <= rounded always."""

    tight: BoundValue
    rounded: BoundValue


def _as_threshold(f: SparsityThreshold | Fraction | int | str) -> SparsityThreshold:
    if isinstance(f, SparsityThreshold):
        return f
    return SparsityThreshold.rational(Fraction(f))


def upper_bound(
    g: int,
    f: SparsityThreshold | Fraction | int | str,
    *,
    digits: int = DEFAULT_DIGITS,
) -> SizeUpperBound:
    """Size ceiling for an f-sparse system on genus g >= 2.

    Returns the tight form (2g-1)*e**(sqrt(64*(2g-2)*f(g))+6) and the rounded
    form 2g*e**(sqrt(128*g*f(g))+6), both as log enclosures; f may be an
    exact rational or the power g**alpha.
    """
    if not isinstance(g, int) or g < 2:
        raise DomainError(f"genus must be an integer >= 2, got {g!r}")
    threshold = _as_threshold(f)

    def scaled_f(ctx, scale: int):
        # scale already carries its g factors; f(g) = g**alpha multiplies in whole
        if threshold.kind == "rational":
            return iv_fraction(ctx, scale * threshold.value)
        return ctx.mpf(scale) * power_ln(ctx, g, threshold.value)

    def eval_tight(d: int):
        ctx = interval_context(d)
        ln10 = ctx.log(ctx.mpf(10))
        return (
            log10_int(ctx, 2 * g - 1)
            + (ctx.sqrt(scaled_f(ctx, 64 * (2 * g - 2))) + 6) / ln10
        )

    def eval_rounded(d: int):
        ctx = interval_context(d)
        ln10 = ctx.log(ctx.mpf(10))
        return (
            log10_int(ctx, 2 * g)
            + (ctx.sqrt(scaled_f(ctx, 128 * g)) + 6) / ln10
        )

    return SizeUpperBound(
        tight=_make_bound("size_upper_bound_tight", eval_tight, digits),
        rounded=_make_bound("size_upper_bound", eval_rounded, digits),
    )


class InequalityStatus(Enum):
    NOT_APPLICABLE = "not-applicable"
    HOLDS = "holds"
    INCONSISTENT = "inconsistent"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class CrossingInequalityVerdict:
    status: InequalityStatus
    threshold_log10: mpmath.mpf
    size_log10: mpmath.mpf
    left_log10: Optional[mpmath.mpf]
    crossings_log10: Optional[mpmath.mpf]
    digits: int


def crossing_inequality_check(
    g: int,
    m: int,
    cr: int,
    *,
    digits: int = DEFAULT_DIGITS,
    max_digits: int = MAX_DIGITS,
) -> CrossingInequalityVerdict:
    """Gatekeeper for the crossing-number inequality at system size m.

    Below the applicability threshold e**6 * (2g-1) the inequality says
    nothing (status NOT_APPLICABLE).  Above it, the left side
    (m * log(m / ((2g-1)e**6)))**2 / (128*(2g-2)) must be strictly below the
    exact crossing total of any genuine curve system, so HOLDS is the only
    healthy verdict; INCONSISTENT flags an internal error in the caller's cr.
    Enclosures too wide to decide are retried at doubled precision and
    reported UNDECIDED at the cap.
    """
    if not isinstance(g, int) or g < 2:
        raise DomainError(f"genus must be an integer >= 2, got {g!r}")
    if not isinstance(m, int) or m < 2:
        raise DomainError(f"system size must be an integer >= 2, got {m!r}")
    if cr < 0:
        raise DomainError(f"crossing total must be >= 0, got {cr}")

    def mids(d: int) -> tuple[mpmath.mpf, mpmath.mpf]:
        ctx = interval_context(d)
        ln10 = ctx.log(ctx.mpf(10))
        thr = log10_int(ctx, 2 * g - 1) + 6 / ln10
        size = log10_int(ctx, m)
        with mp.workdps(d + 10):
            return (
                sum(endpoints(thr)) / 2,
                sum(endpoints(size)) / 2,
            )

    # Applicability: m versus e**6 * (2g-1); never equal (threshold irrational).
    d = digits
    while True:
        ctx = interval_context(d)
        ln10 = ctx.log(ctx.mpf(10))
        thr_lo, thr_hi = endpoints(log10_int(ctx, 2 * g - 1) + 6 / ln10)
        m_lo, m_hi = endpoints(log10_int(ctx, m))
        if m_hi < thr_lo:
            thr_mid, size_mid = mids(d)
            return CrossingInequalityVerdict(
                InequalityStatus.NOT_APPLICABLE, thr_mid, size_mid, None, None, d
            )
        if thr_hi <= m_lo:
            break
        if d >= max_digits:
            thr_mid, size_mid = mids(d)
            return CrossingInequalityVerdict(
                InequalityStatus.UNDECIDED, thr_mid, size_mid, None, None, d
            )
        d = min(2 * d, max_digits)

    # Applicable regime: evaluate the left side and compare with cr.
    while True:
        ctx = interval_context(d)
        ln10 = ctx.log(ctx.mpf(10))
        gap = ctx.log(ctx.mpf(m)) - ctx.log(ctx.mpf(2 * g - 1)) - 6
        gap_lo, _ = endpoints(gap)
        if gap_lo > 0:
            left = (
                2 * (log10_int(ctx, m) + ctx.log(gap) / ln10)
                - log10_int(ctx, 128 * (2 * g - 2))
            )
            left_lo, left_hi = endpoints(left)
            thr_mid, size_mid = mids(d)
            with mp.workdps(d + 10):
                left_mid = (left_lo + left_hi) / 2
            if cr == 0:
                # a strictly positive lower bound can never sit below zero crossings
                return CrossingInequalityVerdict(
                    InequalityStatus.INCONSISTENT, thr_mid, size_mid, left_mid, None, d
                )
            cr_lo, cr_hi = endpoints(log10_int(ctx, cr))
            with mp.workdps(d + 10):
                cr_mid = (cr_lo + cr_hi) / 2
            if left_hi < cr_lo:
                return CrossingInequalityVerdict(
                    InequalityStatus.HOLDS, thr_mid, size_mid, left_mid, cr_mid, d
                )
            if cr_hi <= left_lo:
                return CrossingInequalityVerdict(
                    InequalityStatus.INCONSISTENT, thr_mid, size_mid, left_mid, cr_mid, d
                )
        if d >= max_digits:
            thr_mid, size_mid = mids(d)
            return CrossingInequalityVerdict(
                InequalityStatus.UNDECIDED, thr_mid, size_mid, None, None, d
            )
        d = min(2 * d, max_digits)


@dataclass(frozen=True)
class LinearRegimeBound:
    """The ceiling 2g * e**(sqrt(128 * g**(1+alpha)) + 6) and its linear coefficient."""

    value: BoundValue
    coefficient: BoundValue  # e**(sqrt(128) + 6)


def linear_regime_bound(
    g: int, alpha: Fraction | int | str, *, digits: int = DEFAULT_DIGITS
) -> LinearRegimeBound:
    """Size ceiling in the regime alpha <= -1, where growth is linear in g.

    For alpha <= -1 the exponent sqrt(128 * g**(1+alpha)) never exceeds
    sqrt(128), so the ceiling is at most g times twice the constant
    e**(sqrt(128)+6); at alpha = -1 it equals 2g * e**(sqrt(128)+6) exactly.
    """
    alpha = Fraction(alpha)
    if alpha > -1:
        raise DomainError(f"linear regime needs alpha <= -1, got {alpha}")
    if not isinstance(g, int) or g < 2:
        raise DomainError(f"genus must be an integer >= 2, got {g!r}")

    def eval_value(d: int):
        ctx = interval_context(d)
        ln10 = ctx.log(ctx.mpf(10))
        inner = ctx.mpf(128) * power_ln(ctx, g, 1 + alpha)
        return log10_int(ctx, 2 * g) + (ctx.sqrt(inner) + 6) / ln10

    def eval_coeff(d: int):
        ctx = interval_context(d)
        ln10 = ctx.log(ctx.mpf(10))
        return (ctx.sqrt(ctx.mpf(128)) + 6) / ln10

    return LinearRegimeBound(
        value=_make_bound("linear_regime_bound", eval_value, digits),
        coefficient=_make_bound("linear_regime_coefficient", eval_coeff, digits),
    )


# ----------------------------------------------------------------------
# Comparison tables
# ----------------------------------------------------------------------

# Explicit crossing totals are quadratic in family size; table rows beyond
# this many words per necklace use the closed form instead.
TABLE_EXPLICIT_WORD_LIMIT = 4096


@dataclass(frozen=True)
class TableRow:
    g: int
    alpha: Fraction
    h: int
    h_prime: int
    base_genus: int
    count: Optional[int]
    count_log10: str
    lower_log10: str
    upper_tight_log10: str
    upper_rounded_log10: str
    crossings: Optional[int]
    ratio: str
    mode: str
    lower_le_count: bool
    lower_le_upper: bool


def _nstr(x: mpmath.mpf) -> str:
    return mpmath.nstr(x, 15)


def _render_ratio(crossings: int, pairs: int) -> str:
    ratio = Fraction(crossings, pairs)
    # bit-length guard: stringifying mega-digit integers is quadratic
    if ratio.numerator.bit_length() + ratio.denominator.bit_length() <= 133:
        return f"{ratio.numerator}/{ratio.denominator}"
    with mp.workdps(30):
        value = mp.mpf(ratio.numerator) / mp.mpf(ratio.denominator)
        return mpmath.nstr(value, 12)


def bounds_table(
    g_values: Sequence[int],
    alphas: Sequence[Fraction],
    *,
    digits: int = DEFAULT_DIGITS,
    cap: int = DEFAULT_WORD_CAP,
    explicit_word_limit: int = TABLE_EXPLICIT_WORD_LIMIT,
    workers: int = 1,
) -> list[TableRow]:
    """One row per (g, alpha), ordered by (g, alpha).

    Each row reports the construction parameters, exact counts, the three
    bound values in log10, the exact sparsity ratio of the generated system,
    and the two consistency flags, each certified.  Crossing totals come from
    the explicit pair sum while the per-necklace family stays at or below
    both the word cap and the (smaller) quadratic-work limit, and from the
    closed form beyond that; the mode column records which route was taken.
    """
    rows: list[TableRow] = []
    for g in sorted(set(g_values)):
        for alpha in sorted(set(Fraction(a) for a in alphas)):
            surface = plan_composite(g, alpha)
            lower = lower_bound(g, alpha, digits=digits)
            count = construction_count(g, alpha, digits=digits)
            upper = upper_bound(
                g, SparsityThreshold.power(alpha), digits=digits
            )
            words = 4 ** (surface.h - 1)
            if words <= min(cap, explicit_word_limit):
                system = generate_system(surface, cap=cap)
                crossings = total_crossings_explicit(system, workers=workers)
                mode = "explicit"
            else:
                crossings = total_crossings_analytic(surface)
                mode = "analytic"
            pairs = surface.h_prime * words * (surface.h_prime * words - 1) // 2
            count_int = (
                int(count.exact) if count.exact is not None else None
            )
            rows.append(
                TableRow(
                    g=g,
                    alpha=alpha,
                    h=surface.h,
                    h_prime=surface.h_prime,
                    base_genus=surface.base_genus,
                    count=count_int,
                    count_log10=_nstr(count.log10),
                    lower_log10=_nstr(lower.log10),
                    upper_tight_log10=_nstr(upper.tight.log10),
                    upper_rounded_log10=_nstr(upper.rounded.log10),
                    crossings=crossings,
                    ratio=_render_ratio(crossings, pairs),
                    mode=mode,
                    lower_le_count=certified_le(lower, count),
                    lower_le_upper=certified_le(lower, upper.rounded),
                )
            )
    return rows


_TABLE_COLUMNS = (
    "g",
    "alpha",
    "h",
    "hPrime",
    "baseGenus",
    "count",
    "count_log10",
    "lower_log10",
    "upper_tight_log10",
    "upper_rounded_log10",
    "crossings",
    "ratio",
    "mode",
    "lower_le_count",
    "lower_le_upper",
)


def _int_cell(value: Optional[int]) -> str:
    if value is None or value.bit_length() > 200:  # ~60 decimal digits
        return ""
    return str(value)


def _row_cells(row: TableRow) -> dict[str, object]:
    count_text = _int_cell(row.count)
    crossings_text = _int_cell(row.crossings)
    return {
        "g": row.g,
        "alpha": f"{row.alpha.numerator}/{row.alpha.denominator}",
        "h": row.h,
        "hPrime": row.h_prime,
        "baseGenus": row.base_genus,
        "count": count_text,
        "count_log10": row.count_log10,
        "lower_log10": row.lower_log10,
        "upper_tight_log10": row.upper_tight_log10,
        "upper_rounded_log10": row.upper_rounded_log10,
        "crossings": crossings_text,
        "ratio": row.ratio,
        "mode": row.mode,
        "lower_le_count": "true" if row.lower_le_count else "false",
        "lower_le_upper": "true" if row.lower_le_upper else "false",
    }


def render_table_csv(rows: Sequence[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=_TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(_row_cells(row))
    return buffer.getvalue()


def render_table_json(rows: Sequence[TableRow]) -> str:
    payload = {"columns": list(_TABLE_COLUMNS), "rows": [_row_cells(r) for r in rows]}
    return json.dumps(payload, indent=2) + "\n"
