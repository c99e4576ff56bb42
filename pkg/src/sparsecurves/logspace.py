"""Rigorous base-10 logarithms of huge positive quantities.

The bound formulas mix exact integers with terms like e**(sqrt(128*g) + 6)
whose values overflow any fixed-precision float, so all magnitude comparisons
happen in log10 space.  Every quantity is enclosed in a directed-rounding
interval (mpmath's interval context); a comparison that cannot be decided at
the working precision is retried with the precision doubled, up to a hard
cap, and raises PrecisionError if the enclosures still overlap there.  All
formula inequalities we certify are strict with room, so the cap is only ever
reached for genuinely equal quantities.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

import mpmath
from mpmath import mp
from mpmath.ctx_iv import MPIntervalContext

from .errors import PrecisionError

DEFAULT_DIGITS = 50
MAX_DIGITS = 1000

# Extra working digits so enclosure widths stay well below the nominal precision.
_GUARD_DIGITS = 10


def interval_context(digits: int) -> MPIntervalContext:
    """Fresh interval context at the requested decimal precision.

    A private context per evaluation keeps concurrent callers from racing on
    mpmath's global precision state.
    """
    ctx = MPIntervalContext()
    ctx.dps = digits + _GUARD_DIGITS
    return ctx


def endpoints(x) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Exact (lo, hi) endpoints of an interval as plain mpf values.

    The raw libmp tuples are converted without rounding, so the returned
    endpoints are the enclosure itself, not an approximation of it.
    """
    lo_raw, hi_raw = x._mpi_
    return mp.make_mpf(lo_raw), mp.make_mpf(hi_raw)


def iv_fraction(ctx: MPIntervalContext, value: Fraction):
    """Enclosure of an exact rational in the given context."""
    return ctx.mpf(value.numerator) / ctx.mpf(value.denominator)


def log10_int(ctx: MPIntervalContext, n: int):
    """Enclosure of log10(n) for a positive integer n of any size."""
    if n <= 0:
        raise ValueError(f"log10 needs a positive argument, got {n}")
    return ctx.log(ctx.mpf(n)) / ctx.log(ctx.mpf(10))


def log10_fraction(ctx: MPIntervalContext, value: Fraction):
    """Enclosure of log10 of a positive rational."""
    if value <= 0:
        raise ValueError(f"log10 needs a positive argument, got {value}")
    return log10_int(ctx, value.numerator) - log10_int(ctx, value.denominator)


def power_ln(ctx: MPIntervalContext, g: int, exponent: Fraction):
    """Enclosure of g**exponent via exp((r/s) * ln(g)); exponent may be negative."""
    if g < 1:
        raise ValueError(f"base must be >= 1, got {g}")
    r, s = exponent.numerator, exponent.denominator
    return ctx.exp(ctx.log(ctx.mpf(g)) * r / s)


Evaluator = Callable[[int], object]


def certified_le(
    eval_a: Evaluator,
    eval_b: Evaluator,
    *,
    digits: int = DEFAULT_DIGITS,
    max_digits: int = MAX_DIGITS,
) -> bool:
    """Certify a <= b between two interval-valued evaluators.

    Returns True when a <= b is proven, False when a > b is proven, and
    raises PrecisionError if the enclosures still overlap at max_digits.
    """
    d = digits
    while True:
        a_lo, a_hi = endpoints(eval_a(d))
        b_lo, b_hi = endpoints(eval_b(d))
        if a_hi <= b_lo:
            return True
        if b_hi < a_lo:
            return False
        if d >= max_digits:
            raise PrecisionError(
                f"comparison undecidable at {d} digits "
                f"(a in [{mpmath.nstr(a_lo, 25)}, {mpmath.nstr(a_hi, 25)}], "
                f"b in [{mpmath.nstr(b_lo, 25)}, {mpmath.nstr(b_hi, 25)}])"
            )
        d = min(2 * d, max_digits)


def certified_lt(
    eval_a: Evaluator,
    eval_b: Evaluator,
    *,
    digits: int = DEFAULT_DIGITS,
    max_digits: int = MAX_DIGITS,
) -> bool:
    """Certify a < b; True / False are both proven, overlap raises PrecisionError."""
    d = digits
    while True:
        a_lo, a_hi = endpoints(eval_a(d))
        b_lo, b_hi = endpoints(eval_b(d))
        if a_hi < b_lo:
            return True
        if b_hi <= a_lo:
            return False
        if d >= max_digits:
            raise PrecisionError(f"comparison undecidable at {d} digits")
        d = min(2 * d, max_digits)
