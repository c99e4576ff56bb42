"""Certified interval comparisons in log10 space."""

import pytest
from mpmath import mp

from sparsecurves.errors import PrecisionError
from sparsecurves.logspace import (
    certified_le,
    certified_lt,
    endpoints,
    interval_context,
    iv_fraction,
    log10_int,
    power_ln,
)
from fractions import Fraction


def _log_of(n):
    return lambda d: log10_int(interval_context(d), n)


def test_endpoints_enclose_and_order():
    ctx = interval_context(30)
    lo, hi = endpoints(ctx.log(ctx.mpf(7)))
    assert lo < hi
    # a much finer reference value sits strictly inside the enclosure
    with mp.workdps(80):
        assert lo < mp.log(7) < hi


def test_certified_le_both_directions():
    assert certified_le(_log_of(2), _log_of(3))
    assert not certified_le(_log_of(3), _log_of(2))
    assert certified_lt(_log_of(999), _log_of(1000))
    assert not certified_lt(_log_of(1000), _log_of(999))


def test_certified_le_huge_separation():
    assert certified_le(_log_of(10 ** 500), _log_of(10 ** 501))


def test_equal_quantities_hit_precision_cap():
    with pytest.raises(PrecisionError):
        certified_le(_log_of(7), _log_of(7), max_digits=120)


def test_power_ln_matches_exact_integer_powers():
    ctx = interval_context(40)
    lo, hi = endpoints(power_ln(ctx, 5, Fraction(3)))
    assert lo <= 125 <= hi
    lo, hi = endpoints(power_ln(ctx, 16, Fraction(1, 2)))
    assert lo <= 4 <= hi
    # negative exponent
    lo, hi = endpoints(power_ln(ctx, 4, Fraction(-1)))
    with mp.workdps(50):
        assert lo <= mp.mpf(1) / 4 <= hi


def test_iv_fraction_encloses():
    ctx = interval_context(30)
    lo, hi = endpoints(iv_fraction(ctx, Fraction(1, 3)))
    with mp.workdps(80):
        assert lo < mp.mpf(1) / 3 < hi


def test_log10_rejects_nonpositive():
    ctx = interval_context(20)
    with pytest.raises(ValueError):
        log10_int(ctx, 0)
