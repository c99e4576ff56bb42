"""Necklace assembly and composite-surface planning."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sparsecurves.errors import DomainError
from sparsecurves.surfaces import build_necklace, plan_composite


def test_build_necklace_smallest():
    n = build_necklace(2)
    assert len(n.pieces) == 1
    assert len(n.annuli) == 1
    assert n.annuli == ((0, 0),)
    assert n.genus_from_euler == 2


def test_build_necklace_genus_five():
    n = build_necklace(5)
    assert len(n.pieces) == 4
    assert len(n.annuli) == 4
    # Euler characteristic 4*(-2) + 4*0 = -8 = 2 - 2*5
    assert n.euler_characteristic == -8
    assert n.genus_from_euler == 5
    assert n.is_single_cycle()


def test_build_necklace_rejects_h1():
    with pytest.raises(DomainError):
        build_necklace(1)


@given(h=st.integers(min_value=2, max_value=200))
def test_necklace_invariants(h):
    n = build_necklace(h)
    n.check_invariants()
    assert n.genus_from_euler == h


def test_plan_composite_examples():
    s = plan_composite(16, Fraction(0))
    assert (s.h, s.h_prime, s.base_genus) == (2, 8, 0)
    s = plan_composite(36, Fraction(0))
    assert (s.h, s.h_prime, s.base_genus) == (3, 12, 0)
    s = plan_composite(64, Fraction(0))
    assert (s.h, s.h_prime, s.base_genus) == (4, 16, 0)
    s = plan_composite(100, Fraction(0))
    assert (s.h, s.h_prime, s.base_genus) == (5, 20, 0)


def test_plan_composite_threshold_error_reports_minimal_genus():
    with pytest.raises(DomainError, match="g >= 16"):
        plan_composite(15, Fraction(0))
    with pytest.raises(DomainError, match="g >= 4"):
        plan_composite(3, Fraction(1))


def test_plan_composite_rejects_bad_alpha():
    with pytest.raises(DomainError):
        plan_composite(100, Fraction(-1))
    with pytest.raises(DomainError):
        plan_composite(100, Fraction(3, 2))


def test_plan_composite_deterministic():
    a = plan_composite(1234, Fraction(1, 3))
    b = plan_composite(1234, Fraction(1, 3))
    assert a == b


@given(
    g=st.integers(min_value=16, max_value=10 ** 6),
    p=st.integers(min_value=-2, max_value=3),
    q=st.integers(min_value=1, max_value=3),
)
@settings(max_examples=200)
def test_plan_composite_invariants(g, p, q):
    alpha = Fraction(p, q)
    if not (Fraction(-1) < alpha <= 1):
        return
    from sparsecurves.exactint import genus_admissible

    if not genus_admissible(g, alpha):
        return
    s = plan_composite(g, alpha)
    assert 2 <= s.h <= g
    assert s.h * s.h_prime <= g
    assert s.base_genus == g - s.h * s.h_prime >= 0
