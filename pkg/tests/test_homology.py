"""Homology class assignment and distinctness certificates."""

from fractions import Fraction

import pytest

from sparsecurves.curves import Curve, CurveSystem, generate_necklace_family, generate_system
from sparsecurves.errors import DomainError
from sparsecurves.homology import (
    ARC_OFFSETS,
    certify_distinct,
    certify_generated,
    curve_class,
)
from sparsecurves.surfaces import plan_composite


def test_offsets_are_injective():
    assert len(set(ARC_OFFSETS.values())) == 4


def test_all_ones_word_reduces_to_longitude():
    surface = plan_composite(36, Fraction(0))  # h=3
    cls = curve_class(Curve(0, (1, 1)), surface)
    coords = cls.coefficients
    assert len(coords) == 2 * surface.g
    # arc 1 contributes zero offsets; only the longitude slot is set
    assert sum(map(abs, coords)) == 1
    assert coords[2 * (surface.h - 1)] == 1


def test_single_letter_change_moves_one_block():
    surface = plan_composite(64, Fraction(0))  # h=4
    base = curve_class(Curve(0, (1, 2, 3)), surface).coefficients
    changed = curve_class(Curve(0, (1, 4, 3)), surface).coefficients
    diff = [i for i, (a, b) in enumerate(zip(base, changed)) if a != b]
    # exactly one piece's 2-slot block moves
    assert diff == [2, 3] or diff == [2] or diff == [3]
    block = 2 * 1  # piece index 1
    assert all(i in (block, block + 1) for i in diff)


def test_distinct_necklaces_distinct_classes():
    surface = plan_composite(36, Fraction(0))
    c1 = curve_class(Curve(0, (1, 1)), surface)
    c2 = curve_class(Curve(1, (1, 1)), surface)
    assert c1 != c2
    # non-overlapping support
    support1 = {i for i, v in enumerate(c1.coefficients) if v}
    support2 = {i for i, v in enumerate(c2.coefficients) if v}
    assert support1.isdisjoint(support2)
    assert support1 and support2


def test_vector_length_is_2g_with_base_genus():
    surface = plan_composite(17, Fraction(0))  # h=2, h'=8, base genus 1
    assert surface.base_genus == 1
    cls = curve_class(Curve(3, (2,)), surface)
    assert len(cls.coefficients) == 2 * 17


def test_curve_class_validates():
    surface = plan_composite(16, Fraction(0))
    with pytest.raises(DomainError):
        curve_class(Curve(0, (1, 2)), surface)  # wrong word length
    with pytest.raises(DomainError):
        curve_class(Curve(99, (1,)), surface)  # necklace out of range


@pytest.mark.parametrize("h", range(2, 7))
def test_word_class_injectivity_exhaustive(h):
    surface = plan_composite(4 * h * h, Fraction(0))
    assert surface.h == h
    words = generate_necklace_family(h)
    classes = {curve_class(Curve(0, w), surface).coefficients for w in words}
    assert len(classes) == len(words) == 4 ** (h - 1)


@pytest.mark.parametrize("g", [16, 36, 64])
def test_certify_generated_systems(g):
    system = generate_system(plan_composite(g, Fraction(0)))
    certificate = certify_distinct(system)
    assert certificate.distinct
    assert certificate.collision is None


def test_certify_duplicate_word_fails_with_witness():
    surface = plan_composite(16, Fraction(0))
    curves = (Curve(0, (1,)), Curve(0, (2,)), Curve(0, (1,)))
    system = CurveSystem(surface=surface, curves=curves)
    certificate = certify_distinct(system)
    assert not certificate.distinct
    assert certificate.collision == (Curve(0, (1,)), Curve(0, (1,)))


def test_certify_single_curve_system():
    surface = plan_composite(16, Fraction(0))
    system = CurveSystem(surface=surface, curves=(Curve(0, (1,)),))
    assert certify_distinct(system).distinct


def test_certify_generated_shortcut():
    surface = plan_composite(64, Fraction(1))
    certificate = certify_generated(surface)
    assert certificate.distinct
    assert certificate.method == "construction"
