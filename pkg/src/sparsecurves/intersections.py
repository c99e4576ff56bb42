"""Exact pairwise crossing numbers, three interchangeable ways.

Two curves on the same necklace cross only inside the annuli: within a piece
they run along disjoint arc channels (curves sharing an arc are nested in
lexicographic word order, identically on both sides of the piece), and in a
cut-open annulus both strands are monotone, so they cross exactly once iff
their endpoint orders on the two boundary circles disagree.  That gives at
most one crossing per annulus and zero crossings for curves on different
necklaces.

Three routes to the same totals:

  * pair_intersection / total_crossings_explicit - the interleaving rule,
    summed over annuli and over unordered pairs;
  * total_crossings_analytic - a closed form for the full 4**(h-1) family,
    obtained by classifying ordered pairs by their first differing letter;
  * oracle_crossings_pl - an actual piecewise-linear drawing in a planar net
    of the cut necklace, with crossings counted by exact segment
    intersection tests.  Nothing in its counting path reuses the
    interleaving comparison, so it serves as an independent check.
"""

from __future__ import annotations

import multiprocessing
from fractions import Fraction
from typing import NamedTuple, Sequence

from .curves import Curve, CurveSystem, Word, validate_word
from .errors import DegenerateGeometryError, DomainError
from .surfaces import CompositeSurface


class BoundaryPosition(NamedTuple):
    """Position on a boundary circle: arc channel first, bundle rank within it."""

    arc: int
    rank: int


class AnnulusStrand(NamedTuple):
    """Monotone strand across a cut annulus, from left circle to right circle."""

    left: BoundaryPosition
    right: BoundaryPosition


def strands_cross(s1: AnnulusStrand, s2: AnnulusStrand) -> int:
    """1 iff the two monotone strands' endpoint orders disagree, else 0.

    Distinct curves occupy distinct positions on every boundary circle, so
    coincident endpoints mean the caller compared a strand with itself.
    """
    if s1.left == s2.left or s1.right == s2.right:
        raise DomainError(
            "strands of distinct curves must occupy distinct boundary positions"
        )
    return int((s1.left < s2.left) != (s1.right < s2.right))


def _pair_ranks(u: Word, w: Word, piece: int) -> tuple[int, int]:
    # Pair-local bundle ranks: nesting within a shared arc follows the
    # lexicographic order of the full words, so only the relative rank of the
    # two curves matters and it is independent of any other family members.
    if u[piece] != w[piece]:
        return 0, 0
    return (0, 1) if u < w else (1, 0)


def pair_intersection(c1: Curve, c2: Curve, surface: CompositeSurface) -> int:
    """Crossing number of two distinct curves in the drawn (minimal) position.

    Zero when the curves live on different necklaces; otherwise the sum over
    the h-1 annuli of the interleaving test, hence always at most h-1.
    """
    n = surface.piece_count
    validate_word(c1.word, n)
    validate_word(c2.word, n)
    if c1 == c2:
        raise DomainError("pair_intersection needs two distinct curves")
    if c1.necklace != c2.necklace:
        return 0
    if c1.word == c2.word:
        raise DomainError(
            "curves on one necklace with identical words are the same curve"
        )
    total = 0
    for i in range(n):
        j = (i + 1) % n
        r1_i, r2_i = _pair_ranks(c1.word, c2.word, i)
        r1_j, r2_j = _pair_ranks(c1.word, c2.word, j)
        s1 = AnnulusStrand(
            BoundaryPosition(c1.word[i], r1_i), BoundaryPosition(c1.word[j], r1_j)
        )
        s2 = AnnulusStrand(
            BoundaryPosition(c2.word[i], r2_i), BoundaryPosition(c2.word[j], r2_j)
        )
        total += strands_cross(s1, s2)
    return total


# ----------------------------------------------------------------------
# Explicit totals
# ----------------------------------------------------------------------
#
# For two words with u < w lexicographically, the strand of u precedes the
# strand of w on a boundary circle iff u[i] <= w[i] at the adjacent piece
# (ties are broken by the lexicographic nesting).  The pair's crossing count
# is therefore the number of cyclic sign changes of the pattern
# q_i = (u[i] <= w[i]); the inner loops below count exactly that.


def _rows_crossings(words: Sequence[Word], lo: int, hi: int) -> int:
    total = 0
    count = len(words)
    for a in range(lo, hi):
        u = words[a]
        n = len(u)
        for b in range(a + 1, count):
            w = words[b]
            first = prev = u[0] <= w[0]
            changes = 0
            for i in range(1, n):
                cur = u[i] <= w[i]
                if cur != prev:
                    changes += 1
                    prev = cur
            if prev != first:
                changes += 1
            total += changes
    return total


_POOL_WORDS: Sequence[Word] | None = None


def _pool_init(words: Sequence[Word]) -> None:
    global _POOL_WORDS
    _POOL_WORDS = words


def _pool_rows(block: tuple[int, int]) -> int:
    assert _POOL_WORDS is not None
    return _rows_crossings(_POOL_WORDS, block[0], block[1])


def _row_blocks(count: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous row ranges with roughly equal pair mass (row a owns count-a-1 pairs)."""
    total_pairs = count * (count - 1) // 2
    blocks: list[tuple[int, int]] = []
    start = 0
    done = 0
    for part in range(parts):
        target = (part + 1) * total_pairs // parts
        end = start
        while end < count and done < target:
            done += count - end - 1
            end += 1
        if end > start:
            blocks.append((start, end))
        start = end
    if start < count:
        blocks.append((start, count))
    return blocks


def _family_crossings_sorted(words: list[Word], workers: int = 1) -> int:
    """Total crossings over all unordered pairs of a sorted, duplicate-free family."""
    count = len(words)
    if count < 2:
        return 0
    for a in range(count - 1):
        if words[a] == words[a + 1]:
            raise DomainError(f"duplicate word {words[a]} within one necklace")
    if workers <= 1:
        return _rows_crossings(words, 0, count)
    blocks = _row_blocks(count, 4 * workers)
    with multiprocessing.Pool(
        processes=workers, initializer=_pool_init, initargs=(words,)
    ) as pool:
        return sum(pool.map(_pool_rows, blocks))


def total_crossings_explicit(system: CurveSystem, *, workers: int = 1) -> int:
    """Sum of pair_intersection over all unordered pairs of the system.

    Pairs on different necklaces contribute zero, so the sum decomposes into
    per-necklace totals; necklaces carrying identical word sets (as in every
    generated system) are computed once.  The result is an exact big integer
    and is identical for every worker count: partial sums are integers and
    integer addition is associative.
    """
    if system.analytic:
        raise DomainError("analytic systems carry no curve list; use analytic totals")
    by_necklace: dict[int, list[Word]] = {}
    for curve in system.curves:
        validate_word(curve.word, system.surface.piece_count)
        by_necklace.setdefault(curve.necklace, []).append(curve.word)
    total = 0
    cache: dict[tuple[Word, ...], int] = {}
    for words in by_necklace.values():
        key = tuple(sorted(words))
        if key not in cache:
            cache[key] = _family_crossings_sorted(list(key), workers=workers)
        total += cache[key]
    return total


# ----------------------------------------------------------------------
# Analytic totals
# ----------------------------------------------------------------------


def annulus_family_crossings(piece_count: int, annulus: int) -> int:
    """Crossing pairs of the full family inside one annulus, by direct summation.

    Ordered pairs u < w (lexicographically) are classified by the first
    position d where the words differ; letters matter only at d and at the
    two pieces adjacent to the annulus, every other position contributing a
    free factor.  Kept as an explicit sum as a validation layer between the
    pairwise rule and the closed form below.
    """
    n = piece_count
    if not (0 <= annulus < max(n, 1)):
        raise DomainError(f"annulus index {annulus} outside [0, {n})")
    if n < 2:
        return 0
    a = annulus
    if a < n - 1:
        total = 36 * 4 ** a * 16 ** (n - a - 2)
        total += 720 * sum(4 ** d * 16 ** (n - d - 3) for d in range(a))
        return total
    # wrapping annulus joining the last piece back to piece 0
    return 36 * sum(4 ** d * 16 ** (n - d - 2) for d in range(n - 1))


def necklace_family_crossings(h: int) -> int:
    """Closed-form total crossings of the full 4**(h-1) family on one necklace.

    Equals the sum of annulus_family_crossings over all annuli; the geometric
    series collapse to a handful of big-integer powers, so this stays cheap
    even when 4**(h-1) words could never be enumerated.
    """
    if h < 2:
        raise DomainError(f"necklace genus must be >= 2, got {h}")
    n = h - 1
    if n < 2:
        return 0
    num1 = 4 ** (2 * n - 3) - 4 ** (n - 2)
    assert num1 % 3 == 0
    s1 = num1 // 3
    m = n - 2
    if m > 0:
        num2 = 12 * m * 4 ** (2 * n - 6) - 4 ** (2 * n - 5) + 4 ** (n - 3)
        assert num2 % 9 == 0
        s2 = num2 // 9
    else:
        s2 = 0
    return 72 * s1 + 720 * s2


def total_crossings_analytic(surface: CompositeSurface) -> int:
    """Closed-form total for the generated system: h' identical necklace families."""
    return surface.h_prime * necklace_family_crossings(surface.h)


# ----------------------------------------------------------------------
# Piecewise-linear drawing oracle
# ----------------------------------------------------------------------


def _orient(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _in_box(p, q, r) -> bool:
    return (
        min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
        and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
    )


class _Degenerate(Exception):
    pass


def _segment_relation(a1, a2, b1, b2) -> int:
    """1 for a proper transverse crossing, 0 for disjoint, raises on contact."""
    o1 = _orient(a1, a2, b1)
    o2 = _orient(a1, a2, b2)
    o3 = _orient(b1, b2, a1)
    o4 = _orient(b1, b2, a2)
    if o1 and o2 and o3 and o4:
        return 1 if (o1 != o2 and o3 != o4) else 0
    if o1 == 0 and _in_box(a1, a2, b1):
        raise _Degenerate
    if o2 == 0 and _in_box(a1, a2, b2):
        raise _Degenerate
    if o3 == 0 and _in_box(b1, b2, a1):
        raise _Degenerate
    if o4 == 0 and _in_box(b1, b2, a2):
        raise _Degenerate
    return 0


def _polyline(word: Word, ranks: Sequence[int], steps: int, shift):
    """Sampled closed path of one curve through the cut-open necklace net.

    Piece k occupies the x-column [2k*W, (2k+1)*W] and annulus k the column
    to its right, W = steps; every run is subdivided into `steps` unit-width
    sub-segments, so all coordinates are integers (plus the exact rational
    `shift` on perturbed curves).  The path starts and ends at the same
    height: the last annulus returns to the piece-0 entry position.
    """
    n = len(word)
    w = steps

    def height(piece: int):
        return (4 * word[piece] + ranks[piece]) * w + shift

    points = [(0, height(0))]
    x = 0
    for k in range(n):
        for target_y in (height(k), height((k + 1) % n)):
            y0 = points[-1][1]
            dy = target_y - y0
            for t in range(1, w + 1):
                if shift == 0:
                    y = y0 + dy * t // w  # heights are multiples of w: exact
                else:
                    y = y0 + dy * Fraction(t, w)
                points.append((x + t, y))
            x += w
    return points


def _segments_by_column(points):
    columns: dict[int, list] = {}
    for i in range(len(points) - 1):
        seg = (points[i], points[i + 1])
        columns.setdefault(min(seg[0][0], seg[1][0]), []).append(seg)
    return columns


def _count_drawing_crossings(points1, points2) -> int:
    cols1 = _segments_by_column(points1)
    cols2 = _segments_by_column(points2)
    crossings = 0
    for col, segs2 in cols2.items():
        for a1, a2 in cols1.get(col, ()):
            for b1, b2 in segs2:
                crossings += _segment_relation(a1, a2, b1, b2)
    return crossings


def oracle_crossings_pl(
    c1: Curve, c2: Curve, surface: CompositeSurface, resolution: int = 8
) -> int:
    """Crossing count of two same-necklace curves from an actual drawing.

    Both curves are drawn as piecewise-linear closed paths in a planar net of
    the cut-open necklace and crossings are counted by exact integer segment
    intersection predicates.  Monotone strands and disjoint arc channels keep
    the drawing free of bigons, so the count is already minimal.  Coincident
    geometry (a crossing landing exactly on a sample point) triggers one
    deterministic rank-indexed perturbation of the second curve; geometry
    still degenerate after that is an error.
    """
    if resolution < 4:
        raise DomainError(f"resolution must be >= 4 sample points, got {resolution}")
    n = surface.piece_count
    validate_word(c1.word, n)
    validate_word(c2.word, n)
    if c1 == c2:
        raise DomainError("oracle needs two distinct curves")
    if c1.necklace != c2.necklace:
        raise DomainError("oracle compares curves on the same necklace")
    if c1.word == c2.word:
        raise DomainError(
            "curves on one necklace with identical words are the same curve"
        )
    steps = resolution - 1
    ranks1 = []
    ranks2 = []
    for i in range(n):
        r1, r2 = _pair_ranks(c1.word, c2.word, i)
        ranks1.append(r1)
        ranks2.append(r2)
    points1 = _polyline(c1.word, ranks1, steps, 0)
    try:
        return _count_drawing_crossings(points1, _polyline(c2.word, ranks2, steps, 0))
    except _Degenerate:
        pass
    # Perturb the second curve by less than half the channel gap: every
    # boundary order is preserved, so the crossing count is unchanged.
    delta = Fraction(1, 3 + sum(ranks2))
    try:
        return _count_drawing_crossings(
            points1, _polyline(c2.word, ranks2, steps, delta)
        )
    except _Degenerate:
        raise DegenerateGeometryError(
            f"degenerate drawing geometry for {c1} vs {c2} after perturbation"
        ) from None
