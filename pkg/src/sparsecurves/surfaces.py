"""Combinatorial surface models: cyclic necklaces and composite surfaces.

A necklace of genus h is a cycle of h-1 pieces (each a torus with two
boundary circles) alternating with h-1 annuli; annulus i joins the right
boundary of piece i to the left boundary of piece (i+1) mod (h-1).  Each
piece contributes Euler characteristic -2 and each annulus 0, so the closed
assembled surface has characteristic 2-2h, i.e. genus h.

A composite surface of genus g carries h' pairwise-disjoint necklaces of
genus h plus a base surface absorbing the leftover genus g - h*h'.  Curves
never leave their necklace, so the base is tracked by its genus only; its
gluing combinatorics play no role in any count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactint import floor_scaled_power, genus_admissible, min_admissible_genus

ARC_LABELS = (1, 2, 3, 4)


@dataclass(frozen=True)
class NecklaceSurface:
    """Closed genus-h surface made of h-1 pieces and h-1 annuli in a cycle."""

    h: int
    pieces: tuple[int, ...]
    annuli: tuple[tuple[int, int], ...]

    @property
    def piece_count(self) -> int:
        return len(self.pieces)

    @property
    def euler_characteristic(self) -> int:
        # -2 per piece, 0 per annulus
        return -2 * len(self.pieces)

    @property
    def genus_from_euler(self) -> int:
        return (2 - self.euler_characteristic) // 2

    def is_single_cycle(self) -> bool:
        """True iff following the annuli from piece 0 visits every piece once."""
        n = len(self.pieces)
        succ = dict(self.annuli)
        seen = set()
        cur = 0
        for _ in range(n):
            if cur in seen:
                return False
            seen.add(cur)
            cur = succ.get(cur)
            if cur is None:
                return False
        return cur == 0 and len(seen) == n

    def check_invariants(self) -> None:
        if self.h < 2:
            raise DomainError(f"necklace genus must be >= 2, got {self.h}")
        if len(self.pieces) != self.h - 1 or len(self.annuli) != self.h - 1:
            raise DomainError("necklace needs exactly h-1 pieces and h-1 annuli")
        if not self.is_single_cycle():
            raise DomainError("piece/annulus incidence must form a single cycle")
        if self.genus_from_euler != self.h:
            raise DomainError("assembled Euler characteristic disagrees with genus")


def build_necklace(h: int) -> NecklaceSurface:
    """Assemble the cyclic necklace of genus h (h >= 2)."""
    if h < 2:
        raise DomainError(
            f"necklace genus must be >= 2 (needs at least one piece and one annulus), got {h}"
        )
    n = h - 1
    surface = NecklaceSurface(
        h=h,
        pieces=tuple(range(n)),
        annuli=tuple((i, (i + 1) % n) for i in range(n)),
    )
    surface.check_invariants()
    return surface


@dataclass(frozen=True)
class CompositeSurface:
    """Genus-g surface carrying h' necklaces of genus h plus a genus-(g-h*h') base."""

    g: int
    alpha: Fraction
    h: int
    h_prime: int
    base_genus: int

    @property
    def piece_count(self) -> int:
        return self.h - 1

    def necklace(self) -> NecklaceSurface:
        return build_necklace(self.h)

    def check_invariants(self) -> None:
        if not (2 <= self.h <= self.g):
            raise DomainError(f"h={self.h} must satisfy 2 <= h <= g={self.g}")
        if self.h * self.h_prime > self.g:
            raise DomainError("necklaces exceed the available genus: h*h' > g")
        if self.base_genus != self.g - self.h * self.h_prime or self.base_genus < 0:
            raise DomainError("base genus must equal g - h*h' and be nonnegative")


def plan_composite(g: int, alpha: Fraction | int | str) -> CompositeSurface:
    """Choose necklace parameters for genus g and threshold exponent alpha.

    h = floor((1/2) * g**((1+alpha)/2)) pieces of genus each, repeated in
    h' = floor(2 * g**((1-alpha)/2)) disjoint necklaces.  Both floors are
    computed by exact integer root extraction, never through binary floats.
    Deterministic: identical inputs give identical outputs.
    """
    alpha = Fraction(alpha)
    if not (Fraction(-1) < alpha <= Fraction(1)):
        raise DomainError(f"alpha must lie in (-1, 1], got {alpha}")
    if not isinstance(g, int) or g < 1:
        raise DomainError(f"genus must be a positive integer, got {g!r}")
    if not genus_admissible(g, alpha):
        minimal = min_admissible_genus(alpha)
        raise DomainError(
            f"g >= {minimal} required for alpha = {alpha} (got g = {g})"
        )
    h = floor_scaled_power(Fraction(1, 2), g, (1 + alpha) / 2)
    h_prime = floor_scaled_power(Fraction(2), g, (1 - alpha) / 2)
    surface = CompositeSurface(
        g=g,
        alpha=alpha,
        h=h,
        h_prime=h_prime,
        base_genus=g - h * h_prime,
    )
    surface.check_invariants()
    return surface
