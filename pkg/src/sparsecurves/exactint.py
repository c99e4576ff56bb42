"""Exact integer arithmetic for floors and comparisons of rational powers.

Quantities of the form floor(c * g**(r/s)) decide how many pieces and how
many necklaces a construction gets, and for large g a one-ULP floating-point
error flips the floor and changes the curve count by a factor of four.
Everything here therefore stays in integer arithmetic: k <= c * g**(r/s) is
decided by raising both sides to the s-th power, and floors are obtained from
an integer root.
"""

from __future__ import annotations

from fractions import Fraction


def integer_nth_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, k >= 1, by Newton iteration on integers."""
    if k < 1:
        raise ValueError(f"root index must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"radicand must be >= 0, got {n}")
    if n == 0:
        return 0
    if k == 1:
        return n
    # Start above the true root so the iteration decreases monotonically.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    # Newton can stop one step away from the floor; correct deterministically.
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def floor_scaled_power(coeff: Fraction, g: int, exponent: Fraction) -> int:
    """floor(coeff * g**exponent), exactly.

    Requires coeff > 0, g >= 1, exponent >= 0.  With coeff = a/b and
    exponent = r/s the result is the largest k with (k*b)**s <= a**s * g**r,
    i.e. floor of the integer s-th root of a**s * g**r, divided by b.
    """
    if coeff <= 0:
        raise ValueError(f"coefficient must be positive, got {coeff}")
    if g < 1:
        raise ValueError(f"base must be >= 1, got {g}")
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    a, b = coeff.numerator, coeff.denominator
    r, s = exponent.numerator, exponent.denominator
    return integer_nth_root(a ** s * g ** r, s) // b


def le_scaled_power(lhs: int, rhs: int, g: int, alpha: Fraction) -> bool:
    """Decide lhs <= rhs * g**alpha exactly, for integers lhs, rhs >= 0 and g >= 1.

    alpha may be negative; both sides are cross-raised to the q-th power
    (alpha = p/q) so only integer comparisons remain.
    """
    if lhs < 0 or rhs < 0:
        raise ValueError("comparison sides must be nonnegative")
    if g < 1:
        raise ValueError(f"base must be >= 1, got {g}")
    p, q = alpha.numerator, alpha.denominator
    if p >= 0:
        return lhs ** q <= rhs ** q * g ** p
    return lhs ** q * g ** (-p) <= rhs ** q


def is_exact_power(g: int, exponent: Fraction) -> int | None:
    """Return g**exponent as an int when that value is an exact integer, else None."""
    if g < 1 or exponent < 0:
        return None
    r, s = exponent.numerator, exponent.denominator
    root = integer_nth_root(g ** r, s)
    return root if root ** s == g ** r else None


def min_admissible_genus(alpha: Fraction) -> int:
    """Smallest integer g with g**(1+alpha) >= 16, i.e. g >= 4**(2/(1+alpha)).

    alpha must lie in (-1, 1]; the exponent 1+alpha is then positive and the
    threshold is decided by the integer comparison g**(p+q) >= 4**(2q).
    """
    if not (Fraction(-1) < alpha <= Fraction(1)):
        raise ValueError(f"alpha must lie in (-1, 1], got {alpha}")
    p, q = alpha.numerator, alpha.denominator
    e = p + q
    target = 4 ** (2 * q)
    root = integer_nth_root(target, e)
    return root if root ** e >= target else root + 1


def genus_admissible(g: int, alpha: Fraction) -> bool:
    """True iff g >= 4**(2/(1+alpha)), decided exactly."""
    if g < 1:
        return False
    p, q = alpha.numerator, alpha.denominator
    return g ** (p + q) >= 4 ** (2 * q)
