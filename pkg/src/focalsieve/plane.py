"""Embedding of the first p² integers into the plane.

For a prime p, every n in [1, p²] is placed at

    (n mod p, -(n // p))        when p does not divide n,
    (p, -(n // p) + 1)          when n = k*p,

so non-multiples of p fill the columns x = 1 .. p-1 while the multiples of
p stack on the vertical line x = p (shifted one row up, which is what makes
them sit on that line for n = kp with k = 1 .. p).  The map is a bijection
onto its image; :func:`unmap` inverts it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numerics import format_rational


class NotPrimeError(ValueError):
    """Raised when a context is requested for a non-prime p.

    ``smallest_factor`` names the witness factor for composite p and is
    None when p < 2.
    """

    def __init__(self, p: int, smallest_factor: int | None = None):
        self.p = p
        self.smallest_factor = smallest_factor
        if smallest_factor is not None:
            msg = f"p must be prime: {p} has factor {smallest_factor}"
        else:
            msg = f"p must be a prime >= 2, got {p}"
        super().__init__(msg)


@dataclass(frozen=True)
class SieveContext:
    """A validated prime p together with its cached square."""

    p: int
    p_squared: int


@dataclass(frozen=True)
class PlanePoint:
    """A point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def to_json(self) -> dict:
        return {"x": format_rational(self.x), "y": format_rational(self.y)}


def point(x, y) -> PlanePoint:
    """PlanePoint from any Fraction-convertible pair (ints included)."""
    return PlanePoint(Fraction(x), Fraction(y))


def smallest_factor(n: int) -> int | None:
    """Smallest prime factor of n >= 2 by trial division, None if n is prime."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n % 2 == 0 and n != 2:
        return 2
    f = 3
    while f <= math.isqrt(n):
        if n % f == 0:
            return f
        f += 2
    return None


def new_context(p: int) -> SieveContext:
    """Context for a verified prime p; NotPrimeError otherwise."""
    if p < 2:
        raise NotPrimeError(p)
    factor = smallest_factor(p)
    if factor is not None:
        raise NotPrimeError(p, factor)
    return SieveContext(p=p, p_squared=p * p)


def map_to_plane(ctx: SieveContext, n: int) -> PlanePoint:
    """Image of n in [1, p²] under the embedding."""
    if not 1 <= n <= ctx.p_squared:
        raise ValueError(f"n must be in [1, {ctx.p_squared}], got {n}")
    quotient, remainder = divmod(n, ctx.p)
    if remainder == 0:
        return point(ctx.p, -quotient + 1)
    return point(remainder, -quotient)


def unmap(ctx: SieveContext, pt: PlanePoint) -> int:
    """The unique n in [1, p²] whose image is pt; ValueError if pt is not an image."""
    if pt.x.denominator != 1 or pt.y.denominator != 1:
        raise ValueError(f"not an image point (non-integer coordinates): {pt}")
    x, y = pt.x.numerator, pt.y.numerator
    p = ctx.p
    if not (1 <= x <= p and -p + 1 <= y <= 0):
        raise ValueError(f"not an image point (outside coordinate range): ({x}, {y})")
    if x == p:
        n = (1 - y) * p
    else:
        n = -y * p + x
    if not 1 <= n <= ctx.p_squared:
        raise ValueError(f"not an image point: ({x}, {y})")
    return n
