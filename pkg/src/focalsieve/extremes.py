"""Distribution of the quotients p // a and its extremes.

A quotient point is the pair (a, p // a) for a in [2, p-1]; all of them sit
in the band p/a - 1 < q <= p/a between the two hyperbolas y = p/x and
y = p/x - 1.  An extreme is a quotient point where the quotient strictly
drops at a + 1; extremes with q >= 2 come in swap-symmetric pairs (a, q) /
(q, a) across the bisector y = x, and every extreme on or above the
bisector has a <= isqrt(p).

Whether an exact closed form for p // a exists below isqrt(p) is left open
here; this module only enumerates and checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .plane import SieveContext


@dataclass(frozen=True)
class QuotientPoint:
    a: int
    q: int


@dataclass(frozen=True)
class Extreme:
    a: int
    q: int


def quotient_points(ctx: SieveContext) -> list[QuotientPoint]:
    """(a, p // a) for every a in [2, p-1], ascending in a."""
    return [QuotientPoint(a=a, q=ctx.p // a) for a in range(2, ctx.p)]


def is_extreme(ctx: SieveContext, a: int) -> bool:
    """True when the quotient strictly drops between a and a + 1."""
    if not 2 <= a <= ctx.p - 1:
        raise ValueError(f"a must be in [2, {ctx.p - 1}], got {a}")
    return ctx.p // (a + 1) < ctx.p // a


def extremes(ctx: SieveContext) -> list[Extreme]:
    """All quotient points where the quotient drops at a + 1, ascending in a."""
    return [
        Extreme(a=a, q=ctx.p // a) for a in range(2, ctx.p) if is_extreme(ctx, a)
    ]


def reflect(e: Extreme) -> tuple[int, int]:
    """Mirror image of an extreme across the bisector y = x."""
    return (e.q, e.a)


def floor_sqrt(n: int) -> int:
    """Exact integer square root (largest s with s*s <= n)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return math.isqrt(n)


def distribution_report(ctx: SieveContext) -> dict:
    return {
        "p": ctx.p,
        "points": [[pt.a, pt.q] for pt in quotient_points(ctx)],
        "extremes": [[e.a, e.q] for e in extremes(ctx)],
    }
