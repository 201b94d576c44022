"""Remainder structure of the quotient classes.

All divisors a sharing the quotient q = p // a form a contiguous interval
[a_min, a_max]; their remainders rem(p/a) = p - q*a descend from the
maximum in steps of exactly q.  The smallest member of the class has a
closed form,

    a_min = p // (q + 1) + 1,

which pins the maximum remainder to p - q * a_min.  Two floor identities
back that formula and are exposed here as predicates so they can be swept
directly:

    min_floor_identity:   p // (p // (q + 1) + 1) == q        (attained q)
    drop_below_min:       p // (p // (q + 1))      > q        (q = p // a)

The closed form is only meaningful for quotients that actually occur;
asking about an unattained q is an error rather than a formal
extrapolation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .plane import SieveContext


@dataclass(frozen=True)
class QuotientClass:
    """All divisors a with p // a == q, with their remainder progression."""

    q: int
    a_min: int
    a_max: int
    max_rem: int
    remainders: tuple[tuple[int, int], ...]  # (a, rem) pairs, descending in rem

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "aMin": self.a_min,
            "aMax": self.a_max,
            "maxRem": self.max_rem,
            "remainders": [[a, r] for a, r in self.remainders],
        }


def attained_quotients(ctx: SieveContext) -> list[int]:
    """Sorted distinct values of p // a over a in [2, p-1]."""
    return sorted({ctx.p // a for a in range(2, ctx.p)})


def _require_attained(ctx: SieveContext, q: int) -> int:
    """a_min for an attained q, or ValueError."""
    if q >= 1:
        a_min = ctx.p // (q + 1) + 1
        if 2 <= a_min <= ctx.p - 1 and ctx.p // a_min == q:
            return a_min
    raise ValueError(f"quotient {q} is not attained for p={ctx.p}")


def min_a_for_quotient(ctx: SieveContext, q: int) -> int:
    """Smallest a with p // a == q: the closed form p // (q + 1) + 1."""
    return _require_attained(ctx, q)


def max_remainder_for_quotient(ctx: SieveContext, q: int) -> int:
    """Largest rem(p/a) among a with p // a == q: p - q * a_min."""
    return ctx.p - q * _require_attained(ctx, q)


def quotient_class(ctx: SieveContext, q: int) -> QuotientClass:
    """The full class for an attained q, remainders descending in steps of q."""
    a_min = _require_attained(ctx, q)
    a_max = min(ctx.p // q, ctx.p - 1)
    rems = tuple((a, ctx.p - q * a) for a in range(a_min, a_max + 1))
    return QuotientClass(
        q=q,
        a_min=a_min,
        a_max=a_max,
        max_rem=ctx.p - q * a_min,
        remainders=rems,
    )


def quotient_class_report(ctx: SieveContext, q: int) -> dict:
    report = {"p": ctx.p}
    report.update(quotient_class(ctx, q).to_json())
    return report


def min_floor_identity_holds(p: int, q: int) -> bool:
    """p // (p // (q+1) + 1) == q, i.e. the closed-form a_min reproduces q."""
    return p // (p // (q + 1) + 1) == q


def drop_below_min_holds(p: int, a: int) -> bool:
    """p // (p // (q+1)) > q for q = p // a, i.e. one step below a_min overshoots."""
    q = p // a
    return p // (p // (q + 1)) > q
