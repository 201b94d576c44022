"""Primes in (p, p²) as the complement of all focal-line lattice hits.

The geometric route unions the lattice hits of every standard focal line
(a in [2, p-1], k in [1, p]) with the multiples of p contributed by the
vertical line x = p; whatever survives is prime.  A textbook Eratosthenes
marking over the same interval serves as the independent oracle, and
:func:`multiples_reference` provides the plain arithmetic multiple set the
geometric union must reproduce -- the two are kept as separate code paths
on purpose, so their equality stays a meaningful check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .focal import lattice_hits
from .plane import SieveContext


@dataclass(frozen=True)
class SieveResult:
    p: int
    crossed: frozenset[int]
    primes: tuple[int, ...]
    method: str

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "method": self.method,
            "primeCount": len(self.primes),
            "primes": list(self.primes),
        }

    def to_csv(self) -> str:
        """One prime per line."""
        return "".join(f"{n}\n" for n in self.primes)


def _geometric_flags(ctx: SieveContext) -> bytearray:
    """Crossing flags for n = p+1 .. p²-1 (index n - p - 1), one byte each."""
    p = ctx.p
    flags = bytearray(ctx.p_squared - p - 1)
    base = p + 1
    for a in range(2, p):
        for k in range(1, p + 1):
            for n in lattice_hits(ctx, a, k):
                flags[n - base] = 1
    for n in range(2 * p, ctx.p_squared, p):
        flags[n - base] = 1
    return flags


def sieve_geometric(ctx: SieveContext) -> SieveResult:
    """Sieve (p, p²) by focal-line enumeration."""
    flags = _geometric_flags(ctx)
    base = ctx.p + 1
    crossed = frozenset(base + i for i, hit in enumerate(flags) if hit)
    primes = tuple(base + i for i, hit in enumerate(flags) if not hit)
    return SieveResult(p=ctx.p, crossed=crossed, primes=primes, method="geometric")


def crossed_geometric(ctx: SieveContext) -> set[int]:
    """Every n in (p, p²) hit by some focal line (the zeroth one included)."""
    return set(sieve_geometric(ctx).crossed)


def primes_geometric(ctx: SieveContext) -> list[int]:
    """All n in (p, p²) no focal line crosses, ascending."""
    return list(sieve_geometric(ctx).primes)


def multiples_reference(ctx: SieveContext) -> set[int]:
    """Arithmetic reference: multiples of any a in [2, p] inside (p, p²).

    Computed without any line geometry; the geometric crossing set must
    equal this exactly.
    """
    out: set[int] = set()
    for a in range(2, ctx.p + 1):
        start = a * (ctx.p // a + 1)
        out.update(range(start, ctx.p_squared, a))
    return out


def primes_classic(lo: int, hi: int) -> list[int]:
    """Primes in the open interval (lo, hi) by standard Eratosthenes marking."""
    if not 0 <= lo < hi:
        raise ValueError(f"need 0 <= lo < hi, got ({lo}, {hi})")
    if hi <= 2:
        return []
    composite = bytearray(hi)
    composite[0:2] = b"\x01\x01"
    i = 2
    while i * i < hi:
        if not composite[i]:
            composite[i * i :: i] = b"\x01" * len(composite[i * i :: i])
        i += 1
    return [n for n in range(lo + 1, hi) if not composite[n]]


def sieve_classic(ctx: SieveContext) -> SieveResult:
    """Oracle-path result over (p, p²) with the same shape as the geometric one."""
    primes = tuple(primes_classic(ctx.p, ctx.p_squared))
    prime_set = frozenset(primes)
    crossed = frozenset(
        n for n in range(ctx.p + 1, ctx.p_squared) if n not in prime_set
    )
    return SieveResult(p=ctx.p, crossed=crossed, primes=primes, method="classic")
