"""Shared oracle helpers for the test suite.

These deliberately avoid the package's own sieving code: primality here is
plain trial division, so equality checks against the library are genuine
cross-checks rather than the same code twice.
"""

from __future__ import annotations


def is_prime_by_trial_division(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime_by_trial_division(p)]
