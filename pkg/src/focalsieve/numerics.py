"""Exact rational arithmetic for the geometric core.

Every slope, coordinate and intersection in this package is an exact
fraction of arbitrary-precision integers, so geometric identities can be
asserted as equalities rather than float comparisons.  The representation
is :class:`fractions.Fraction` from the standard library, which stores
values normalized (positive denominator, gcd(|numerator|, denominator) = 1)
and compares by cross-multiplication.  There is deliberately no
floating-point mode; floats appear only at the SVG serialization boundary.
"""

from __future__ import annotations

import operator
from fractions import Fraction

Rational = Fraction

_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def rat(numerator: int, denominator: int = 1) -> Rational:
    """Normalized rational numerator/denominator.

    The sign is carried by the numerator.  Raises ZeroDivisionError for a
    zero denominator.
    """
    return Fraction(numerator, denominator)


def arith(a: Rational, b: Rational, op: str) -> Rational:
    """Apply one of ``+ - * /`` (unicode minus/times/divide accepted) exactly.

    Division by zero raises ZeroDivisionError; an unknown operator raises
    ValueError.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    return fn(Fraction(a), Fraction(b))


def format_rational(value: Rational | int) -> str:
    """Serialize a rational as ``"num/den"``, or plain ``"n"`` for integers."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Rational:
    """Inverse of :func:`format_rational`; also accepts plain integer strings."""
    return Fraction(text)
