"""Exact rational truth values in [0, 1] and the Lukasiewicz operations on them.

Truth values and measure weights are `fractions.Fraction` throughout, so
every comparison downstream is exact; floats never enter the computation.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FormatError, ValueOutOfRange

ZERO = Fraction(0)
ONE = Fraction(1)

#: Default five-point value grid used by generators and exhaustive checks.
DEFAULT_GRID = (ZERO, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), ONE)


def unit(value) -> Fraction:
    """Coerce `value` to an exact rational and require it to lie in [0, 1]."""
    q = Fraction(value)
    if q < ZERO or q > ONE:
        raise ValueOutOfRange(f"value {q} is outside [0, 1]")
    return q


def parse_rational(text: str) -> Fraction:
    """Parse a "p/q" or "p" string into a Fraction (no floats accepted)."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"not a rational 'p/q' string: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Serialize a Fraction as the canonical "p/q" (or integer "p") string."""
    return str(q)


# Lukasiewicz truth functions.  All arguments are assumed to be in [0, 1].

def neg(x: Fraction) -> Fraction:
    return ONE - x


def implies(x: Fraction, y: Fraction) -> Fraction:
    """x -> y = min(1, 1 - x + y); equals 1 exactly when x <= y."""
    return min(ONE, ONE - x + y)


def weak_and(x: Fraction, y: Fraction) -> Fraction:
    return min(x, y)


def weak_or(x: Fraction, y: Fraction) -> Fraction:
    return max(x, y)


def strong_and(x: Fraction, y: Fraction) -> Fraction:
    return max(ZERO, x + y - ONE)


def strong_or(x: Fraction, y: Fraction) -> Fraction:
    return min(ONE, x + y)
