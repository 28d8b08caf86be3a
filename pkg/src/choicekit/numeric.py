"""Exact rational scalars and their textual form.

Every scalar in the engine is a :class:`fractions.Fraction`: multipliers,
vector coordinates, and certificate entries.  Fractions are always stored in
canonical form (positive denominator, gcd-reduced), which makes equality a
structural check and keeps set deduplication exact.  There is deliberately no
floating-point path anywhere; feasibility answers must stay
certificate-checkable.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class RationalParseError(ValueError):
    """Raised for text that is not an integer or a p/q fraction with q > 0."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"n"`` or ``"p/q"`` (q > 0) into an exact rational.

    Decimal notation is rejected on purpose: a string like ``"0.1"`` suggests
    a measured float, and silently converting it would hide rounding from the
    caller.
    """
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise RationalParseError(f"not a rational: {text!r} (expected 'n' or 'p/q')")
    numerator = int(match.group(1))
    if match.group(2) is None:
        return Fraction(numerator)
    denominator = int(match.group(2))
    if denominator == 0:
        raise RationalParseError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Canonical textual form: ``"n"`` for integers, else ``"p/q"``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce an int, canonical string, or Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")
