"""Exact rational helpers.

Values are :class:`fractions.Fraction` instances, which are always kept in
lowest terms with a positive denominator. This module adds the handful of
operations the pair-correlation code needs on top of them: floor/ceil,
fractional part, circle distance, and a strict text parser.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Rational",
    "DomainError",
    "as_rational",
    "parse_rational",
    "format_rational",
    "rat_floor",
    "rat_ceil",
    "frac_part",
    "circle_distance",
]

Rational = Fraction

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


_RATIO_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")
_DECIMAL_RE = re.compile(r"^\s*[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer, or a decimal literal exactly.

    Decimal literals such as ``"1.3"`` become ``13/10``; no binary floating
    point is involved. ``nan``/``inf`` tokens are rejected.

    >>> parse_rational("6/4")
    Fraction(3, 2)
    >>> parse_rational("1.3")
    Fraction(13, 10)
    """
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    m = _RATIO_RE.match(text)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)
    if _DECIMAL_RE.match(text):
        return Fraction(text.strip())
    raise ValueError(f"not an exact rational literal: {text!r}")


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings to a Fraction. Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} exactly to a rational")


def format_rational(x: Fraction) -> str:
    """Canonical ``p/q`` text, with ``/q`` omitted for integers."""
    return str(as_rational(x))


def rat_floor(x: Fraction) -> int:
    """Greatest integer <= x."""
    return x.numerator // x.denominator


def rat_ceil(x: Fraction) -> int:
    """Least integer >= x."""
    return -((-x.numerator) // x.denominator)


def frac_part(x: Fraction) -> Fraction:
    """``x - floor(x)``, always in [0, 1)."""
    return Fraction(x.numerator % x.denominator, x.denominator)


def _check_unit(x: Fraction, name: str) -> None:
    if not (ZERO <= x < ONE):
        raise DomainError(f"{name}={x} is outside [0, 1)")


def circle_distance(x, y) -> Fraction:
    """Distance between x and y on the circle R/Z, for x, y in [0, 1).

    The result is ``min({x - y}, 1 - {x - y})`` and lies in [0, 1/2].
    """
    x = as_rational(x)
    y = as_rational(y)
    _check_unit(x, "x")
    _check_unit(y, "y")
    d = frac_part(x - y)
    return min(d, ONE - d)
