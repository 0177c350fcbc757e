"""Van der Corput sequence prefixes via the radical-inverse function.

Indexing follows the convention x_1 = 0 and x_i = g_b(i - 1) for i >= 2.
Since g_b(0) = 0 this is simply ``x_i = g_b(i - 1)`` for every i >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .exactnum import DomainError, as_rational

__all__ = ["PointSet", "radical_inverse", "vdc_prefix", "digits_le"]


@dataclass(frozen=True)
class PointSet:
    """An immutable, ordered list of rationals in [0, 1)."""

    points: tuple[Fraction, ...]
    # (common denominator, numerators); filled eagerly by generators that
    # already know it, otherwise derived lazily.
    _scaled_hint: tuple[int, tuple[int, ...]] | None = field(
        default=None, repr=False, compare=False
    )
    # Scratch space for engines that keep derived arrays per point set.
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        pts = tuple(as_rational(p) for p in self.points)
        for i, p in enumerate(pts):
            if not 0 <= p.numerator < p.denominator:
                raise DomainError(f"point {i} = {p} is outside [0, 1)")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_iterable(cls, values: Iterable) -> "PointSet":
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    @cached_property
    def scaled(self) -> tuple[int, tuple[int, ...]]:
        """Return ``(D, nums)`` with ``points[i] == nums[i] / D`` exactly.

        ``D`` is the least common denominator unless a generator supplied
        its own (e.g. ``b**L`` for van der Corput points).
        """
        if self._scaled_hint is not None:
            return self._scaled_hint
        den = 1
        for p in self.points:
            den = math.lcm(den, p.denominator)
        nums = tuple(p.numerator * (den // p.denominator) for p in self.points)
        return den, nums

    def translated(self, t) -> "PointSet":
        """Shift every point by t modulo 1."""
        t = as_rational(t)
        return PointSet(tuple((p + t) % 1 for p in self.points))


def digits_le(n: int, b: int) -> list[int]:
    """Base-b digits of n, least significant first; ``[]`` for n = 0."""
    out = []
    while n:
        n, r = divmod(n, b)
        out.append(r)
    return out


def _check_base(b: int) -> None:
    if b < 2:
        raise DomainError(f"base must be >= 2, got {b}")


def radical_inverse(n: int, b: int = 2) -> Fraction:
    """Mirror the base-b digits of n across the radix point.

    >>> radical_inverse(6, 2)
    Fraction(3, 8)
    >>> radical_inverse(5, 3)
    Fraction(7, 9)
    """
    _check_base(b)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    num = 0
    scale = 1
    for e in digits_le(n, b):
        num = num * b + e
        scale *= b
    return Fraction(num, scale)


def vdc_prefix(N: int, b: int = 2) -> PointSet:
    """First N points of the base-b van der Corput sequence, starting at 0."""
    _check_base(b)
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    # All points are multiples of b^-L where L digits suffice for N - 1.
    L = len(digits_le(N - 1, b))
    D = b**L
    weights = [b ** (L - 1 - j) for j in range(L)]
    # Odometer over the digits of i; the reversed numerator is updated by
    # the carry chain instead of re-expanding i each step.
    digits = [0] * (L + 1)
    num = 0
    nums = [0]
    for _ in range(N - 1):
        j = 0
        while digits[j] == b - 1:
            digits[j] = 0
            num -= (b - 1) * weights[j]
            j += 1
        digits[j] += 1
        num += weights[j]
        nums.append(num)
    pts = tuple(Fraction(v, D) for v in nums)
    return PointSet(pts, _scaled_hint=(D, tuple(nums)))

