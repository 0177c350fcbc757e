"""Direct evaluation of the empiric pair correlation function.

For points x_1..x_N in [0, 1) and s >= 0,

    F_N(s) = #{(k, l) : k != l, ||x_k - x_l|| <= s/N} / N

counted over ordered pairs with an inclusive threshold. Two engines are
provided: an all-pairs enumeration and a sort-then-slide counter. Both work
on the exact integer grid ``nums / D`` of the point set, where the rational
test ``d/D <= s/N`` is equivalent to ``d <= floor(s*D/N)`` for integer d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .exactnum import DomainError, as_rational
from .sequence import PointSet

__all__ = [
    "PairCountResult",
    "pair_count_naive",
    "pair_count_sorted",
    "integer_threshold",
]


@dataclass(frozen=True)
class PairCountResult:
    ordered_pair_count: int
    f_value: Fraction
    n: int
    s: Fraction

    def __post_init__(self):
        if self.f_value * self.n != self.ordered_pair_count:
            raise ValueError("f_value * n must equal ordered_pair_count")
        if not 0 <= self.ordered_pair_count <= self.n * (self.n - 1):
            raise ValueError("ordered_pair_count out of range")


def integer_threshold(s: Fraction, n: int, D: int) -> int:
    """Largest integer T with T/D <= s/n."""
    return (s.numerator * D) // (s.denominator * n)


def _check(pts: PointSet, s) -> Fraction:
    s = as_rational(s)
    if s < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    if len(pts) == 0:
        raise DomainError("point set is empty")
    return s


def _result(count: int, n: int, s: Fraction) -> PairCountResult:
    return PairCountResult(count, Fraction(count, n), n, s)


def _i64_view(pts: PointSet, key: str, values):
    # cache the int64 buffer so repeated thresholds skip the conversion
    D = pts.scaled[0]
    if D >= kernels._I64_LIMIT:
        return values
    arr = pts.cache.get(key)
    if arr is None:
        arr = pts.cache[key] = kernels.as_i64(values)
    return arr


def pair_count_naive(pts: PointSet, s, *, backend: str | None = None) -> PairCountResult:
    """Count close ordered pairs by checking all N(N-1) of them."""
    s = _check(pts, s)
    n = len(pts)
    D, nums = pts.scaled
    T = integer_threshold(s, n, D)
    count = kernels.count_naive(_i64_view(pts, "nums", nums), D, T, backend=backend)
    return _result(count, n, s)


def pair_count_sorted(pts: PointSet, s, *, backend: str | None = None) -> PairCountResult:
    """Count close ordered pairs in O(N log N) via a wrapping sliding window."""
    s = _check(pts, s)
    n = len(pts)
    D, nums = pts.scaled
    T = integer_threshold(s, n, D)
    if 2 * T >= D:
        # every circle distance is at most D/2
        return _result(n * (n - 1), n, s)
    srt = pts.cache.get("sorted")
    if srt is None:
        srt = pts.cache["sorted"] = tuple(sorted(nums))
    count = kernels.count_sorted(_i64_view(pts, "sorted_i64", srt), D, T, backend=backend)
    return _result(count, n, s)
