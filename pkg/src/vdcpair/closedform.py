"""Closed-form pair correlation of the base-2 van der Corput sequence.

With N = sum_k e_k 2^k (e_M = 1) the value is

    F_N(s) = (1/N) * sum_k e_k * ( floor(s 2^k / N)
                 + sum_{l > k} e_l * 2 * ceil(floor(s 2^(l+1) / N) / 2) ) * 2^(k+1)

which needs only the binary digits of N, not the points themselves. The
formula agrees with direct counting for 0 <= s < N/2 (checked exhaustively
for N <= 512); at s >= N/2 the true count saturates at N(N-1) while the
formula keeps growing, so evaluation there is refused.

The block decomposition used to derive the formula is also exposed: the
first 2^M points (block A), the remaining N - 2^M points (block C), and
pairs straddling the two (block B).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .exactnum import DomainError, as_rational
from .paircount import integer_threshold
from .sequence import vdc_prefix

__all__ = [
    "BinaryDigits",
    "DecompositionCounts",
    "binary_digits",
    "count_a",
    "count_b",
    "f_closed_form",
    "closed_form_unchecked",
    "decomposition_counts",
    "ClosedFormDomainError",
]


class ClosedFormDomainError(DomainError):
    """s lies outside the range where the closed form is valid."""


@dataclass(frozen=True)
class BinaryDigits:
    digits: tuple[int, ...]  # e_0 first

    @property
    def m(self) -> int:
        return len(self.digits) - 1

    def value(self) -> int:
        return sum(e << k for k, e in enumerate(self.digits))


def binary_digits(N: int) -> BinaryDigits:
    """Binary expansion of N >= 1, least significant digit first."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    return BinaryDigits(tuple((N >> k) & 1 for k in range(N.bit_length())))


def _floor_scaled(s: Fraction, k: int, N: int) -> int:
    # floor(s * 2^k / N)
    return (s.numerator << k) // (s.denominator * N)


def count_a(s, k: int, N: int) -> int:
    """Ordered pairs among 2^k equispaced points within distance s/N.

    Valid while the window does not wrap around the circle.
    """
    s = as_rational(s)
    return _floor_scaled(s, k, N) << (k + 1)


def count_b(s, k: int, N_eff: int, block2_size: int) -> int:
    """Ordered cross pairs between 2^k equispaced points and a block of
    ``block2_size`` points at the odd multiples of 2^-(k+1)."""
    s = as_rational(s)
    f = _floor_scaled(s, k + 1, N_eff)
    return ((f + 1) // 2) * block2_size * 2


def closed_form_unchecked(N: int, s, upper: int | None = None) -> Fraction:
    """Evaluate the closed form with no domain guard.

    ``upper`` overrides the last index of the inner sum (default M). Digits
    beyond M are zero, so any ``upper >= M`` gives the same value.
    """
    s = as_rational(s)
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    top = N.bit_length() - 1
    if upper is not None:
        top = max(top, upper)
    den = s.denominator * N
    snum = s.numerator
    total = 0
    # inner sum over l > k, accumulated from the top digit down
    tail = 0
    for k in range(top, -1, -1):
        if (N >> k) & 1:
            total += ((snum << k) // den + tail) << (k + 1)
            tail += 2 * ((((snum << (k + 1)) // den) + 1) // 2)
    return Fraction(total, N)


def f_closed_form(N: int, s) -> Fraction:
    """F_N(s) for the base-2 van der Corput sequence, 0 <= s < N/2."""
    s = as_rational(s)
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if s.numerator < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    if N == 1:
        return Fraction(0)
    if 2 * s.numerator >= N * s.denominator:
        raise ClosedFormDomainError(
            f"s={s} outside validated closed-form domain s < N/2 = {Fraction(N, 2)};"
            " use the naive or sorted engine"
        )
    return closed_form_unchecked(N, s)


@dataclass(frozen=True)
class DecompositionCounts:
    a_count: int
    b_count: int
    c_count: int
    m: int

    def total(self) -> int:
        return self.a_count + 2 * self.b_count + self.c_count


def decomposition_counts(N: int, s) -> DecompositionCounts:
    """Enumerate the three index blocks of the first N points directly.

    A: pairs inside indices 1..2^M; B: pairs (i, j) with i <= 2^M < j, each
    counted once; C: pairs inside indices 2^M+1..N. No closed-form pieces
    are used, so the result can witness :func:`count_a` and :func:`count_b`.
    """
    s = as_rational(s)
    if N < 2:
        raise DomainError(f"N must be >= 2, got {N}")
    if s < 0 or 2 * s >= N:
        raise ClosedFormDomainError(f"need 0 <= s < N/2, got s={s}, N={N}")
    M = N.bit_length() - 1
    D, nums = vdc_prefix(N, 2).scaled
    T = integer_threshold(s, N, D)
    first, second = nums[: 1 << M], nums[1 << M :]
    return DecompositionCounts(
        a_count=kernels.count_naive(first, D, T),
        b_count=kernels.count_cross(first, second, D, T),
        c_count=kernels.count_naive(second, D, T),
        m=M,
    )
