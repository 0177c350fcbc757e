"""Backend selection for the pair-counting kernels.

The compiled extension ``_ckernels`` is used when it was built and the
integer grid fits in 64 bits; otherwise the pure-Python kernels run. Set
``VDCPAIR_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from array import array

from . import _kernels_py

_ckernels = None
if not os.environ.get("VDCPAIR_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# 3*D and every shifted numerator must stay below 2**63.
_I64_LIMIT = 1 << 61


def _compiled_ok(D: int, T: int) -> bool:
    return _ckernels is not None and D < _I64_LIMIT and 0 <= T <= D


def as_i64(values) -> array:
    return values if isinstance(values, array) else array("q", values)


def count_naive(nums, D: int, T: int, backend: str | None = None) -> int:
    """Ordered pairs i != j with circle distance (in units of 1/D) <= T."""
    T = min(T, D)
    if _use_compiled(backend, D, T):
        return _ckernels.count_naive(as_i64(nums), D, T)
    return _kernels_py.count_naive(nums, D, T)


def count_cross(left, right, D: int, T: int, backend: str | None = None) -> int:
    """Pairs (i, j), i from ``left`` and j from ``right``, within T."""
    T = min(T, D)
    if _use_compiled(backend, D, T):
        return _ckernels.count_cross(as_i64(left), as_i64(right), D, T)
    return _kernels_py.count_cross(left, right, D, T)


def count_sorted(sorted_nums, D: int, T: int, backend: str | None = None) -> int:
    """Same count as :func:`count_naive` from ascending numerators; needs 2T < D."""
    if 2 * T >= D:
        raise ValueError("sliding-window kernel requires 2*T < D")
    if _use_compiled(backend, D, T):
        return _ckernels.count_sorted(as_i64(sorted_nums), D, T)
    return _kernels_py.count_sorted(sorted_nums, D, T)


def _use_compiled(backend, D, T) -> bool:
    if backend == "python":
        return False
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        if not (D < _I64_LIMIT and 0 <= T <= D):
            raise OverflowError("integer grid does not fit in 64 bits")
        return True
    if backend is not None:
        raise ValueError(f"unknown backend {backend!r}")
    return _compiled_ok(D, T)
