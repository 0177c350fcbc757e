# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled pair-counting kernels (int64 numerators over a common denominator).

Same contracts as ``_kernels_py``; callers guarantee every numerator and
``3*D`` fit in a signed 64-bit integer.
"""

ctypedef long long i64


cdef inline i64 _circ(i64 a, i64 b, i64 D) nogil:
    cdef i64 d = a - b
    if d < 0:
        d = -d
    if D - d < d:
        d = D - d
    return d


def count_naive(const i64[::1] nums, i64 D, i64 T):
    cdef Py_ssize_t n = nums.shape[0]
    cdef Py_ssize_t i, j
    cdef i64 count = 0
    with nogil:
        for i in range(n):
            for j in range(n):
                if i != j and _circ(nums[i], nums[j], D) <= T:
                    count += 1
    return count


def count_cross(const i64[::1] left, const i64[::1] right, i64 D, i64 T):
    cdef Py_ssize_t i, j
    cdef i64 count = 0
    with nogil:
        for i in range(left.shape[0]):
            for j in range(right.shape[0]):
                if _circ(left[i], right[j], D) <= T:
                    count += 1
    return count


cdef inline i64 _ext(const i64[::1] nums, Py_ssize_t k, Py_ssize_t n, i64 D) nogil:
    # k-th element of [nums - D, nums, nums + D] without materialising it
    if k < n:
        return nums[k] - D
    if k < 2 * n:
        return nums[k - n]
    return nums[k - 2 * n] + D


def count_sorted(const i64[::1] nums, i64 D, i64 T):
    cdef Py_ssize_t n = nums.shape[0]
    cdef Py_ssize_t i, lo = 0, hi = 0
    cdef i64 a, total = 0
    if n < 2:
        return 0
    with nogil:
        for i in range(n):
            a = nums[i]
            while _ext(nums, lo, n, D) < a - T:
                lo += 1
            if hi < lo:
                hi = lo
            while hi < 3 * n and _ext(nums, hi, n, D) <= a + T:
                hi += 1
            total += hi - lo - 1
    return total
