"""Pure-Python pair-counting kernels.

Points arrive as integer numerators over a common denominator ``D`` and the
distance threshold as an integer ``T``: a pair is close iff its circle
distance, measured in units of 1/D, is at most T. Python ints are unbounded,
so these kernels accept any D.
"""

from bisect import bisect_left, bisect_right


def count_naive(nums, D, T):
    n = len(nums)
    count = 0
    for i in range(n):
        a = nums[i]
        for j in range(n):
            if i == j:
                continue
            d = a - nums[j]
            if d < 0:
                d = -d
            if D - d < d:
                d = D - d
            if d <= T:
                count += 1
    return count


def count_cross(left, right, D, T):
    count = 0
    for a in left:
        for b in right:
            d = a - b
            if d < 0:
                d = -d
            if D - d < d:
                d = D - d
            if d <= T:
                count += 1
    return count


def count_sorted(nums, D, T):
    """Count with a sliding window over three copies of the sorted points.

    ``nums`` must be sorted ascending and ``2*T < D`` so that a window of
    width 2T meets at most one copy of each point.
    """
    n = len(nums)
    if n < 2:
        return 0
    ext = [v - D for v in nums] + list(nums) + [v + D for v in nums]
    lo = bisect_left(ext, nums[0] - T)
    hi = bisect_right(ext, nums[0] + T)
    total = 0
    for i in range(n):
        a = nums[i]
        while ext[lo] < a - T:
            lo += 1
        while hi < 3 * n and ext[hi] <= a + T:
            hi += 1
        total += hi - lo - 1
    return total
