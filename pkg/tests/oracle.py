"""Literal brute-force reference values, independent of the package engines.

Everything here uses plain Fraction arithmetic straight from the definition:
radical inverse by digit reversal, circle distance via fractional parts, and
a double loop over ordered index pairs.
"""

from fractions import Fraction


def radical_inverse(n, b=2):
    x = Fraction(0)
    w = Fraction(1, b)
    while n:
        n, e = divmod(n, b)
        x += e * w
        w /= b
    return x


def vdc(N, b=2):
    return [radical_inverse(i, b) for i in range(N)]


def dist(x, y):
    d = (x - y) % 1
    return min(d, 1 - d)


def ordered_count(points, s):
    N = len(points)
    t = Fraction(s) / N
    return sum(
        1
        for k in range(N)
        for l in range(N)
        if k != l and dist(points[k], points[l]) <= t
    )


def F(points, s):
    return Fraction(ordered_count(points, s), len(points))


def cross_count(left, right, threshold):
    return sum(1 for x in left for y in right if dist(x, y) <= threshold)
