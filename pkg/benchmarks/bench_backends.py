#!/usr/bin/env python3
"""Compiled vs pure-Python pair-counting kernels, plus the closed form.

    python benchmarks/bench_backends.py [--sizes 256,1024,4096] [--s 13/10]

Prints CSV: kernel,backend,n,median_nanos,count
"""

import argparse
import csv
import statistics
import sys
import time

from vdcpair import kernels
from vdcpair.closedform import f_closed_form
from vdcpair.exactnum import parse_rational
from vdcpair.paircount import integer_threshold
from vdcpair.sequence import vdc_prefix


def median_ns(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="256,1024,4096")
    ap.add_argument("--s", default="13/10")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--naive-max", type=int, default=4096,
                    help="skip the pure-Python naive kernel above this N")
    args = ap.parse_args(argv)
    s = parse_rational(args.s)
    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["kernel", "backend", "n", "median_nanos", "count"])
    for n in (int(x) for x in args.sizes.split(",")):
        D, nums = vdc_prefix(n, 2).scaled
        T = integer_threshold(s, n, D)
        srt = kernels.as_i64(sorted(nums))
        arr = kernels.as_i64(nums)
        for b in backends:
            if not (b == "python" and n > args.naive_max):
                c = kernels.count_naive(arr, D, T, backend=b)
                w.writerow(["naive", b, n, median_ns(lambda: kernels.count_naive(arr, D, T, backend=b), args.repeat), c])
            c = kernels.count_sorted(srt, D, T, backend=b)
            w.writerow(["sorted", b, n, median_ns(lambda: kernels.count_sorted(srt, D, T, backend=b), args.repeat), c])
        c = f_closed_form(n, s) * n
        w.writerow(["closed", "python", n, median_ns(lambda: f_closed_form(n, s), args.repeat), c])


if __name__ == "__main__":
    main()
