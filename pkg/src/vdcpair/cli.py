"""Command-line front end: ``vdcpair {gen,eval,sweep,verify,bench}``.

Exit codes: 0 ok, 1 I/O error, 2 usage error, 3 domain error,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import Callable

from .analysis import Engine, Status, evaluate, sweep
from .closedform import f_closed_form
from .exactnum import DomainError, format_rational, parse_rational
from .paircount import pair_count_naive, pair_count_sorted
from .sequence import PointSet, vdc_prefix

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3, 4

NAIVE_LIMIT = 10**5

_DEC = Context(prec=12, rounding=ROUND_HALF_EVEN)


class UsageError(Exception):
    pass


class PointsFileError(ValueError):
    def __init__(self, lineno: int, text: str, reason: str):
        super().__init__(f"line {lineno}: cannot parse {text!r}: {reason}")
        self.lineno = lineno


def to_decimal(x: Fraction) -> str:
    """12 significant digits, round-half-even."""
    return str(_DEC.divide(Decimal(x.numerator), Decimal(x.denominator)))


def ingest_points(path) -> PointSet:
    """Read one value per line ("p/q" or decimal), reduced mod 1.

    Blank lines and ``#`` comments are skipped.
    """
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                values.append(parse_rational(text) % 1)
            except ValueError as exc:
                raise PointsFileError(lineno, text, str(exc)) from None
    return PointSet(tuple(values))


# -- argument types ---------------------------------------------------------

def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_arg(text: str) -> int:
    try:
        v = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if v.denominator != 1:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    return int(v)


def _int_list_arg(text: str) -> list[int]:
    return [_int_arg(t) for t in text.split(",") if t.strip()]


def _engine_list_arg(text: str) -> list[Engine]:
    try:
        return [Engine(t.strip()) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vdcpair", description=__doc__.splitlines()[0])
    p.set_defaults(_parser=p)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="print the first N van der Corput points")
    g.set_defaults(_parser=g)
    g.add_argument("--n", type=_int_arg, required=True)
    g.add_argument("--base", type=_int_arg, default=2)
    g.add_argument("--out", default=None, help="output file (default: stdout)")

    e = sub.add_parser("eval", help="evaluate F_N(s) with one engine")
    e.set_defaults(_parser=e)
    e.add_argument("--n", type=_int_arg, default=None)
    e.add_argument("--s", type=_rational_arg, required=True)
    e.add_argument("--engine", type=Engine, choices=list(Engine), default=Engine.CLOSED_FORM)
    e.add_argument("--points", default=None, help="points file (sorted/naive engines only)")
    e.add_argument("--out", default=None)

    w = sub.add_parser("sweep", help="evaluate F_N over an s-grid, CSV out")
    w.set_defaults(_parser=w)
    w.add_argument("--n", type=_int_arg, required=True)
    w.add_argument("--s-from", type=_rational_arg, required=True)
    w.add_argument("--s-to", type=_rational_arg, required=True)
    w.add_argument("--steps", type=_int_arg, required=True)
    w.add_argument("--engine", type=Engine, choices=list(Engine), default=Engine.CLOSED_FORM)
    w.add_argument("--workers", type=_int_arg, default=1)
    w.add_argument("--out", default=None)

    v = sub.add_parser("verify", help="closed form vs. both oracles for all N <= n-max")
    v.set_defaults(_parser=v)
    v.add_argument("--n-max", type=_int_arg, required=True)
    v.add_argument("--density", type=_int_arg, default=4,
                   help="s-grid is {j/density} below N/2 (default 4)")

    b = sub.add_parser("bench", help="median engine timings, CSV out")
    b.set_defaults(_parser=b)
    b.add_argument("--n", type=_int_list_arg, required=True, help="comma-separated N values")
    b.add_argument("--s", type=_rational_arg, required=True)
    b.add_argument("--engines", type=_engine_list_arg, default=[Engine.CLOSED_FORM])
    b.add_argument("--repeat", type=_int_arg, default=5)
    b.add_argument("--force", action="store_true", help=f"allow naive engine above N={NAIVE_LIMIT}")
    b.add_argument("--out", default=None)
    return p


# -- subcommands -------------------------------------------------------------

def _open_out(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def cmd_gen(args) -> int:
    if args.n < 1 or args.base < 2:
        raise UsageError("gen: need --n >= 1 and --base >= 2")
    pts = vdc_prefix(args.n, args.base)
    fh, close = _open_out(args.out)
    try:
        fh.write("".join(format_rational(x) + "\n" for x in pts))
    finally:
        if close:
            fh.close()
    return EXIT_OK


EVAL_HEADER = ["n", "s", "f_exact", "f_decimal", "poisson_decimal", "engine", "elapsed_nanos"]


def cmd_eval(args) -> int:
    points = None
    if args.points is not None:
        if args.engine is Engine.CLOSED_FORM:
            raise UsageError("eval: --points needs --engine sorted or naive")
        points = ingest_points(args.points)
        n = len(points) if args.n is None else args.n
        if n != len(points):
            raise UsageError(f"eval: --n {n} disagrees with {len(points)} points in file")
    else:
        if args.n is None:
            raise UsageError("eval: --n is required without --points")
        n = args.n
    if n < 1:
        raise UsageError("eval: need --n >= 1")
    if args.s < 0:
        raise UsageError("eval: need --s >= 0")
    rec = evaluate(n, args.s, args.engine, points)
    if rec.status is not Status.OK:
        if args.engine is Engine.CLOSED_FORM:
            print("s outside validated closed-form domain (s >= N/2); use --engine sorted or naive",
                  file=sys.stderr)
        else:
            print(rec.message, file=sys.stderr)
        return EXIT_DOMAIN
    fh, close = _open_out(args.out)
    try:
        w = _writer(fh)
        w.writerow(EVAL_HEADER)
        w.writerow([rec.n, format_rational(rec.s), format_rational(rec.f), to_decimal(rec.f),
                    to_decimal(rec.poisson), rec.engine.value, rec.elapsed_nanos])
    finally:
        if close:
            fh.close()
    return EXIT_OK


SWEEP_HEADER = ["n", "s", "f_exact", "f_decimal", "poisson", "engine", "status", "elapsed_nanos"]


def cmd_sweep(args) -> int:
    if args.n < 1 or args.steps < 1 or args.s_from > args.s_to or args.s_from < 0:
        raise UsageError("sweep: need --n >= 1, --steps >= 1, 0 <= --s-from <= --s-to")
    width = args.s_to - args.s_from
    grid = [args.s_from + j * width / args.steps for j in range(args.steps + 1)]
    records = sweep(args.n, grid, args.engine, workers=args.workers)
    fh, close = _open_out(args.out)
    try:
        w = _writer(fh)
        w.writerow(SWEEP_HEADER)
        for r in records:
            ok = r.status is Status.OK
            w.writerow([r.n, format_rational(r.s),
                        format_rational(r.f) if ok else "",
                        to_decimal(r.f) if ok else "",
                        to_decimal(r.poisson), r.engine.value, r.status.value, r.elapsed_nanos])
    finally:
        if close:
            fh.close()
    return EXIT_OK if any(r.status is Status.OK for r in records) else EXIT_DOMAIN


def run_verification(
    n_max: int,
    density: int = 4,
    closed: Callable[[int, Fraction], Fraction] = f_closed_form,
    naive_limit: int = 64,
):
    """Compare the closed form with the sorted oracle on every (N, s) with
    N <= n_max and s = j/density < N/2; the naive oracle joins for
    N <= naive_limit. Returns ``(checks, first_mismatch_or_None)``.
    """
    checks = 0
    for n in range(1, n_max + 1):
        pts = vdc_prefix(n, 2)
        for j in range(density * n):
            s = Fraction(j, density)
            if 2 * s >= n:
                break
            got = closed(n, s)
            ref = pair_count_sorted(pts, s).f_value
            if n <= naive_limit:
                naive = pair_count_naive(pts, s).f_value
                if naive != ref:
                    return checks, (n, s, "sorted", ref, "naive", naive)
            checks += 1
            if got != ref:
                return checks, (n, s, "closed", got, "sorted", ref)
    return checks, None


def cmd_verify(args) -> int:
    if args.n_max < 2 or args.density < 1:
        raise UsageError("verify: need --n-max >= 2 and --density >= 1")
    checks, bad = run_verification(args.n_max, args.density)
    if bad is not None:
        n, s, name_a, a, name_b, b = bad
        print(f"MISMATCH after {checks} checks: N={n} s={format_rational(s)} "
              f"{name_a}={format_rational(a)} {name_b}={format_rational(b)}")
        return EXIT_MISMATCH
    print(f"{checks} checks passed (N <= {args.n_max}, s-grid 1/{args.density})")
    return EXIT_OK


BENCH_HEADER = ["engine", "n", "s", "elapsed_nanos", "f_decimal"]


def bench_one(engine: Engine, n: int, s: Fraction, repeat: int = 5, points=None):
    """Median wall time over ``repeat`` runs after one discarded warm-up.

    Point generation for the oracle engines is excluded from the timing.
    """
    if engine is Engine.CLOSED_FORM:
        def run():
            return f_closed_form(n, s)
    else:
        pts = points if points is not None else vdc_prefix(n, 2)
        count = pair_count_sorted if engine is Engine.SORTED else pair_count_naive

        def run():
            return count(pts, s).f_value
    f = run()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        f = run()
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times)), f


def cmd_bench(args) -> int:
    if args.repeat < 1 or not args.n or any(n < 1 for n in args.n):
        raise UsageError("bench: need --n values >= 1 and --repeat >= 1")
    if Engine.NAIVE in args.engines and not args.force:
        too_big = [n for n in args.n if n > NAIVE_LIMIT]
        if too_big:
            raise UsageError(f"bench: naive engine refused for N={too_big[0]} > {NAIVE_LIMIT}"
                             " (use --force)")
    rows = []
    for n in args.n:
        pts = None
        if any(e is not Engine.CLOSED_FORM for e in args.engines):
            pts = vdc_prefix(n, 2)
        for engine in args.engines:
            try:
                nanos, f = bench_one(engine, n, args.s, args.repeat, pts)
            except DomainError as exc:
                print(f"{engine.value} N={n}: {exc}", file=sys.stderr)
                return EXIT_DOMAIN
            rows.append([engine.value, n, format_rational(args.s), nanos, to_decimal(f)])
    fh, close = _open_out(args.out)
    try:
        w = _writer(fh)
        w.writerow(BENCH_HEADER)
        w.writerows(rows)
    finally:
        if close:
            fh.close()
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "eval": cmd_eval,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = None
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        if args is not None:  # parse errors already printed usage
            args._parser.print_usage(sys.stderr)
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except PointsFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
