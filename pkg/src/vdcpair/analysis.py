"""Limit behaviour of F_N(s), Poisson comparison, and s-sweeps."""

from __future__ import annotations

import enum
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .closedform import closed_form_unchecked, f_closed_form
from .exactnum import DomainError, as_rational
from .paircount import pair_count_naive, pair_count_sorted
from .sequence import vdc_prefix

__all__ = [
    "Engine",
    "Status",
    "SubsequenceKind",
    "CorrelationRecord",
    "ProbeSeries",
    "BoundaryRecord",
    "poisson_reference",
    "limit_probe",
    "sweep",
    "evaluate",
    "validity_boundary",
]


class Engine(str, enum.Enum):
    CLOSED_FORM = "closed"
    SORTED = "sorted"
    NAIVE = "naive"


class Status(str, enum.Enum):
    OK = "ok"
    OUT_OF_DOMAIN = "out_of_domain"


class SubsequenceKind(str, enum.Enum):
    POWERS_OF_TWO = "powers_of_two"
    POWER_PLUS_ONE = "power_plus_one"
    POWER_PLUS_POWER = "power_plus_power"
    EXPLICIT_LIST = "explicit_list"


@dataclass(frozen=True)
class CorrelationRecord:
    n: int
    s: Fraction
    f: Fraction | None
    poisson: Fraction
    engine: Engine
    elapsed_nanos: int
    status: Status = Status.OK
    message: str = ""


@dataclass(frozen=True)
class ProbeSeries:
    s: Fraction
    kind: SubsequenceKind
    entries: tuple[tuple[int, Fraction], ...]
    k: int | None = None

    @property
    def n_values(self) -> list[int]:
        return [n for n, _ in self.entries]

    @property
    def f_values(self) -> list[Fraction]:
        return [f for _, f in self.entries]


def poisson_reference(s) -> Fraction:
    """The Poissonian limit 2s."""
    s = as_rational(s)
    if s < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    return 2 * s


def _probe_ns(kind, m_min, m_max, k, n_values):
    if kind is SubsequenceKind.EXPLICIT_LIST:
        if n_values is None:
            raise DomainError("explicit_list needs n_values")
        ns = list(n_values)
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise DomainError("n_values must be strictly increasing")
        return ns
    if not 1 <= m_min <= m_max <= 62:
        raise DomainError(f"need 1 <= m_min <= m_max <= 62, got {m_min}, {m_max}")
    Ms = range(m_min, m_max + 1)
    if kind is SubsequenceKind.POWERS_OF_TWO:
        return [1 << M for M in Ms]
    if kind is SubsequenceKind.POWER_PLUS_ONE:
        return [(1 << M) + 1 for M in Ms]
    if kind is SubsequenceKind.POWER_PLUS_POWER:
        if k is None or k < 0:
            raise DomainError("power_plus_power needs k >= 0")
        if k >= m_min:
            raise DomainError("power_plus_power needs k < m_min")
        return [(1 << M) + (1 << k) for M in Ms]
    raise DomainError(f"unknown subsequence kind {kind!r}")


def limit_probe(
    s,
    kind: SubsequenceKind | str,
    m_min: int = 1,
    m_max: int = 20,
    *,
    k: int | None = None,
    n_values: Sequence[int] | None = None,
) -> ProbeSeries:
    """Evaluate F_N(s) along N = 2^M, 2^M + 1, 2^M + 2^k, or a given list."""
    s = as_rational(s)
    if s < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    kind = SubsequenceKind(kind)
    ns = _probe_ns(kind, m_min, m_max, k, n_values)
    bad = [n for n in ns if 2 * s >= n]
    if bad:
        raise DomainError(f"s={s} is not below N/2 for N={bad[0]}")
    entries = tuple((n, f_closed_form(n, s)) for n in ns)
    return ProbeSeries(s=s, kind=kind, entries=entries, k=k)


def evaluate(n: int, s, engine: Engine | str, points=None) -> CorrelationRecord:
    """One timed F_N(s) evaluation; domain errors become a failed record."""
    engine = Engine(engine)
    s = as_rational(s)
    t0 = time.perf_counter_ns()
    try:
        if engine is Engine.CLOSED_FORM:
            if points is not None:
                raise DomainError("closed form only applies to the base-2 van der Corput sequence")
            f = f_closed_form(n, s)
        else:
            pts = points if points is not None else vdc_prefix(n, 2)
            count = pair_count_sorted if engine is Engine.SORTED else pair_count_naive
            f = count(pts, s).f_value
    except DomainError as exc:
        elapsed = time.perf_counter_ns() - t0
        return CorrelationRecord(
            n, s, None, 2 * s, engine, elapsed, Status.OUT_OF_DOMAIN, str(exc)
        )
    elapsed = time.perf_counter_ns() - t0
    return CorrelationRecord(n, s, f, 2 * s, engine, elapsed)


def sweep(
    N: int,
    s_values: Iterable,
    engine: Engine | str = Engine.CLOSED_FORM,
    *,
    points=None,
    workers: int = 1,
) -> list[CorrelationRecord]:
    """Evaluate F_N over a grid of s; output order follows the grid."""
    engine = Engine(engine)
    s_values = [as_rational(s) for s in s_values]
    if any(s < 0 for s in s_values):
        raise DomainError("all s must be >= 0")
    if engine is not Engine.CLOSED_FORM and points is None:
        points = vdc_prefix(N, 2)
    if workers <= 1:
        return [evaluate(N, s, engine, points) for s in s_values]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda s: evaluate(N, s, engine, points), s_values))


@dataclass(frozen=True)
class BoundaryRecord:
    n: int
    checked: int
    mismatches_below_half: int
    first_mismatch: Fraction | None  # smallest s on the grid where the formula is wrong


def validity_boundary(n_max: int, density: int = 4, n_min: int = 1) -> list[BoundaryRecord]:
    """Compare the unguarded formula with direct counting on s in [0, N).

    The grid is {j/density : 0 <= j < density*N}.
    """
    out = []
    for n in range(n_min, n_max + 1):
        pts = vdc_prefix(n, 2)
        first = None
        below = 0
        checked = 0
        for j in range(density * n):
            s = Fraction(j, density)
            truth = pair_count_sorted(pts, s).f_value
            # the formula gives 2*floor(s) at N = 1, while there are no pairs
            formula = closed_form_unchecked(n, s)
            checked += 1
            if formula != truth:
                if 2 * s < n:
                    below += 1
                if first is None:
                    first = s
        out.append(BoundaryRecord(n, checked, below, first))
    return out
