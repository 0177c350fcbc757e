"""Pair correlation statistics of the van der Corput sequence.

Three ways to compute F_N(s) for the base-2 sequence: all-pairs counting,
sorted sliding-window counting, and an O(log N) closed form in the binary
digits of N. All values are exact rationals.
"""

from .analysis import (
    CorrelationRecord,
    Engine,
    ProbeSeries,
    SubsequenceKind,
    limit_probe,
    poisson_reference,
    sweep,
    validity_boundary,
)
from .closedform import (
    BinaryDigits,
    ClosedFormDomainError,
    DecompositionCounts,
    binary_digits,
    count_a,
    count_b,
    decomposition_counts,
    f_closed_form,
)
from .exactnum import (
    DomainError,
    Rational,
    circle_distance,
    format_rational,
    parse_rational,
    rat_ceil,
    rat_floor,
)
from .kernels import BACKEND
from .paircount import PairCountResult, pair_count_naive, pair_count_sorted
from .sequence import PointSet, radical_inverse, vdc_prefix

__version__ = "0.1.0"
