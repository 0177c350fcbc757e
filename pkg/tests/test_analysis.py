from fractions import Fraction

import pytest

import oracle
from vdcpair.analysis import (
    Engine,
    Status,
    SubsequenceKind,
    limit_probe,
    poisson_reference,
    sweep,
    validity_boundary,
)
from vdcpair.exactnum import DomainError


@pytest.mark.parametrize("s, ref", [(0, 0), (Fraction(3, 4), Fraction(3, 2)), (1, 2)])
def test_poisson_reference(s, ref):
    assert poisson_reference(s) == ref


def test_poisson_reference_negative():
    with pytest.raises(DomainError):
        poisson_reference(Fraction(-1, 8))


def test_probe_half_powers_of_two():
    ps = limit_probe(Fraction(1, 2), "powers_of_two", 2, 20)
    assert ps.n_values == [2**M for M in range(2, 21)]
    assert set(ps.f_values) == {0}


def test_probe_one_powers_of_two():
    ps = limit_probe(1, SubsequenceKind.POWERS_OF_TWO, 2, 20)
    assert set(ps.f_values) == {2}


def test_probe_one_power_plus_one():
    ps = limit_probe(1, SubsequenceKind.POWER_PLUS_ONE, 3, 20)
    assert ps.entries == tuple((2**M + 1, Fraction(4, 2**M + 1)) for M in range(3, 21))
    for M in (3, 4, 5):
        N = 2**M + 1
        assert oracle.F(oracle.vdc(N), 1) == Fraction(4, N)
    fs = ps.f_values
    assert all(b < a for a, b in zip(fs, fs[1:]))


def test_probe_power_plus_power_and_explicit():
    ps = limit_probe(Fraction(3, 4), "power_plus_power", 3, 10, k=2)
    assert ps.n_values == [2**M + 4 for M in range(3, 11)]
    ps = limit_probe(1, "explicit_list", n_values=[3, 5, 9])
    assert ps.f_values == [Fraction(4, 3), Fraction(4, 5), Fraction(4, 9)]
    with pytest.raises(DomainError):
        limit_probe(1, "explicit_list", n_values=[5, 3])


def test_probe_domain():
    with pytest.raises(DomainError):
        limit_probe(1, "powers_of_two", 1, 3)  # N = 2 has s >= N/2
    with pytest.raises(DomainError):
        limit_probe(1, "powers_of_two", 2, 63)
    with pytest.raises(DomainError):
        limit_probe(1, "power_plus_power", 3, 5)


def test_sweep_examples():
    recs = sweep(4, [0, Fraction(1, 2), 1], "closed")
    assert [r.f for r in recs] == [0, 0, 2]
    assert [r.s for r in recs] == [0, Fraction(1, 2), 1]
    assert all(r.poisson == 2 * r.s and r.elapsed_nanos >= 0 for r in recs)
    assert sweep(3, [1], Engine.NAIVE)[0].f == Fraction(4, 3)
    assert sweep(1, [5], "naive")[0].f == 0


def test_sweep_marks_out_of_domain():
    recs = sweep(3, [0, 1, 2, 3], "closed")
    assert [r.status for r in recs] == [Status.OK, Status.OK, Status.OUT_OF_DOMAIN, Status.OUT_OF_DOMAIN]
    assert recs[2].f is None
    # oracles have no such restriction
    assert all(r.status is Status.OK for r in sweep(3, [0, 1, 2, 3], "sorted"))


def test_sweep_parallel_keeps_order():
    grid = [Fraction(j, 8) for j in range(40, -1, -1)]
    a = sweep(64, grid, "sorted", workers=4)
    b = sweep(64, grid, "closed")
    assert [r.s for r in a] == grid
    assert [r.f for r in a] == [r.f for r in b]


def test_validity_boundary_small():
    recs = validity_boundary(24)
    for r in recs:
        assert r.mismatches_below_half == 0
        assert r.checked == 4 * r.n
        if r.n >= 2:
            assert r.first_mismatch == Fraction(r.n, 2)
