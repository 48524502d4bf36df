import pytest

from qpart.gf import field_of_order
from qpart.laurent import Q
from qpart.lattice import (dual_pivot_list, dual_subspace, gauss_int, gaussian_binomial,
                           moebius_interval, subspaces)
from qpart.matgf import PivotList, Subspace


def brute_subspace_count(q, a, b):
    return sum(1 for U in subspaces(field_of_order(q), a) if U.dim == b)


def test_gaussian_examples():
    assert gaussian_binomial(2, 1) == 1 + Q
    assert gaussian_binomial(2, 1)(2) == 3
    assert gaussian_binomial(3, 5) == 0
    assert gaussian_binomial(4, 2) == 1 + Q + 2 * Q**2 + Q**3 + Q**4


@pytest.mark.parametrize("q,a", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 3), (4, 2), (5, 2)])
def test_gaussian_counts_subspaces(q, a):
    for b in range(a + 1):
        assert gauss_int(a, b, q) == brute_subspace_count(q, a, b)


def test_subspace_examples(F2, F3):
    assert len(list(subspaces(F2, 2, 1))) == 3
    assert len(list(subspaces(F2, 2))) == 5
    for ctx in (F2, F3):
        assert list(subspaces(ctx, 3, 0)) == [Subspace.zero(ctx, 3)]


def test_moebius_examples():
    assert moebius_interval(2, 2) == 1
    assert moebius_interval(1, 2) == -1
    assert moebius_interval(0, 2) == Q


@pytest.mark.parametrize("q,m", [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_moebius_sums_vanish(q, m):
    ctx = field_of_order(q)
    subs = list(subspaces(ctx, m))
    for V in subs:
        if V.dim:
            assert sum(moebius_interval(W.dim, V.dim)(q) for W in subs if W <= V) == 0


def test_q_binomial_theorem():
    for v in range(1, 6):
        s = sum(gaussian_binomial(v, i) * (-1) ** (v - i) * Q ** ((v - i) * (v - i - 1) // 2)
                for i in range(v + 1))
        assert s == 0


@pytest.mark.parametrize("m", [1, 2, 3])
def test_pivot_monotonicity(F2, m):
    subs = list(subspaces(F2, m))
    for V in subs:
        below = [U for U in subs if U <= V]
        for U in below:
            assert U.piv.issubset(V.piv)
        reached = {U.piv for U in below}
        for bits in range(1 << m):
            mu = PivotList.from_bits(m, bits)
            if mu.issubset(V.piv):
                assert mu in reached


def test_dual_examples(F2):
    assert dual_subspace(Subspace.zero(F2, 2)) == Subspace.full(F2, 2)
    assert dual_subspace(Subspace.span(F2, 2, [(1, 0)])) == Subspace.span(F2, 2, [(0, 1)])
    assert dual_subspace(Subspace.full(F2, 3)) == Subspace.zero(F2, 3)
    assert dual_pivot_list(PivotList(3, ())) == PivotList(3, (1, 2, 3))
    assert dual_pivot_list(PivotList(2, (1,))) == PivotList(2, (2,))
    assert dual_pivot_list(PivotList(7, (3, 4, 6))) == PivotList(7, (1, 2, 5, 7))


def test_dual_pivot_list_involution():
    for m in range(6):
        for bits in range(1 << m):
            lam = PivotList.from_bits(m, bits)
            assert dual_pivot_list(dual_pivot_list(lam)) == lam
