import itertools

import pytest

from qpart.codes import distribution, dual_code, full_code, random_codes, zero_code
from qpart.cyclo import CycInt
from qpart.errors import NonIntegerResult
from qpart.gf import field_of_order
from qpart.kraw import (DUAL_KIND, KINDS, all_labels, ambient, char_sum, char_sum_table,
                        dual_of_blocks, dual_partition, identify_partition, kraw_pivot,
                        kraw_pivot_uncorrected, kraw_rank, kraw_rowspace, kraw_table,
                        label_of, macwilliams_transform, partition_blocks, pivot_block_size,
                        representative, rowspace_macwilliams_matrix)
from qpart.matgf import MatGF, PivotList, Subspace


def test_kraw_rank_examples():
    for s in range(3):
        assert kraw_rank(0, s, 2, 2, 2) == 1
    assert kraw_rank(1, 0, 2, 2, 2) == 9


def test_kraw_rowspace_examples(F2, F3):
    for V in all_labels("rowspace", F2, 2, 2):
        assert kraw_rowspace(Subspace.zero(F2, 2), V, 2) == 1
    U = Subspace.span(F3, 3, [(1, 0, 2), (0, 1, 1)])
    assert kraw_rowspace(U, Subspace.zero(F3, 3), 2) == (9 - 1) * (9 - 3)
    full = Subspace.full(F2, 2)
    assert kraw_rowspace(full, full, 2) == 2


def test_kraw_pivot_examples():
    for bits in range(4):
        assert kraw_pivot(PivotList(2, ()), PivotList.from_bits(2, bits), 2, 2, 2) == 1
    assert kraw_pivot(PivotList(2, (1,)), PivotList(2, ()), 2, 2, 2) == 6


def test_uncorrected_pivot_form_disagrees():
    # the pivot formula without the free-entry weight misses the block size at mu = ()
    assert kraw_pivot_uncorrected(PivotList(2, (1,)), PivotList(2, ()), 2, 2, 2) == 3


def test_block_size_examples():
    assert pivot_block_size(PivotList(2, ()), 2, 2, 2) == 1
    assert pivot_block_size(PivotList(2, (1,)), 2, 2, 2) == 6
    assert pivot_block_size(PivotList(2, (1, 2)), 2, 2, 2) == 6


def test_char_sum_examples(F2, F3):
    B = MatGF.from_rows(F3, [[1, 2], [0, 1]])
    assert char_sum(0, "rank", B) == 1
    Z = MatGF.zeros(F3, 2, 2)
    assert char_sum(1, "rank", Z) == 32
    s = char_sum(1, "rank", MatGF.identity(F2, 2))
    assert isinstance(s, CycInt) and len(s.coords) == 1


@pytest.mark.parametrize("q,n,m", [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3)])
@pytest.mark.parametrize("kind", KINDS)
def test_closed_forms_match_character_sums(q, n, m, kind):
    ctx = field_of_order(q)
    rows, cols, table = kraw_table(kind, ctx, n, m)
    r2, c2, sums = char_sum_table(kind, ctx, n, m)
    assert list(rows) == list(r2) and list(cols) == list(c2)
    for a in range(len(rows)):
        for b in range(len(cols)):
            assert sums[a][b].is_rational()
            assert sums[a][b].to_int() == table[a][b]


@pytest.mark.parametrize("kind", KINDS)
def test_character_sums_constant_on_dual_blocks(F2, kind):
    amb = ambient(F2, 2, 2)
    dual_labels = amb.labels(DUAL_KIND[kind])
    for block in all_labels(kind, F2, 2, 2):
        seen = {}
        for i in range(len(dual_labels)):
            s = char_sum(block, kind, amb.matrix(i))
            assert seen.setdefault(dual_labels[i], s) == s


def test_block_sizes_and_representatives(F3):
    amb = ambient(F3, 2, 2)
    for kind in KINDS:
        labels = amb.labels(kind)
        for lab in all_labels(kind, F3, 2, 2):
            assert label_of(representative(lab, kind, F3, 2, 2), kind) == lab
            if kind == "pivot":
                assert labels.count(lab) == pivot_block_size(lab, 3, 2, 2)


@pytest.mark.parametrize("kind", ["pivot", "rpivot"])
def test_reflexive(F2, kind):
    primal = partition_blocks(kind, F2, 2, 2)
    dual = dual_partition(kind, F2, 2, 2)
    assert dual != primal
    assert dual_of_blocks(dual, F2, 2, 2) == primal


def test_self_dual(F2):
    for kind in ("rank", "rowspace"):
        assert identify_partition(dual_partition(kind, F2, 2, 2), F2, 2, 2) == [kind]


def test_macwilliams_trivial_codes(F2):
    for kind in KINDS:
        full = full_code(F2, 2, 3)
        out = macwilliams_transform(distribution(full, kind), full.size, kind, F2, 2, 3)
        assert out == {label_of(MatGF.zeros(F2, 2, 3), DUAL_KIND[kind]): 1}
        z = zero_code(F2, 2, 3)
        out = macwilliams_transform(distribution(z, kind), 1, kind, F2, 2, 3)
        assert out == distribution(full, DUAL_KIND[kind])


def test_macwilliams_random_three_dim(F2):
    C = next(c for c in random_codes(F2, 3, 2, 50, seed=7) if c.k == 3)
    for kind in KINDS:
        out = macwilliams_transform(distribution(C, kind), C.size, kind, F2, 3, 2)
        assert out == distribution(dual_code(C), DUAL_KIND[kind])


def test_macwilliams_rejects_non_distribution(F2):
    with pytest.raises(NonIntegerResult):
        macwilliams_transform({0: 1, 1: 2}, 3, "rank", F2, 2, 2)


def test_m_matrix_is_transposed_krawtchouk_table(F2):
    labels, M = rowspace_macwilliams_matrix(F2, 3, 2)
    rows, cols, table = kraw_table("rowspace", F2, 3, 2)
    assert list(rows) == labels
    for a, b in itertools.product(range(len(labels)), repeat=2):
        assert M[a][b] == table[b][a]
