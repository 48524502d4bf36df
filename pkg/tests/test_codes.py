import itertools

import pytest

from qpart.codes import (MatrixCode, binomial_moment, code_span, distribution, dual_code,
                         full_code, is_mrd, is_piv_extremal, is_u_extremal, min_rank_distance,
                         mrd_field_embedding, mrd_rs, pad_code, predicted_distribution,
                         random_codes, rigid_piv, rigid_rs, shorten, shorten_piv,
                         shorten_piv_union, zero_code)
from qpart.errors import EmptyCode, ShapeMismatch
from qpart.gf import field_of_order
from qpart.kraw import label_of
from qpart.lattice import dual_pivot_list, subspaces
from qpart.matgf import MatGF, PivotList, Subspace

CORPUS_SEED = 20240101


@pytest.fixture(scope="module")
def corpus(F2):
    return random_codes(F2, 3, 2, 50, seed=CORPUS_SEED)


def E(ctx, n, m, i, j):
    return MatGF.unit(ctx, n, m, i, j)


def test_span_examples(F2):
    assert code_span([], F2, 2, 2).k == 0
    assert code_span([E(F2, 2, 2, 1, 1)] * 2).k == 1
    basis = [E(F2, 2, 3, i, j) for i in (1, 2) for j in (1, 2, 3)]
    assert code_span(basis) == full_code(F2, 2, 3)
    with pytest.raises(ShapeMismatch):
        code_span([E(F2, 2, 2, 1, 1), E(F2, 2, 3, 1, 1)])


def test_dual_examples(F2):
    assert dual_code(full_code(F2, 2, 2)) == zero_code(F2, 2, 2)
    assert dual_code(zero_code(F2, 2, 2)) == full_code(F2, 2, 2)
    D = dual_code(code_span([E(F2, 2, 2, 1, 1)]))
    assert D.k == 3
    assert all(A[0, 0] == 0 for A in D.codewords())


def test_dual_involution(corpus):
    for C in corpus:
        D = dual_code(C)
        assert D.k == C.n * C.m - C.k
        assert dual_code(D) == C


def test_shorten_examples(F2):
    C = random_codes(F2, 3, 2, 1, seed=3)[0]
    assert shorten(C, Subspace.full(F2, 2)) == C
    assert shorten(C, Subspace.zero(F2, 2)).k == 0
    full = full_code(F2, 3, 2)
    for U in subspaces(F2, 2):
        assert shorten(full, U).size == 2 ** (3 * U.dim)


def test_shorten_matches_filter(corpus, F2):
    for C in corpus[:10]:
        for U in subspaces(F2, 2):
            direct = {A for A in C.codewords() if all(U.contains(r) for r in A.rows())}
            assert set(shorten(C, U).codewords()) == direct


def test_shorten_piv(corpus):
    C = corpus[0]
    assert shorten_piv(C, PivotList(2, (1, 2))) == frozenset(C.codewords())
    assert shorten_piv(C, PivotList(2, ())) == {MatGF.zeros(C.ctx, 3, 2)}
    for C in corpus:
        for bits in range(4):
            lam = PivotList.from_bits(2, bits)
            for side in ("piv", "rpiv"):
                assert shorten_piv(C, lam, side) == shorten_piv_union(C, lam, side)


def test_distribution_examples(F2):
    z = zero_code(F2, 2, 2)
    assert distribution(z, "rowspace") == {Subspace.zero(F2, 2): 1}
    assert distribution(full_code(F2, 2, 2), "rank") == {0: 1, 1: 9, 2: 6}
    assert distribution(mrd_field_embedding(F2, 2), "rank") == {0: 1, 2: 3}
    for C in random_codes(F2, 2, 3, 10, seed=5):
        for kind in ("rank", "rowspace", "pivot", "rpivot"):
            assert sum(distribution(C, kind).values()) == C.size


def test_min_distance_and_mrd(F2):
    assert min_rank_distance(full_code(F2, 2, 2)) == 1
    assert min_rank_distance(mrd_field_embedding(F2, 2)) == 2
    single = code_span([E(F2, 2, 2, 1, 1)])
    assert min_rank_distance(single) == 1
    with pytest.raises(EmptyCode):
        min_rank_distance(zero_code(F2, 2, 2))
    assert is_mrd(full_code(F2, 2, 2))
    assert is_mrd(mrd_field_embedding(F2, 2))
    assert not is_mrd(single)


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (3, 2), (4, 2), (2, 4)])
def test_field_embedding(q, m):
    C = mrd_field_embedding(field_of_order(q), m)
    assert C.k == m and min_rank_distance(C) == m and is_mrd(C)


def test_field_embedding_gf8_is_companion_algebra(F2):
    P = MatGF.from_rows(F2, [[0, 0, 1], [1, 0, 1], [0, 1, 0]])
    C = mrd_field_embedding(F2, 3)
    assert P in C and (P @ P) in C and MatGF.identity(F2, 3) in C


def test_extremal_examples(F2):
    assert is_u_extremal(full_code(F2, 3, 2), Subspace.zero(F2, 2))
    assert is_u_extremal(zero_code(F2, 3, 2), Subspace.full(F2, 2))


def _padded_mrd(ctx, n):
    # an n x 2 MRD code of distance 2 widened by a zero column
    return pad_code(mrd_field_embedding(ctx, 2, n), 1, "zero_pad")


@pytest.mark.parametrize("n", [2, 3])
def test_padded_mrd_is_extremal_not_mrd(F2, n):
    C = _padded_mrd(F2, n)
    assert (C.n, C.m) == (n, 3) and min_rank_distance(C) == 2
    assert not is_mrd(C)
    for u1 in subspaces(F2, 2, 1):
        U = Subspace.span(F2, 3, [u1.basis[0] + (0,), (0, 0, 1)])
        assert is_u_extremal(C, U)


def test_padded_mrd_row_space_counts_depend_on_v(F2):
    C = _padded_mrd(F2, 3)
    U = Subspace.span(F2, 3, [(1, 0, 0), (0, 0, 1)])
    V = Subspace.span(F2, 3, [(1, 0, 0), (0, 1, 0)])
    dist = distribution(C, "rowspace")
    assert dist.get(U, 0) == 0
    assert dist[V] == 2**3 - 1


def test_extremality_duality(corpus, F2):
    for C in corpus:
        D = dual_code(C)
        for U in subspaces(F2, 2):
            assert is_u_extremal(C, U) == is_u_extremal(D, U.perp())
        for bits in range(4):
            lam = PivotList.from_bits(2, bits)
            assert is_piv_extremal(C, lam, "piv") == is_piv_extremal(D, dual_pivot_list(lam), "rpiv")


def test_mrd_equivalences(F2, corpus):
    codes = [mrd_field_embedding(F2, 2, 3), mrd_field_embedding(F2, 3)] + [C for C in corpus if C.k]
    for C in codes:
        d = min_rank_distance(C)
        if C.m > C.n:
            continue
        clauses = [is_u_extremal(C, U) for U in subspaces(C.ctx, C.m, d - 1)]
        assert is_mrd(C) == all(clauses) == any(clauses)


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (3, 2)])
def test_mrd_row_space_rigidity(q, m):
    ctx = field_of_order(q)
    C = mrd_field_embedding(ctx, m)
    dist = distribution(C, "rowspace")
    for V in subspaces(ctx, m):
        assert dist.get(V, 0) == mrd_rs(q, m, m, V.dim)


def test_prediction_examples():
    assert predicted_distribution("mrd_rs", q=2, n=2, d=2, v=2) == 3
    assert all(mrd_rs(2, 4, 3, v) == 0 for v in (1, 2))
    assert predicted_distribution("rigid_piv", q=2, n=3, u=1, mu=PivotList(3, ())) == 1
    with pytest.raises(ValueError):
        predicted_distribution("nope")


def test_pad_examples(F2):
    C = pad_code(mrd_field_embedding(F2, 2), 1, "zero_pad")
    assert all(A.columns()[2] == (0, 0) for A in C.codewords())
    assert pad_code(zero_code(F2, 2, 2), 2) == zero_code(F2, 2, 4)
    C2 = mrd_field_embedding(F2, 2, 3)
    C = pad_code(C2, 1, "full_pad", "left")
    assert C.k == 3 * (3 - 1)


def test_binomial_moments(corpus):
    for C in corpus:
        assert binomial_moment(C, 0) == (C.size, C.size)
        assert binomial_moment(C, C.m) == (1, 1)
        for nu in range(C.m + 1):
            lhs, rhs = binomial_moment(C, nu)
            assert lhs == rhs


def test_code_text_round_trip(F4):
    C = mrd_field_embedding(F4, 2)
    text = C.to_text()
    assert text.splitlines()[0] == "2 2 4 2"
    assert MatrixCode.from_text(text) == C
    z = zero_code(F4, 2, 3)
    assert MatrixCode.from_text(z.to_text()) == z
    with pytest.raises(ShapeMismatch):
        MatrixCode.from_text("2 2 2 2\n\n2 2 2\n1 0\n0 1\n")


def test_random_codes_reproducible(F2):
    a = random_codes(F2, 3, 2, 5, seed=11)
    b = random_codes(F2, 3, 2, 5, seed=11)
    assert a == b
