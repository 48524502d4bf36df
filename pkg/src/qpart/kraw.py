"""Krawtchouk coefficients of the rank, row-space and pivot partitions.

Closed forms live next to a brute-force route: the character sum
``sum_{A in block} zeta_p^{Tr <A, B>}`` evaluated exactly in Z[zeta_p] over an
enumeration of the whole matrix space.  Partition kinds are named
``"rank"``, ``"rowspace"``, ``"pivot"`` and ``"rpivot"``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Hashable, Iterable, Mapping

import numpy as np

from .budget import check_budget
from .cyclo import CycInt
from .errors import NonIntegerResult, ShapeMismatch
from .ferrers import FerrersBoard, rank_dist, rref_free_cells
from .gf import FieldCtx
from .lattice import gauss_int, q_binom2, subspaces
from .matgf import (MatGF, PivotList, Subspace, all_pivot_lists, rank_rows,
                    rref_rows)

KINDS = ("rank", "rowspace", "pivot", "rpivot")
DUAL_KIND = {"rank": "rank", "rowspace": "rowspace", "pivot": "rpivot", "rpivot": "pivot"}

Distribution = Dict[Hashable, int]


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown partition kind {kind!r}; expected one of {KINDS}")


# --- labels -------------------------------------------------------------------

def label_of(A: MatGF, kind: str):
    """Block label of ``A``: an int, a Subspace or a PivotList."""
    _check_kind(kind)
    ctx, m = A.ctx, A.m
    if kind == "rank":
        return rank_rows(ctx, A.rows(), m)
    if kind == "rowspace":
        return Subspace(ctx, m, tuple(rref_rows(ctx, A.rows(), m)[0]))
    if kind == "pivot":
        return PivotList(m, tuple(p + 1 for p in rref_rows(ctx, A.rows(), m)[1]))
    rev = [r[::-1] for r in A.rows()]
    return PivotList(m, tuple(p + 1 for p in rref_rows(ctx, rev, m)[1])).flip()


def label_key(label):
    """Sort key giving the canonical block order used by every table."""
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, Subspace):
        return (label.dim, label.basis)
    return (len(label), label.idx)


def all_labels(kind: str, ctx: FieldCtx, n: int, m: int) -> list:
    """Labels of the nonempty blocks of a partition of F^{n x m}, in canonical order."""
    _check_kind(kind)
    top = min(n, m)
    if kind == "rank":
        return list(range(top + 1))
    if kind == "rowspace":
        return [U for U in subspaces(ctx, m) if U.dim <= n]
    return [lam for lam in all_pivot_lists(m) if len(lam) <= n]


def representative(label, kind: str, ctx: FieldCtx, n: int, m: int) -> MatGF:
    """A fixed matrix of F^{n x m} lying in the block ``label``.

    Rank ``s`` gives ``[I_s 0; 0 0]``; a subspace gives its RREF basis padded
    with zero rows; a pivot list ``mu`` gives the matrix whose column
    ``mu_a`` is ``e_a`` and whose other columns vanish (it has pivot list and
    reverse pivot list both equal to ``mu``).
    """
    _check_kind(kind)
    rows = [[0] * m for _ in range(n)]
    if kind == "rank":
        for i in range(label):
            rows[i][i] = 1
    elif kind == "rowspace":
        if label.dim > n:
            raise ShapeMismatch(f"a {label.dim}-dim row space needs at least {label.dim} rows")
        for i, r in enumerate(label.basis):
            rows[i] = list(r)
    else:
        if len(label) > n:
            raise ShapeMismatch("pivot list longer than the row count")
        for a, j in enumerate(label.idx):
            rows[a][j - 1] = 1
    return MatGF.from_rows(ctx, rows, m)


# --- closed forms ---------------------------------------------------------------

def kraw_rank(r: int, s: int, q: int, n: int, m: int) -> int:
    """K(P^rk; r, s) = sum_i (-1)^(r-i) q^(n i + binom(r-i, 2)) [m-i, m-r] [m-s, i]."""
    total = 0
    for i in range(m + 1):
        g = gauss_int(m - i, m - r, q) * gauss_int(m - s, i, q)
        if g:
            total += (-1) ** ((r - i) % 2) * q ** (n * i + q_binom2(r - i)) * g
    return total


def kraw_rowspace_dims(u: int, d: int, q: int, n: int) -> int:
    """K(P^rs; U, V) as a function of ``u = dim U`` and ``d = dim(U meet V-perp)``."""
    total = 0
    for t in range(d + 1):
        total += (-1) ** ((u - t) % 2) * q ** (n * t + q_binom2(u - t)) * gauss_int(d, t, q)
    return total


def kraw_rowspace(U: Subspace, V: Subspace, n: int) -> int:
    if U.m != V.m or U.ctx != V.ctx:
        raise ShapeMismatch("subspaces live in different ambient spaces")
    d = (U & V.perp()).dim
    return kraw_rowspace_dims(U.dim, d, U.ctx.q, n)


def pivot_board(lam: PivotList, mu: PivotList) -> tuple[FerrersBoard, int]:
    """Board built from ``lam - mu`` (its rows) and ``mu - lam`` (its columns)."""
    rows = [l for l in lam if l not in mu]
    cols = [v for v in mu if v not in lam]
    z = tuple(sum(1 for l in rows if l < v) for v in cols)
    return FerrersBoard(z), len(rows)


def _pivot_sum(lam: PivotList, mu: PivotList, q: int, n: int, m: int) -> tuple[int, int]:
    F, x = pivot_board(lam, mu)
    a = len(lam)
    P = [rank_dist(F, r)(q) for r in range(x + 1)]
    total = 0
    for t in range(m + 1):
        inner = sum(P[r] * gauss_int(x - r, t, q) for r in range(x + 1))
        if inner:
            total += (-1) ** ((a - t) % 2) * q ** (n * t + q_binom2(a - t)) * inner
    return total, F.size


def kraw_pivot(lam: PivotList, mu: PivotList, q: int, n: int, m: int) -> int:
    """K(P^piv; lam, mu) for ``A`` with pivots ``lam`` against ``B`` with reverse pivots ``mu``.

    Each RREF matrix with pivots ``lam`` has ``c(lam)`` free entries, of which
    only the ``|F|`` cells of the board change the relevant rank; the sum over
    boards is therefore weighted by ``q^(c(lam) - |F|)``.
    """
    if lam.m != m or mu.m != m:
        raise ShapeMismatch("pivot lists must have width m")
    total, cells = _pivot_sum(lam, mu, q, n, m)
    return q ** (rref_free_cells(lam) - cells) * total


def kraw_pivot_uncorrected(lam: PivotList, mu: PivotList, q: int, n: int, m: int) -> int:
    """The same board sum without the ``q^(c(lam) - |F|)`` weight (diagnostic only)."""
    return _pivot_sum(lam, mu, q, n, m)[0]


def kraw_rpivot(mu: PivotList, lam: PivotList, q: int, n: int, m: int) -> int:
    """K(P^rpiv; mu, lam), by reversing columns: A -> AZ swaps the two pivot kinds."""
    return kraw_pivot(mu.flip(), lam.flip(), q, n, m)


def pivot_block_size(mu: PivotList, q: int, n: int, m: int) -> int:
    """|{A in F^{n x m} : piv(A) = mu}| = q^c(mu) prod_{i<r} (q^n - q^i)."""
    r = len(mu)
    if r > n:
        return 0
    size = q ** rref_free_cells(mu)
    for i in range(r):
        size *= q**n - q**i
    return size


def kraw(kind: str, i, j, ctx: FieldCtx, n: int, m: int) -> int:
    """Closed-form K(kind; i, j); ``j`` labels a block of the dual partition."""
    _check_kind(kind)
    q = ctx.q
    if kind == "rank":
        return kraw_rank(i, j, q, n, m)
    if kind == "rowspace":
        return kraw_rowspace(i, j, n)
    if kind == "pivot":
        return kraw_pivot(i, j, q, n, m)
    return kraw_rpivot(i, j, q, n, m)


@lru_cache(maxsize=None)
def kraw_table(kind: str, ctx: FieldCtx, n: int, m: int):
    """``(row_labels, col_labels, table)`` with ``table[a][b] = K(kind; rows[a], cols[b])``."""
    rows = all_labels(kind, ctx, n, m)
    cols = all_labels(DUAL_KIND[kind], ctx, n, m)
    table = tuple(tuple(kraw(kind, i, j, ctx, n, m) for j in cols) for i in rows)
    return tuple(rows), tuple(cols), table


# --- brute force: the ambient space and character sums ----------------------

class Ambient:
    """Every matrix of F^{n x m}, as an ``(N, n*m)`` array in lexicographic order."""

    def __init__(self, ctx: FieldCtx, n: int, m: int):
        q = ctx.q
        check_budget(q ** (n * m), f"matrices in GF({q})^{n}x{m}")
        self.ctx, self.n, self.m = ctx, n, m
        k = n * m
        N = q**k
        idx = np.arange(N, dtype=np.int64)
        mats = np.empty((N, k), dtype=np.int64)
        for pos in range(k - 1, -1, -1):
            mats[:, pos] = idx % q
            idx //= q
        self.mats = mats
        tr, mul = ctx.trace_table, ctx.mul_table
        self.trace_mul = np.array([[tr[mul[a][b]] for b in range(q)] for a in range(q)], dtype=np.int64)
        self._labels: dict[str, list] = {}

    @property
    def size(self) -> int:
        return len(self.mats)

    def matrix(self, i: int) -> MatGF:
        return MatGF(self.ctx, self.n, self.m, tuple(int(x) for x in self.mats[i]))

    def index_of(self, A: MatGF) -> int:
        v = 0
        for x in A.entries:
            v = v * self.ctx.q + x
        return v

    def labels(self, kind: str) -> list:
        _check_kind(kind)
        if kind not in self._labels:
            self._labels[kind] = [label_of(self.matrix(i), kind) for i in range(self.size)]
        return self._labels[kind]

    def exponents(self, B: MatGF) -> np.ndarray:
        """``Tr <A, B>`` for every ``A``, as integers in ``[0, p)``."""
        b = np.array(B.entries, dtype=np.int64)
        return self.trace_mul[self.mats, b[None, :]].sum(axis=1) % self.ctx.p


@lru_cache(maxsize=16)
def ambient(ctx: FieldCtx, n: int, m: int) -> Ambient:
    return Ambient(ctx, n, m)


def block_index(kind: str, ctx: FieldCtx, n: int, m: int) -> tuple[list, np.ndarray]:
    """Canonical labels and, for each matrix, the position of its block."""
    amb = ambient(ctx, n, m)
    labels = all_labels(kind, ctx, n, m)
    pos = {lab: i for i, lab in enumerate(labels)}
    return labels, np.array([pos[l] for l in amb.labels(kind)], dtype=np.int64)


def char_sum(block, kind: str, B: MatGF) -> CycInt:
    """Exact ``sum_{A : label(A) = block} zeta_p^{Tr <A, B>}``."""
    ctx, n, m = B.ctx, B.n, B.m
    amb = ambient(ctx, n, m)
    p = ctx.p
    mask = np.array([l == block for l in amb.labels(kind)], dtype=bool)
    counts = np.bincount(amb.exponents(B)[mask], minlength=p)
    return CycInt.from_exponent_counts(p, [int(c) for c in counts])


def _block_sums(amb: Ambient, blk: np.ndarray, nblocks: int, B: MatGF) -> list[CycInt]:
    p = amb.ctx.p
    counts = np.bincount(blk * p + amb.exponents(B), minlength=nblocks * p).reshape(nblocks, p)
    return [CycInt.from_exponent_counts(p, [int(c) for c in row]) for row in counts]


def char_sum_table(kind: str, ctx: FieldCtx, n: int, m: int):
    """Brute-force analogue of :func:`kraw_table`, with CycInt entries."""
    amb = ambient(ctx, n, m)
    rows, blk = block_index(kind, ctx, n, m)
    cols = all_labels(DUAL_KIND[kind], ctx, n, m)
    sums_by_col = [_block_sums(amb, blk, len(rows), representative(j, DUAL_KIND[kind], ctx, n, m))
                   for j in cols]
    table = [[sums_by_col[b][a] for b in range(len(cols))] for a in range(len(rows))]
    return rows, cols, table


# --- dual partitions -------------------------------------------------------------

def partition_blocks(kind: str, ctx: FieldCtx, n: int, m: int) -> frozenset:
    """A partition of F^{n x m} as a set of frozensets of matrix indices."""
    amb = ambient(ctx, n, m)
    groups: dict = {}
    for i, lab in enumerate(amb.labels(kind)):
        groups.setdefault(lab, []).append(i)
    return frozenset(frozenset(g) for g in groups.values())


def dual_of_blocks(blocks: Iterable[Iterable[int]], ctx: FieldCtx, n: int, m: int) -> frozenset:
    """Group every ``B`` by its vector of character sums over the given blocks."""
    amb = ambient(ctx, n, m)
    N, p = amb.size, ctx.p
    check_budget(N * N, "character-sum evaluations")
    blocks = [sorted(b) for b in blocks]
    blk = np.empty(N, dtype=np.int64)
    for i, b in enumerate(blocks):
        blk[b] = i
    nb = len(blocks)
    # exps[a, b] = Tr <A_a, B_b>, summed entry by entry
    mats = amb.mats
    exps = np.zeros((N, N), dtype=np.int64)
    for k in range(mats.shape[1]):
        exps += amb.trace_mul[mats[:, k][:, None], mats[:, k][None, :]]
    exps %= p
    onehot = np.zeros((nb, N), dtype=np.int64)
    onehot[blk, np.arange(N)] = 1
    # counts[e][i, b] = #{A in block i : Tr <A, B_b> = e}
    counts = [onehot @ (exps == e).astype(np.int64) for e in range(p)]
    groups: dict = {}
    for b in range(N):
        sig = tuple(CycInt.from_exponent_counts(p, [int(counts[e][i, b]) for e in range(p)])
                    for i in range(nb))
        groups.setdefault(sig, []).append(b)
    return frozenset(frozenset(g) for g in groups.values())


def dual_partition(kind: str, ctx: FieldCtx, n: int, m: int) -> frozenset:
    return dual_of_blocks(partition_blocks(kind, ctx, n, m), ctx, n, m)


def identify_partition(blocks: frozenset, ctx: FieldCtx, n: int, m: int) -> list[str]:
    """Names of the known partition kinds equal to ``blocks``."""
    return [k for k in KINDS if partition_blocks(k, ctx, n, m) == blocks]


# --- MacWilliams -----------------------------------------------------------------

def macwilliams_transform(dist: Mapping, code_size: int, kind: str,
                          ctx: FieldCtx, n: int, m: int) -> Distribution:
    """Distribution of the dual code over ``DUAL_KIND[kind]`` from the ``kind``-distribution of C.

    Distributions are sparse dicts: labels with count zero are omitted.

    For the output partition Q with dual P = ``kind``:
    ``Q(C-perp, j) = (1/|C|) sum_i K(Q; j, i) P(C, i)``.
    """
    _check_kind(kind)
    out_kind = DUAL_KIND[kind]
    rows, cols, table = kraw_table(out_kind, ctx, n, m)
    col_pos = {lab: b for b, lab in enumerate(cols)}
    for lab in dist:
        if lab not in col_pos:
            raise ValueError(f"label {lab!r} is not a block of the {kind} partition")
    if code_size <= 0:
        raise NonIntegerResult("code size must be positive")
    result: Distribution = {}
    for a, j in enumerate(rows):
        s = sum(table[a][col_pos[i]] * c for i, c in dist.items())
        if s % code_size:
            raise NonIntegerResult(f"block {j!r}: {s} is not divisible by |C| = {code_size}")
        if s:
            result[j] = s // code_size
    return result


def rowspace_macwilliams_matrix(ctx: FieldCtx, n: int, m: int):
    """``(labels, M)`` with ``M = A diag(q^(n dim U-perp)) B^-1`` over exact rationals.

    ``A(V, U) = [V <= U]`` and ``B(V, U) = A(V, U-perp)``, rows and columns
    indexed by all subspaces of F^m.
    """
    labels = list(subspaces(ctx, m))
    N, q = len(labels), ctx.q
    perps = [U.perp() for U in labels]
    A = [[Fraction(int(V <= U)) for U in labels] for V in labels]
    Bm = [[Fraction(int(V <= W)) for W in perps] for V in labels]
    D = [Fraction(q ** (n * W.dim)) for W in perps]
    Binv = _inverse(Bm)
    AD = [[A[r][c] * D[c] for c in range(N)] for r in range(N)]
    M = [[sum(AD[r][k] * Binv[k][c] for k in range(N)) for c in range(N)] for r in range(N)]
    return labels, M


def _inverse(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    N = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(N)] for i, row in enumerate(mat)]
    for c in range(N):
        piv = next(r for r in range(c, N) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(N):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[N:] for row in aug]
