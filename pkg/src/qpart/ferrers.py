"""Ferrers boards: rank distributions of supported matrices and q-rook polynomials.

A board ``[c_1, ..., c_m]`` has ``c_j`` cells in column ``j``, stacked from
the top row down.  Rows are numbered from 1 at the top, columns from 1 on the
left.  Every polynomial is a :class:`LaurentPolyZ` in the indeterminate q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .budget import check_budget, get_budget
from .errors import BudgetExceeded, NonMonotone
from .gf import FieldCtx
from .laurent import LaurentPolyZ, NEG_INF, ONE, Q, ZERO
from .lattice import gaussian_binomial, q_binom2
from .matgf import PivotList, rank_rows, rref_matrices


@dataclass(frozen=True)
class FerrersBoard:
    cols: tuple

    def __post_init__(self):
        cols = tuple(int(c) for c in self.cols)
        if any(c < 0 for c in cols):
            raise NonMonotone(f"negative column height in {list(cols)}")
        if any(b < a for a, b in zip(cols, cols[1:])):
            raise NonMonotone(f"column heights {list(cols)} are not nondecreasing")
        object.__setattr__(self, "cols", cols)

    @property
    def m(self) -> int:
        return len(self.cols)

    @property
    def size(self) -> int:
        return sum(self.cols)

    @property
    def height(self) -> int:
        return self.cols[-1] if self.cols else 0

    def cells(self) -> list[tuple[int, int]]:
        """All cells ``(row, col)``, 1-based, column by column."""
        return [(i, j + 1) for j, c in enumerate(self.cols) for i in range(1, c + 1)]

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= j <= self.m and 1 <= i <= self.cols[j - 1]

    def drop_last(self) -> "FerrersBoard":
        return FerrersBoard(self.cols[:-1])

    def __str__(self):
        return ",".join(str(c) for c in self.cols)


def board_new(cols: Sequence[int]) -> FerrersBoard:
    return FerrersBoard(tuple(cols))


def parse_board(text: str) -> FerrersBoard:
    """Parse ``"1,2,4,4,5"``; the empty string gives the board with no columns."""
    text = text.strip()
    return FerrersBoard(tuple(int(t) for t in text.split(",")) if text else ())


def boards(max_m: int, max_height: int, min_m: int = 1) -> Iterator[FerrersBoard]:
    """Every board with ``min_m <= m <= max_m`` columns and heights at most ``max_height``."""
    for m in range(min_m, max_m + 1):
        for cols in combinations(range(max_height + m), m):
            # strictly increasing -> nondecreasing by subtracting positions
            yield FerrersBoard(tuple(c - k for k, c in enumerate(cols)))


def _qpow(k: int) -> LaurentPolyZ:
    return LaurentPolyZ.monomial(k)


# --- rank distribution P_r(F) -------------------------------------------------

def rank_dist(F: FerrersBoard, r: int) -> LaurentPolyZ:
    """Explicit sum over increasing index tuples; negative-exponent terms cancel."""
    c, m = F.cols, F.m
    if r < 0:
        return ZERO
    total = ZERO
    for idx in combinations(range(1, m + 1), r):
        term = _qpow(r * m - sum(idx))
        for j, i in enumerate(idx, start=1):
            term = term * (_qpow(c[i - 1] - j + 1) - 1)
            if term.is_zero():
                break
        total = total + term
    return total


def rank_dist_recursive(F: FerrersBoard, r: int) -> LaurentPolyZ:
    """Column-deletion recursion; independent of :func:`rank_dist`."""
    return _rank_rec(F.cols, r)


@lru_cache(maxsize=None)
def _rank_rec(cols: tuple, r: int) -> LaurentPolyZ:
    if r < 0:
        return ZERO
    if r == 0:
        return ONE
    if not cols:
        return ZERO
    rest, cm = cols[:-1], cols[-1]
    return _rank_rec(rest, r - 1) * (_qpow(cm) - _qpow(r - 1)) + _rank_rec(rest, r).shift(r)


def rank_dist_degree(F: FerrersBoard, r: int):
    """Degree of P_r(F) from the index-set formula; ``-inf`` when the set is empty."""
    c, m = F.cols, F.m
    best = None
    for idx in combinations(range(1, m + 1), r):
        if all(c[i - 1] != j - 1 for j, i in enumerate(idx, start=1)):
            s = sum(c[i - 1] - i for i in idx)
            best = s if best is None else max(best, s)
    if best is None:
        return NEG_INF
    return r * m - q_binom2(r) + best


def triangle_rank_dist(m: int, r: int) -> LaurentPolyZ:
    """P_r of the upper triangle [1, ..., m] via its product form."""
    total = ZERO
    for idx in combinations(range(1, m + 1), r):
        term = ONE
        for j, i in enumerate(idx, start=1):
            term = term * (_qpow(m - j + 1) - _qpow(m - i))
        total = total + term
    return total


def rectangle_rank_dist(n: int, m: int, r: int) -> LaurentPolyZ:
    """Number of rank-r matrices in F^{n x m}: [m, r] * prod_{j<r} (q^n - q^j)."""
    out = gaussian_binomial(m, r)
    for j in range(r):
        out = out * (_qpow(n) - _qpow(j))
    return out


# --- brute-force matrix counts ----------------------------------------------

def _rank_gf2(rows: list[int]) -> int:
    basis: list[int] = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def brute_rank_counts(F: FerrersBoard, ctx: FieldCtx) -> list[int]:
    """Counts of matrices supported on F by rank, indexed ``0..m``."""
    q = ctx.q
    cells = F.cells()
    check_budget(q ** len(cells), f"matrices supported on board [{F}]")
    n, m = F.height, F.m
    counts = [0] * (m + 1)
    if ctx.p == 2 and ctx.e == 1:
        bits = [(i - 1, 1 << (j - 1)) for i, j in cells]
        for vals in product((0, 1), repeat=len(cells)):
            rows = [0] * n
            for (i, b), v in zip(bits, vals):
                if v:
                    rows[i] |= b
            counts[_rank_gf2(rows)] += 1
        return counts
    for vals in product(range(q), repeat=len(cells)):
        rows = [[0] * m for _ in range(n)]
        for (i, j), v in zip(cells, vals):
            rows[i - 1][j - 1] = v
        counts[rank_rows(ctx, rows, m)] += 1
    return counts


def brute_count(F: FerrersBoard, ctx: FieldCtx, r: int) -> int:
    counts = brute_rank_counts(F, ctx)
    return counts[r] if 0 <= r < len(counts) else 0


# --- q-rook polynomials -------------------------------------------------------

def rook_placements(F: FerrersBoard, r: int) -> Iterator[tuple]:
    """Non-attacking placements of r rooks, columns scanned left to right."""
    m, c = F.m, F.cols

    def rec(j: int, left: int, used: frozenset, placed: tuple):
        if left == 0:
            yield placed
            return
        if m - j < left:
            return
        yield from rec(j + 1, left, used, placed)
        for i in range(1, c[j] + 1):
            if i not in used:
                yield from rec(j + 1, left - 1, used | {i}, placed + ((i, j + 1),))

    if r < 0:
        return
    yield from rec(0, r, frozenset(), ())


def inv(F: FerrersBoard, placement: Sequence[tuple]) -> int:
    """Cells left after crossing out each rook, the cells above it and the cells to its right."""
    crossed = set()
    for i, j in placement:
        crossed.update((k, j) for k in range(1, i + 1))
        crossed.update((i, l) for l in range(j + 1, F.m + 1) if (i, l) in F)
    return F.size - len(crossed)


def rook_poly_enum(F: FerrersBoard, r: int) -> LaurentPolyZ:
    limit = get_budget()
    coeffs: dict[int, int] = {}
    count = 0
    for C in rook_placements(F, r):
        count += 1
        if count > limit:
            raise BudgetExceeded(f"more than {limit} rook placements on [{F}]")
        k = inv(F, C)
        coeffs[k] = coeffs.get(k, 0) + 1
    return LaurentPolyZ(coeffs)


def rook_poly_closed(F: FerrersBoard, r: int) -> LaurentPolyZ:
    """Closed form divided exactly by (1 - q)^r."""
    if r < 0:
        return ZERO
    c, m = F.cols, F.m
    num = ZERO
    for idx in combinations(range(1, m + 1), r):
        term = ONE
        for j, i in enumerate(idx, start=1):
            term = term * (_qpow(i + j - c[i - 1] - 1) - _qpow(i))
        num = num + term
    num = num.shift(F.size - r * m)
    return num.exact_div((1 - Q) ** r)


def haglund_transform(F: FerrersBoard, r: int) -> LaurentPolyZ:
    """(q - 1)^r q^(|F| - r) R_r(F)(1/q), with R_r from placement enumeration."""
    R = rook_poly_enum(F, r)
    return ((Q - 1) ** r) * R.invert_variable().shift(F.size - r)


def rook_poly_recursive(F: FerrersBoard, r: int) -> LaurentPolyZ:
    """Last-column recursion for R_r, from the empty board upward."""
    return _rook_rec(F.cols, r)


@lru_cache(maxsize=None)
def _rook_rec(cols: tuple, r: int) -> LaurentPolyZ:
    if r < 0:
        return ZERO
    if not cols:
        return ONE if r == 0 else ZERO
    rest, cm = cols[:-1], cols[-1]
    if r == 0:
        return _qpow(sum(cols))
    qint = (_qpow(cm - r + 1) - 1).exact_div(Q - 1)
    return _rook_rec(rest, r).shift(cm - r) + _rook_rec(rest, r - 1) * qint


@lru_cache(maxsize=None)
def q_stirling(m: int, r: int) -> LaurentPolyZ:
    """q-Stirling numbers of the second kind: S_{m+1,r} = q^(r-1) S_{m,r-1} + [r]_q S_{m,r}."""
    if r < 0 or r > m:
        return ZERO
    if m == 0:
        return ONE
    qint = sum((_qpow(k) for k in range(r)), ZERO)
    return q_stirling(m - 1, r - 1).shift(r - 1) + qint * q_stirling(m - 1, r)


# --- stacked RREF counts --------------------------------------------------------

def rref_free_cells(lam: PivotList) -> int:
    """Number of free entries of an RREF matrix with pivot list ``lam``."""
    a = len(lam)
    return sum(lam.m - l - a + i for i, l in enumerate(lam.idx, start=1))


def lab_board(lam: PivotList, sigma: PivotList) -> tuple[FerrersBoard, int, int]:
    """Board ``[z_1..z_y]`` for the pair; returns ``(board, x, y)``.

    ``x`` counts the pivots of ``lam`` shared with ``sigma``; the ``y`` columns
    are the non-pivot columns of ``sigma`` outside ``lam``.
    """
    shared = [l for l in lam if l in sigma]
    outside = [s for s in sigma.dual() if s not in lam]
    z = tuple(sum(1 for l in shared if l < s) for s in outside)
    return FerrersBoard(z), len(shared), len(outside)


def lab_poly_uncorrected(lam: PivotList, sigma: PivotList, r: int) -> LaurentPolyZ:
    """P_{r-a+x}(F) alone, without the free-entry weight."""
    F, x, _ = lab_board(lam, sigma)
    return rank_dist(F, r - len(lam) + x)


def lab_poly(lam: PivotList, sigma: PivotList, r: int) -> LaurentPolyZ:
    """Number of RREF ``A`` with ``piv(A) = lam`` and ``rk(A; B_sigma) = |sigma| + r``.

    Only the entries of A in the rows meeting ``sigma`` and the columns
    outside ``sigma`` and ``lam`` affect the rank; the remaining free entries
    contribute the factor ``q^(c(lam) - |F|)``.
    """
    F, x, _ = lab_board(lam, sigma)
    return rank_dist(F, r - len(lam) + x).shift(rref_free_cells(lam) - F.size)


def lab_count(lam: PivotList, sigma: PivotList, r: int, q: int) -> int:
    return lab_poly(lam, sigma, r)(q)


def sigma_matrix_rows(sigma: PivotList) -> list[tuple]:
    """Rows of the matrix with column ``sigma_a`` equal to ``e_a`` and zeros elsewhere."""
    rows = []
    for s in sigma:
        row = [0] * sigma.m
        row[s - 1] = 1
        rows.append(tuple(row))
    return rows


def lab_count_enum(lam: PivotList, sigma: PivotList, r: int, ctx: FieldCtx) -> int:
    """Exhaustive count over all RREF matrices with pivot list ``lam``."""
    check_budget(ctx.q ** rref_free_cells(lam), "RREF matrices")
    B = sigma_matrix_rows(sigma)
    target = len(sigma) + r
    return sum(1 for A in rref_matrices(ctx, lam)
               if rank_rows(ctx, A.rows() + B, lam.m) == target)
