"""Dense matrices over GF(q): row reduction, pivots, row spaces."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import ShapeMismatch
from .gf import FieldCtx, field_of_order


# --- row reduction on plain lists ------------------------------------------

def rref_rows(ctx: FieldCtx, rows: Iterable[Sequence[int]], ncols: int):
    """Reduce ``rows`` to RREF.

    Returns ``(basis, pivots)``: the nonzero RREF rows as tuples and the
    0-based pivot column of each.
    """
    add, mul, neg, inv = ctx.add_table, ctx.mul_table, ctx.neg_table, ctx.inv_table
    work = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        sel = next((i for i in range(r, len(work)) if work[i][c]), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        row = work[r]
        if row[c] != 1:
            s = inv[row[c]]
            mrow = mul[s]
            row = work[r] = [mrow[x] for x in row]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = neg[work[i][c]]
                mf = mul[f]
                wi = work[i]
                work[i] = [add[x][mf[y]] for x, y in zip(wi, row)]
        pivots.append(c)
        r += 1
    return [tuple(x) for x in work[:r]], pivots


def rank_rows(ctx: FieldCtx, rows: Iterable[Sequence[int]], ncols: int) -> int:
    return len(rref_rows(ctx, rows, ncols)[1])


def nullspace(ctx: FieldCtx, rows: Sequence[Sequence[int]], ncols: int) -> list[tuple]:
    """Basis of ``{x : sum_j rows[i][j] x_j = 0 for all i}``."""
    basis, pivots = rref_rows(ctx, rows, ncols)
    neg = ctx.neg_table
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [0] * ncols
        x[f] = 1
        for row, p in zip(basis, pivots):
            x[p] = neg[row[f]]
        out.append(tuple(x))
    return out


# --- pivot lists ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PivotList:
    """A strictly increasing list of 1-based column indices inside ``[m]``."""

    m: int
    idx: tuple = ()

    def __post_init__(self):
        idx = tuple(int(i) for i in self.idx)
        if any(b <= a for a, b in zip(idx, idx[1:])) or any(not 1 <= i <= self.m for i in idx):
            raise ValueError(f"invalid pivot list {idx} for width {self.m}")
        object.__setattr__(self, "idx", idx)

    def __len__(self):
        return len(self.idx)

    def __iter__(self):
        return iter(self.idx)

    def __contains__(self, j):
        return j in self.idx

    def __repr__(self):
        return f"PivotList({self.m}, {self.idx})"

    @property
    def bits(self) -> int:
        return sum(1 << (j - 1) for j in self.idx)

    @classmethod
    def from_bits(cls, m: int, bits: int) -> "PivotList":
        return cls(m, tuple(j for j in range(1, m + 1) if bits >> (j - 1) & 1))

    def dual(self) -> "PivotList":
        """Complement in ``[m]``."""
        s = set(self.idx)
        return PivotList(self.m, tuple(j for j in range(1, self.m + 1) if j not in s))

    def flip(self) -> "PivotList":
        """Image under the column reversal ``j -> m + 1 - j``."""
        return PivotList(self.m, tuple(sorted(self.m + 1 - j for j in self.idx)))

    def issubset(self, other: "PivotList") -> bool:
        return set(self.idx) <= set(other.idx)

    def __and__(self, other):
        s = set(other.idx)
        return PivotList(self.m, tuple(j for j in self.idx if j in s))

    def __sub__(self, other):
        s = set(other.idx)
        return PivotList(self.m, tuple(j for j in self.idx if j not in s))


def all_pivot_lists(m: int) -> list[PivotList]:
    """Every element of Pi for width ``m``, ordered by length then lexicographically."""
    return [PivotList(m, c) for r in range(m + 1) for c in combinations(range(1, m + 1), r)]


# --- matrices -----------------------------------------------------------------

@dataclass(frozen=True)
class MatGF:
    """An immutable ``n x m`` matrix over ``ctx``; ``entries`` is row-major."""

    ctx: FieldCtx
    n: int
    m: int
    entries: tuple

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != self.n * self.m:
            raise ShapeMismatch(f"expected {self.n * self.m} entries, got {len(entries)}")
        if any(not 0 <= x < self.ctx.q for x in entries):
            raise ValueError("entry outside [0, q)")
        object.__setattr__(self, "entries", entries)

    # constructors
    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence[int]], m: int | None = None) -> "MatGF":
        rows = [tuple(r) for r in rows]
        if m is None:
            if not rows:
                raise ShapeMismatch("cannot infer width of an empty matrix")
            m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(ctx, len(rows), m, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, ctx: FieldCtx, n: int, m: int) -> "MatGF":
        return cls(ctx, n, m, (0,) * (n * m))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "MatGF":
        return cls(ctx, n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, ctx: FieldCtx, n: int, m: int, i: int, j: int) -> "MatGF":
        """The matrix E_ij (1-based) with a single 1."""
        e = [0] * (n * m)
        e[(i - 1) * m + (j - 1)] = 1
        return cls(ctx, n, m, tuple(e))

    # access
    @property
    def shape(self) -> tuple[int, int]:
        return self.n, self.m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.m + j]

    def rows(self) -> list[tuple]:
        m = self.m
        return [self.entries[i * m:(i + 1) * m] for i in range(self.n)]

    def columns(self) -> list[tuple]:
        return [self.entries[j::self.m] for j in range(self.m)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self):
        return f"MatGF(q={self.ctx.q}, {self.rows()})"

    # arithmetic
    def _check(self, other: "MatGF") -> None:
        assert self.ctx == other.ctx, "mixing matrices over different fields"

    def __add__(self, other: "MatGF") -> "MatGF":
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        add = self.ctx.add_table
        return MatGF(self.ctx, self.n, self.m, tuple(add[a][b] for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "MatGF":
        neg = self.ctx.neg_table
        return MatGF(self.ctx, self.n, self.m, tuple(neg[a] for a in self.entries))

    def __sub__(self, other: "MatGF") -> "MatGF":
        return self + (-other)

    def scale(self, c: int) -> "MatGF":
        mc = self.ctx.mul_table[c]
        return MatGF(self.ctx, self.n, self.m, tuple(mc[a] for a in self.entries))

    def __matmul__(self, other: "MatGF") -> "MatGF":
        self._check(other)
        if self.m != other.n:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        add, mul = self.ctx.add_table, self.ctx.mul_table
        cols = other.columns()
        out = []
        for row in self.rows():
            for col in cols:
                s = 0
                for a, b in zip(row, col):
                    if a and b:
                        s = add[s][mul[a][b]]
                out.append(s)
        return MatGF(self.ctx, self.n, other.m, tuple(out))

    @property
    def T(self) -> "MatGF":
        return MatGF(self.ctx, self.m, self.n, tuple(x for c in self.columns() for x in c))

    def reverse_columns(self) -> "MatGF":
        """Right multiplication by the anti-identity Z."""
        return MatGF.from_rows(self.ctx, [r[::-1] for r in self.rows()], self.m)

    def hstack(self, other: "MatGF") -> "MatGF":
        self._check(other)
        if self.n != other.n:
            raise ShapeMismatch("row counts differ")
        return MatGF.from_rows(self.ctx, [a + b for a, b in zip(self.rows(), other.rows())], self.m + other.m)

    def vstack(self, other: "MatGF") -> "MatGF":
        self._check(other)
        if self.m != other.m:
            raise ShapeMismatch("column counts differ")
        return MatGF(self.ctx, self.n + other.n, self.m, self.entries + other.entries)

    def columns_subset(self, cols: Sequence[int]) -> "MatGF":
        """Keep the given 1-based columns, in order."""
        return MatGF.from_rows(self.ctx, [tuple(r[j - 1] for j in cols) for r in self.rows()], len(cols))

    # text format
    def to_text(self) -> str:
        lines = [f"{self.n} {self.m} {self.ctx.q}"]
        lines += [" ".join(str(x) for x in r) for r in self.rows()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, ctx: FieldCtx | None = None) -> "MatGF":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        n, m, q = (int(t) for t in lines[0].split())
        if ctx is None:
            ctx = field_of_order(q)
        elif ctx.q != q:
            raise ShapeMismatch(f"matrix is over GF({q}), context is GF({ctx.q})")
        rows = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
        if len(rows) != n or any(len(r) != m for r in rows):
            raise ShapeMismatch(f"body does not match header {n}x{m}")
        return cls(ctx, n, m, tuple(x for r in rows for x in r))


# --- echelon forms and pivots -------------------------------------------------

def rref(A: MatGF) -> tuple[MatGF, PivotList, int]:
    """Return ``(RREF(A), piv(A), rk(A))``; RREF keeps A's shape, zero rows last."""
    basis, pivots = rref_rows(A.ctx, A.rows(), A.m)
    r = len(pivots)
    rows = basis + [(0,) * A.m] * (A.n - r)
    return MatGF.from_rows(A.ctx, rows, A.m), PivotList(A.m, tuple(p + 1 for p in pivots)), r


def piv(A: MatGF) -> PivotList:
    return rref(A)[1]


def rank(A: MatGF) -> int:
    return rank_rows(A.ctx, A.rows(), A.m)


def rpiv(A: MatGF) -> PivotList:
    """Reverse pivots: pivots of ``A Z`` mirrored back through ``j -> m + 1 - j``."""
    return piv(A.reverse_columns()).flip()


def reverse_rref(A: MatGF) -> MatGF:
    """``RREF(A Z) Z``."""
    return rref(A.reverse_columns())[0].reverse_columns()


def trace_product(A: MatGF, B: MatGF) -> int:
    """``Tr(A B^T)``, i.e. the dot product of the row-concatenated entries."""
    A._check(B)
    if A.shape != B.shape:
        raise ShapeMismatch(f"{A.shape} vs {B.shape}")
    add, mul = A.ctx.add_table, A.ctx.mul_table
    s = 0
    for a, b in zip(A.entries, B.entries):
        if a and b:
            s = add[s][mul[a][b]]
    return s


# --- subspaces of F^m ----------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of F^m held as its canonical RREF basis (no zero rows)."""

    ctx: FieldCtx
    m: int
    basis: tuple = ()

    @classmethod
    def span(cls, ctx: FieldCtx, m: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        basis, _ = rref_rows(ctx, vectors, m)
        return cls(ctx, m, tuple(basis))

    @classmethod
    def zero(cls, ctx: FieldCtx, m: int) -> "Subspace":
        return cls(ctx, m, ())

    @classmethod
    def full(cls, ctx: FieldCtx, m: int) -> "Subspace":
        return cls.span(ctx, m, MatGF.identity(ctx, m).rows())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"Subspace(m={self.m}, basis={list(self.basis)})"

    def matrix(self) -> MatGF:
        return MatGF(self.ctx, self.dim, self.m, tuple(x for r in self.basis for x in r))

    def contains(self, v: Sequence[int]) -> bool:
        return rank_rows(self.ctx, list(self.basis) + [tuple(v)], self.m) == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.ctx, self.m, list(self.basis) + list(other.basis))

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.perp().__add__(other.perp()).perp()

    def perp(self) -> "Subspace":
        """Orthogonal complement under the standard inner product."""
        return Subspace.span(self.ctx, self.m, nullspace(self.ctx, self.basis, self.m))

    @property
    def piv(self) -> PivotList:
        return PivotList(self.m, tuple(next(j for j, x in enumerate(r) if x) + 1 for r in self.basis))

    @property
    def rpiv(self) -> PivotList:
        return rpiv(self.matrix()) if self.dim else PivotList(self.m)

    def vectors(self) -> Iterator[tuple]:
        """Every vector of the subspace, in coefficient order."""
        add, mul = self.ctx.add_table, self.ctx.mul_table
        for coeffs in product(range(self.ctx.q), repeat=self.dim):
            v = [0] * self.m
            for c, row in zip(coeffs, self.basis):
                if c:
                    mc = mul[c]
                    v = [add[a][mc[b]] for a, b in zip(v, row)]
            yield tuple(v)


def row_space(A: MatGF) -> Subspace:
    return Subspace.span(A.ctx, A.m, A.rows())


def rref_matrices(ctx: FieldCtx, lam: PivotList) -> Iterator[MatGF]:
    """All ``|lam| x m`` matrices in RREF with pivot list ``lam``."""
    m, a = lam.m, len(lam)
    pivset = set(lam.idx)
    free = [(i, j) for i, p in enumerate(lam.idx) for j in range(p + 1, m + 1) if j not in pivset]
    for vals in product(range(ctx.q), repeat=len(free)):
        e = [0] * (a * m)
        for i, p in enumerate(lam.idx):
            e[i * m + p - 1] = 1
        for (i, j), v in zip(free, vals):
            e[i * m + j - 1] = v
        yield MatGF(ctx, a, m, tuple(e))
