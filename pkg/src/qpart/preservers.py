"""Linear maps of F^{n x m} that preserve rank, row space or pivots."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Optional, Union

import numpy as np

from .budget import check_budget
from .codes import MatrixCode
from .errors import BudgetExceeded, ShapeMismatch
from .gf import FieldCtx
from .kraw import ambient, label_of
from .matgf import MatGF, rank

PRESERVED = {"rank": "rank", "rowspace": "rowspace", "pivot": "pivot"}

# exhaustive classification is only attempted below this many candidate matrices
CLASSIFY_LIMIT = 1 << 16


@dataclass(frozen=True)
class BilinearMap:
    """``A -> U A V`` or, for square matrices, ``A -> U A^T V``."""

    U: MatGF
    V: MatGF
    transposed: bool = False

    def __post_init__(self):
        if self.U.n != self.U.m or self.V.n != self.V.m:
            raise ShapeMismatch("U and V must be square")
        if self.transposed and self.U.n != self.V.n:
            raise ShapeMismatch("the transpose branch needs n = m")

    @property
    def shape(self) -> tuple[int, int]:
        return self.U.n, self.V.n

    def __call__(self, A: MatGF) -> MatGF:
        if A.shape != self.shape:
            raise ShapeMismatch(f"map on {self.shape} applied to {A.shape}")
        return self.U @ (A.T if self.transposed else A) @ self.V


@dataclass(frozen=True)
class GeneralLinearMap:
    """A linear map given by its ``nm x nm`` matrix on row-concatenated entries.

    ``vec(f(A)) = M vec(A)`` with ``vec`` the row-major flattening.
    """

    ctx: FieldCtx
    n: int
    m: int
    M: MatGF

    def __post_init__(self):
        if self.M.shape != (self.n * self.m, self.n * self.m):
            raise ShapeMismatch("matrix size does not match n*m")

    def __call__(self, A: MatGF) -> MatGF:
        if A.shape != (self.n, self.m):
            raise ShapeMismatch(f"map on {(self.n, self.m)} applied to {A.shape}")
        col = MatGF(self.ctx, self.n * self.m, 1, A.entries)
        return MatGF(self.ctx, self.n, self.m, (self.M @ col).entries)

    def compose(self, other: "GeneralLinearMap") -> "GeneralLinearMap":
        """``self`` after ``other``."""
        return GeneralLinearMap(self.ctx, self.n, self.m, self.M @ other.M)

    @classmethod
    def from_callable(cls, ctx: FieldCtx, n: int, m: int, f: Callable[[MatGF], MatGF]) -> "GeneralLinearMap":
        nm = n * m
        cols = [f(MatGF(ctx, n, m, tuple(int(i == k) for i in range(nm)))).entries for k in range(nm)]
        return cls(ctx, n, m, MatGF.from_rows(ctx, cols, nm).T)


LinearMap = Union[BilinearMap, GeneralLinearMap]


def apply_map(f: LinearMap, A: MatGF) -> MatGF:
    return f(A)


def to_general(f: BilinearMap) -> GeneralLinearMap:
    n, m = f.shape
    return GeneralLinearMap.from_callable(f.U.ctx, n, m, f)


def is_preserving(f: Callable[[MatGF], MatGF], kind: str, domain: MatrixCode) -> bool:
    """Whether ``label(f(A)) = label(A)`` for every ``A`` in ``domain``."""
    if kind not in PRESERVED:
        raise ValueError(f"unknown preserved property {kind!r}")
    return all(label_of(f(A), kind) == label_of(A, kind) for A in domain.codewords())


# --- structured families ------------------------------------------------------

def general_linear(ctx: FieldCtx, n: int) -> list[MatGF]:
    """GL_n(F), in lexicographic entry order."""
    check_budget(ctx.q ** (n * n), "square matrices")
    out = []
    for e in product(range(ctx.q), repeat=n * n):
        A = MatGF(ctx, n, n, e)
        if rank(A) == n:
            out.append(A)
    return out


def upper_triangular(ctx: FieldCtx, n: int) -> list[MatGF]:
    """Invertible upper-triangular n x n matrices."""
    return [A for A in general_linear(ctx, n)
            if all(A[i, j] == 0 for i in range(n) for j in range(i))]


def structured_maps(ctx: FieldCtx, n: int, m: int, kind: str) -> Iterator[BilinearMap]:
    """The normal forms of preservers of ``kind`` on the whole space, as (U, V) pairs.

    rowspace: ``A -> UA``; pivot: ``A -> UAV`` with V upper triangular;
    rank: ``A -> UAV``, plus ``A -> U A^T V`` when ``n = m``.
    """
    if kind not in PRESERVED:
        raise ValueError(f"unknown preserved property {kind!r}")
    GLn = general_linear(ctx, n)
    if kind == "rowspace":
        I = MatGF.identity(ctx, m)
        for U in GLn:
            yield BilinearMap(U, I)
        return
    Vs = upper_triangular(ctx, m) if kind == "pivot" else general_linear(ctx, m)
    for U in GLn:
        for V in Vs:
            yield BilinearMap(U, V)
    if kind == "rank" and n == m:
        for U in GLn:
            for V in Vs:
                yield BilinearMap(U, V, transposed=True)


def structured_family(ctx: FieldCtx, n: int, m: int, kind: str) -> frozenset:
    """Distinct maps of :func:`structured_maps`, as nm x nm matrices."""
    return frozenset(to_general(f).M for f in structured_maps(ctx, n, m, kind))


# --- exhaustive classification ------------------------------------------------------

def _field_matmul(ctx: FieldCtx, M: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Batched ``M @ X`` over the field: M is (c, k, k), X is (k, N); returns (c, k, N)."""
    if ctx.e == 1:
        return np.einsum("cik,kn->cin", M, X) % ctx.p
    mul = np.array(ctx.mul_table, dtype=np.int64)
    add = np.array(ctx.add_table, dtype=np.int64)
    out = np.zeros((M.shape[0], M.shape[1], X.shape[1]), dtype=np.int64)
    for k in range(M.shape[2]):
        out = add[out, mul[M[:, :, k][:, :, None], X[k][None, None, :]]]
    return out


def classify_preservers(ctx: FieldCtx, n: int, m: int, kind: str) -> frozenset:
    """Every invertible linear map of F^{n x m} preserving ``kind``, by exhaustive search.

    Candidates are all ``nm x nm`` matrices; the search is refused above
    ``CLASSIFY_LIMIT`` candidates.
    """
    if kind not in PRESERVED:
        raise ValueError(f"unknown preserved property {kind!r}")
    q, nm = ctx.q, n * m
    total = q ** (nm * nm)
    if total > CLASSIFY_LIMIT:
        raise BudgetExceeded(f"{total} candidate maps exceed the classification limit {CLASSIFY_LIMIT}")
    check_budget(total, "candidate linear maps")
    amb = ambient(ctx, n, m)
    labels = amb.labels(kind)
    ids = {lab: i for i, lab in enumerate(dict.fromkeys(labels))}
    label_id = np.array([ids[l] for l in labels], dtype=np.int64)

    idx = np.arange(total, dtype=np.int64)
    cand = np.empty((total, nm * nm), dtype=np.int64)
    for pos in range(nm * nm - 1, -1, -1):
        cand[:, pos] = idx % q
        idx //= q
    cand = cand.reshape(total, nm, nm)

    X = amb.mats.T  # column a is vec(A_a)
    images = _field_matmul(ctx, cand, X)  # (c, nm, N)
    weights = q ** np.arange(nm - 1, -1, -1, dtype=np.int64)
    image_index = np.einsum("cin,i->cn", images, weights)
    ok = (label_id[image_index] == label_id[None, :]).all(axis=1)
    # injective: only the zero matrix maps to zero
    ok &= ~(image_index[:, 1:] == 0).any(axis=1)
    found = []
    for c in np.nonzero(ok)[0]:
        found.append(MatGF(ctx, nm, nm, tuple(int(x) for x in cand[c].ravel())))
    return frozenset(found)


# --- extensions ---------------------------------------------------------------------

def extension_search(C: MatrixCode, f: Callable[[MatGF], MatGF], kind: str) -> Optional[BilinearMap]:
    """A structured preserver of ``kind`` agreeing with ``f`` on ``C``, or ``None``.

    ``f`` is assumed linear, so agreement on a basis of ``C`` suffices.  When
    ``None`` is returned every member of :func:`structured_maps` was tried.
    """
    gens = C.generators()
    targets = [f(G) for G in gens]
    for g in structured_maps(C.ctx, C.n, C.m, kind):
        if all(g(G) == T for G, T in zip(gens, targets)):
            return g
    return None


def structured_count(ctx: FieldCtx, n: int, m: int, kind: str) -> int:
    """Number of (U, V[, transposed]) triples scanned by :func:`extension_search`."""
    return sum(1 for _ in structured_maps(ctx, n, m, kind))


def transpose_map(A: MatGF) -> MatGF:
    return A.T


def notext1_example(ctx: FieldCtx):
    """``C = {(A | 0)}`` in F^{2x3} with ``f(A | 0) = (A^T | 0)``; returns ``(C, f)``."""
    from .codes import full_code, pad_code
    C = pad_code(full_code(ctx, 2, 2), 1, "zero_pad")

    def f(B: MatGF) -> MatGF:
        A = B.columns_subset([1, 2])
        return A.T.hstack(MatGF.zeros(ctx, 2, 1))

    return C, f


NOTEXT2_P = ((0, 0, 1), (1, 0, 1), (0, 1, 0))


def notext2_example(ctx: FieldCtx):
    """``C = F[P]`` in F^{3x3} for the companion matrix of x^3 + x + 1, with ``f = transpose``."""
    from .codes import code_span
    P = MatGF.from_rows(ctx, NOTEXT2_P)
    powers = [MatGF.identity(ctx, 3), P, P @ P]
    return code_span(powers), transpose_map
