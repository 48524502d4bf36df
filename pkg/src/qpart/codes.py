"""Linear matrix codes: span, dual, shortenings, distributions and extremality."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .budget import check_budget
from .errors import BoundViolation, EmptyCode, ShapeMismatch
from .ferrers import rref_free_cells
from .gf import FieldCtx, field_of_order
from .kraw import KINDS, Distribution, label_of
from .lattice import gauss_int, q_binom2
from .matgf import (MatGF, PivotList, Subspace, nullspace, rank_rows, rref_matrices,
                    rref_rows)


@dataclass(frozen=True)
class MatrixCode:
    """A GF(q)-subspace of F^{n x m}; ``basis`` is the RREF of the flattened generators."""

    ctx: FieldCtx
    n: int
    m: int
    basis: tuple = ()

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.ctx.q ** self.k

    def generators(self) -> list[MatGF]:
        return [MatGF(self.ctx, self.n, self.m, v) for v in self.basis]

    def codewords(self) -> Iterator[MatGF]:
        """All ``q^k`` codewords, zero first."""
        check_budget(self.size, "codewords")
        ctx, nm = self.ctx, self.n * self.m
        add, mul = ctx.add_table, ctx.mul_table
        for coeffs in product(range(ctx.q), repeat=self.k):
            v = [0] * nm
            for c, g in zip(coeffs, self.basis):
                if c:
                    mc = mul[c]
                    v = [add[a][mc[b]] for a, b in zip(v, g)]
            yield MatGF(ctx, self.n, self.m, tuple(v))

    def __contains__(self, A: MatGF) -> bool:
        if A.shape != (self.n, self.m):
            return False
        return rank_rows(self.ctx, list(self.basis) + [A.entries], self.n * self.m) == self.k

    def __le__(self, other: "MatrixCode") -> bool:
        return all(g in other for g in self.generators())

    def __eq__(self, other):
        return (isinstance(other, MatrixCode) and self.ctx == other.ctx
                and (self.n, self.m, self.basis) == (other.n, other.m, other.basis))

    def __hash__(self):
        return hash((self.ctx, self.n, self.m, self.basis))

    def __repr__(self):
        return f"MatrixCode(q={self.ctx.q}, n={self.n}, m={self.m}, k={self.k})"

    # code file format
    def to_text(self) -> str:
        parts = [f"{self.n} {self.m} {self.ctx.q} {self.k}\n"]
        parts += [g.to_text() for g in self.generators()]
        return "\n".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "MatrixCode":
        blocks = [b for b in text.strip().split("\n\n") if b.strip()]
        if not blocks:
            raise ShapeMismatch("empty code file")
        header = blocks[0].strip().splitlines()
        n, m, q, k = (int(t) for t in header[0].split())
        ctx = field_of_order(q)
        rest = "\n".join(header[1:])
        mats_text = ([rest] if rest.strip() else []) + blocks[1:]
        gens = [MatGF.from_text(t, ctx) for t in mats_text]
        if len(gens) != k:
            raise ShapeMismatch(f"header announces {k} generators, found {len(gens)}")
        if any(g.shape != (n, m) for g in gens):
            raise ShapeMismatch(f"generator shape differs from header {n}x{m}")
        return code_span(gens, ctx, n, m)


def _from_vectors(ctx: FieldCtx, n: int, m: int, vectors: Iterable[Sequence[int]]) -> MatrixCode:
    basis, _ = rref_rows(ctx, vectors, n * m)
    return MatrixCode(ctx, n, m, tuple(basis))


def code_span(gens: Sequence[MatGF], ctx: Optional[FieldCtx] = None,
              n: Optional[int] = None, m: Optional[int] = None) -> MatrixCode:
    """The span of ``gens``; pass ``ctx, n, m`` when ``gens`` may be empty."""
    gens = list(gens)
    if gens:
        ctx = ctx or gens[0].ctx
        n = gens[0].n if n is None else n
        m = gens[0].m if m is None else m
    if ctx is None or n is None or m is None:
        raise ShapeMismatch("ctx, n and m are needed to span an empty generator list")
    for g in gens:
        if g.shape != (n, m) or g.ctx != ctx:
            raise ShapeMismatch(f"generator of shape {g.shape} in a {n}x{m} code")
    return _from_vectors(ctx, n, m, [g.entries for g in gens])


def zero_code(ctx: FieldCtx, n: int, m: int) -> MatrixCode:
    return MatrixCode(ctx, n, m, ())


def full_code(ctx: FieldCtx, n: int, m: int) -> MatrixCode:
    nm = n * m
    return MatrixCode(ctx, n, m, tuple(tuple(int(i == j) for j in range(nm)) for i in range(nm)))


def dual_code(C: MatrixCode) -> MatrixCode:
    """Kernel of the trace product against the generators."""
    return _from_vectors(C.ctx, C.n, C.m, nullspace(C.ctx, C.basis, C.n * C.m))


def shorten(C: MatrixCode, U: Subspace) -> MatrixCode:
    """C(U): codewords whose rows lie in U, found by solving the linear conditions.

    ``A = sum_i x_i G_i`` has every row in ``U`` iff every row is orthogonal
    to each basis vector of ``U-perp``; those are linear equations in ``x``.
    """
    if U.m != C.m or U.ctx != C.ctx:
        raise ShapeMismatch("subspace and code have different widths")
    ctx, n, m = C.ctx, C.n, C.m
    add, mul = ctx.add_table, ctx.mul_table
    W = U.perp().basis
    eqs = []
    for w in W:
        for row in range(n):
            eq = []
            for g in C.basis:
                s = 0
                for j in range(m):
                    s = add[s][mul[g[row * m + j]][w[j]]]
                eq.append(s)
            eqs.append(eq)
    sols = nullspace(ctx, eqs, C.k) if eqs else [tuple(int(i == j) for j in range(C.k)) for i in range(C.k)]
    vecs = []
    for x in sols:
        v = [0] * (n * m)
        for c, g in zip(x, C.basis):
            if c:
                v = [add[a][mul[c][b]] for a, b in zip(v, g)]
        vecs.append(v)
    return _from_vectors(ctx, n, m, vecs)


def shorten_piv(C: MatrixCode, lam: PivotList, side: str = "piv") -> frozenset:
    """``{A in C : piv(A) <= lam}`` (or rpiv), by filtering codewords."""
    kind = {"piv": "pivot", "rpiv": "rpivot"}[side]
    return frozenset(A for A in C.codewords() if label_of(A, kind).issubset(lam))


def subspaces_with_pivots(ctx: FieldCtx, lam: PivotList, side: str = "piv") -> Iterator[Subspace]:
    """Subspaces U of F^m with ``piv(U) = lam`` (or ``rpiv(U) = lam``)."""
    if side == "piv":
        for R in rref_matrices(ctx, lam):
            yield Subspace(ctx, lam.m, tuple(R.rows()))
    else:
        for R in rref_matrices(ctx, lam.flip()):
            yield Subspace.span(ctx, lam.m, [r[::-1] for r in R.rows()])


def shorten_piv_union(C: MatrixCode, lam: PivotList, side: str = "piv") -> frozenset:
    """The union of C(U) over the subspaces U whose pivots (or reverse pivots) equal ``lam``."""
    out = set()
    for U in subspaces_with_pivots(C.ctx, lam, side):
        out.update(shorten(C, U).codewords())
    return frozenset(out)


def distribution(C: MatrixCode, kind: str) -> Distribution:
    """Sparse ``{label: count}`` of the codewords over a partition kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown partition kind {kind!r}")
    dist: Distribution = {}
    for A in C.codewords():
        lab = label_of(A, kind)
        dist[lab] = dist.get(lab, 0) + 1
    return dist


def min_rank_distance(C: MatrixCode) -> int:
    if C.k == 0:
        raise EmptyCode("the zero code has no minimum distance")
    return min(lab for lab in distribution(C, "rank") if lab > 0)


def is_u_extremal(C: MatrixCode, U: Subspace) -> bool:
    """``C(U) = {0}`` and ``|C| = q^(n (m - dim U))``; the bound itself is asserted."""
    trivial = shorten(C, U).k == 0
    limit = C.n * (C.m - U.dim)
    if trivial and C.k > limit:
        raise BoundViolation(f"C(U) = 0 but dim C = {C.k} > {limit}")
    return trivial and C.k == limit


def is_piv_extremal(C: MatrixCode, lam: PivotList, side: str = "piv") -> bool:
    """``C(lam, side) = {0}`` and ``|C| = q^(n (m - |lam|))``."""
    if C.k != C.n * (C.m - len(lam)):
        return False
    return all(shorten(C, U).k == 0 for U in subspaces_with_pivots(C.ctx, lam, side))


def singleton_bound_exponent(n: int, m: int, d: int) -> int:
    """``log_q`` of the largest size of a code with minimum distance ``d``."""
    return max(n, m) * (min(n, m) - d + 1)


def is_mrd(C: MatrixCode) -> bool:
    if C.k == 0:
        return True
    return C.k == singleton_bound_exponent(C.n, C.m, min_rank_distance(C))


# --- constructions -----------------------------------------------------------

def _poly_divides(ctx: FieldCtx, g: Sequence[int], f: Sequence[int]) -> bool:
    """Whether monic ``g`` divides ``f`` over ``ctx`` (coefficients low to high)."""
    f = list(f)
    add, mul, neg = ctx.add_table, ctx.mul_table, ctx.neg_table
    dg = len(g) - 1
    for top in range(len(f) - 1, dg - 1, -1):
        c = f[top]
        if c:
            for i, gc in enumerate(g):
                f[top - dg + i] = add[f[top - dg + i]][neg[mul[c][gc]]]
    return not any(f[:dg])


def irreducible_poly(ctx: FieldCtx, degree: int) -> tuple:
    """The first monic irreducible of the given degree over ``ctx``, in base-q order."""
    q = ctx.q
    for v in range(q**degree):
        f = [(v // q**i) % q for i in range(degree)] + [1]
        if f[0] == 0 and degree > 1:
            continue
        ok = True
        for d in range(1, degree // 2 + 1):
            for w in range(q**d):
                g = [(w // q**i) % q for i in range(d)] + [1]
                if _poly_divides(ctx, g, f):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return tuple(f)
    raise ValueError(f"no irreducible polynomial of degree {degree}")


def companion_matrix(ctx: FieldCtx, f: Sequence[int]) -> MatGF:
    """Ones on the subdiagonal, last column ``-f_0, ..., -f_(d-1)``."""
    d = len(f) - 1
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = ctx.neg(f[i])
    return MatGF.from_rows(ctx, rows, d)


def mrd_field_embedding(ctx: FieldCtx, m: int, n: Optional[int] = None) -> MatrixCode:
    """The field GF(q^n) as ``F_q[P]`` for a companion matrix ``P``, keeping the first ``m`` columns.

    With ``n = m`` (the default) this is an ``m x m`` code with ``q^m`` elements
    and minimum distance ``m``.  For ``m < n`` the truncation is an ``n x m``
    MRD code of distance ``m`` and size ``q^n``.
    """
    n = m if n is None else n
    if not 1 <= m <= n:
        raise ShapeMismatch("need 1 <= m <= n")
    P = companion_matrix(ctx, irreducible_poly(ctx, n))
    powers = [MatGF.identity(ctx, n)]
    for _ in range(n - 1):
        powers.append(powers[-1] @ P)
    return code_span([X.columns_subset(range(1, m + 1)) for X in powers])


def pad_code(C1: MatrixCode, m2: int, mode: str = "zero_pad", position: str = "right") -> MatrixCode:
    """Widen ``C1`` by ``m2`` columns.

    ``zero_pad`` gives ``{(A | 0)}``; ``full_pad`` gives ``{(A | B)}`` with ``B``
    ranging over all of F^{n x m2}.  ``position="left"`` puts the new columns
    first instead, e.g. ``{(B | A)}``.
    """
    if mode not in ("zero_pad", "full_pad") or position not in ("left", "right"):
        raise ValueError(f"bad pad mode {mode!r} / position {position!r}")
    ctx, n = C1.ctx, C1.n
    zero = MatGF.zeros(ctx, n, m2)

    def place(A: MatGF, B: MatGF) -> MatGF:
        return A.hstack(B) if position == "right" else B.hstack(A)

    gens = [place(A, zero) for A in C1.generators()]
    if mode == "full_pad":
        gens += [place(MatGF.zeros(ctx, n, C1.m), MatGF.unit(ctx, n, m2, i, j))
                 for i in range(1, n + 1) for j in range(1, m2 + 1)]
    return code_span(gens, ctx, n, C1.m + m2)


# --- predicted distributions ------------------------------------------------------

def mrd_rs(q: int, n: int, d: int, v: int) -> int:
    """Row-space count P^rs(C, V), dim V = v, for a nonzero MRD code of distance d."""
    total = 0
    for i in range(min(d - 1, v) + 1):
        total += gauss_int(v, i, q) * (-1) ** ((v - i) % 2) * q ** q_binom2(v - i)
    for i in range(d, v + 1):
        total += gauss_int(v, i, q) * q ** (n * (i - d + 1)) * (-1) ** ((v - i) % 2) * q ** q_binom2(v - i)
    return total


def rigid_rs(q: int, n: int, u: int, v: int) -> int:
    """Row-space count for V below T when C is U-extremal for every u-dim U <= T."""
    total = 0
    for i in range(min(u, v) + 1):
        total += gauss_int(v, i, q) * (-1) ** ((v - i) % 2) * q ** q_binom2(v - i)
    for i in range(u + 1, v + 1):
        total += gauss_int(v, i, q) * q ** (n * (i - u)) * (-1) ** ((v - i) % 2) * q ** q_binom2(v - i)
    return total


def rigid_piv(q: int, n: int, u: int, mu: PivotList) -> int:
    """Pivot count P^piv(C, mu) under pivot-extremality below some lam >= mu.

    The block ``mu`` is the disjoint union of the row-space blocks of the
    ``q^c(mu)`` subspaces with pivot list ``mu``, each contributing
    :func:`rigid_rs`.
    """
    return q ** rref_free_cells(mu) * rigid_rs(q, n, u, len(mu))


def rigid_piv_uncorrected(q: int, n: int, u: int, mu: PivotList) -> int:
    """:func:`rigid_rs` scaled by the full matrix-block size (diagnostic only)."""
    size = q ** rref_free_cells(mu)
    for i in range(len(mu)):
        size *= q**n - q**i
    return size * rigid_rs(q, n, u, len(mu))


def predicted_distribution(kind: str, **params) -> int:
    """Dispatch ``mrd_rs`` (q, n, d, v), ``rigid_rs`` (q, n, u, v) or ``rigid_piv`` (q, n, u, mu)."""
    funcs = {"mrd_rs": mrd_rs, "rigid_rs": rigid_rs, "rigid_piv": rigid_piv}
    if kind not in funcs:
        raise ValueError(f"unknown prediction {kind!r}")
    return funcs[kind](**params)


def binomial_moment(C: MatrixCode, nu: int):
    """Both sides of the nu-th row-space binomial moment identity.

    ``lhs = sum_V [m - dim V, nu] P^rs(C, V)`` and
    ``rhs = |C| / q^(n nu) * sum_W [m - dim W, m - nu] P^rs(C-perp, W)``;
    ``rhs`` is an ``int`` when integral, else a ``Fraction``.
    """
    if not 0 <= nu <= C.m:
        raise ValueError("nu must lie in [0, m]")
    q, m = C.ctx.q, C.m
    lhs = sum(gauss_int(m - V.dim, nu, q) * c for V, c in distribution(C, "rowspace").items())
    s = sum(gauss_int(m - W.dim, m - nu, q) * c for W, c in distribution(dual_code(C), "rowspace").items())
    rhs = Fraction(C.size * s, q ** (C.n * nu))
    return lhs, int(rhs) if rhs.denominator == 1 else rhs


# --- random codes -------------------------------------------------------------------

DEFAULT_SEED = 20240101


def random_code(ctx: FieldCtx, n: int, m: int, rng: random.Random, k: Optional[int] = None) -> MatrixCode:
    """Span of ``k`` uniformly random generators (``k`` itself uniform in ``[0, nm]`` if omitted).

    The result may have dimension below ``k`` when generators are dependent.
    """
    if k is None:
        k = rng.randint(0, n * m)
    gens = [MatGF(ctx, n, m, tuple(rng.randrange(ctx.q) for _ in range(n * m))) for _ in range(k)]
    return code_span(gens, ctx, n, m)


def random_codes(ctx: FieldCtx, n: int, m: int, count: int, seed: int = DEFAULT_SEED) -> list[MatrixCode]:
    rng = random.Random(seed)
    return [random_code(ctx, n, m, rng) for _ in range(count)]
