"""The subspace lattice of F^m and the pivot lattice: counts, duals, Moebius values."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Optional

from .budget import check_budget
from .gf import FieldCtx
from .laurent import LaurentPolyZ, ONE, ZERO
from .matgf import PivotList, Subspace, rref_matrices


@lru_cache(maxsize=None)
def gaussian_binomial(a: int, b: int) -> LaurentPolyZ:
    """The q-binomial [a, b] via q-Pascal: [a,b] = [a-1,b-1] + q^b [a-1,b]."""
    if b < 0 or a < 0 or b > a:
        return ZERO
    if b == 0 or b == a:
        return ONE
    return gaussian_binomial(a - 1, b - 1) + gaussian_binomial(a - 1, b).shift(b)


def gauss_int(a: int, b: int, q: int) -> int:
    return gaussian_binomial(a, b)(q)


def q_binom2(k: int) -> int:
    """binom(k, 2) as a plain integer (zero for k < 2)."""
    return k * (k - 1) // 2


def moebius_interval(w: int, v: int) -> LaurentPolyZ:
    """Moebius value of a nested pair W <= V with dim W = w, dim V = v."""
    if w > v:
        return ZERO
    d = v - w
    return LaurentPolyZ.monomial(q_binom2(d), -1 if d % 2 else 1)


def subspaces(ctx: FieldCtx, m: int, dim: Optional[int] = None) -> Iterator[Subspace]:
    """Lazily yield subspaces of F^m, each once, sorted by dimension then by RREF basis.

    Each subspace is produced from its unique RREF basis, so the stream needs
    no deduplication.
    """
    q = ctx.q
    dims = range(m + 1) if dim is None else [dim]
    total = sum(gauss_int(m, d, q) for d in dims)
    check_budget(total, f"subspaces of GF({q})^{m}")
    for d in dims:
        if not 0 <= d <= m:
            continue
        batch = []
        for cols in combinations(range(1, m + 1), d):
            for R in rref_matrices(ctx, PivotList(m, cols)):
                batch.append(tuple(R.rows()))
        for basis in sorted(batch):
            yield Subspace(ctx, m, basis)


def dual_subspace(U: Subspace) -> Subspace:
    return U.perp()


def dual_pivot_list(lam: PivotList) -> PivotList:
    return lam.dual()


def vectors(ctx: FieldCtx, m: int) -> Iterator[tuple]:
    return product(range(ctx.q), repeat=m)
