"""Exact elements of Z[zeta_p] on the power basis 1, zeta, ..., zeta^(p-2)."""

from __future__ import annotations

from typing import Sequence

from .gf import is_prime


class CycInt:
    """A cyclotomic integer; ``zeta^(p-1)`` is rewritten as ``-(1 + ... + zeta^(p-2))``."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords: Sequence[int] = ()):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        c = [int(x) for x in coords] + [0] * (p - 1 - len(coords))
        if len(c) != p - 1:
            raise ValueError("too many coordinates")
        self.p = p
        self.coords = tuple(c)

    @classmethod
    def from_exponent_counts(cls, p: int, counts: Sequence[int]) -> "CycInt":
        """The sum ``sum_k counts[k] * zeta^k`` for ``k`` in ``[0, p)``."""
        counts = list(counts) + [0] * (p - len(counts))
        top = counts[p - 1]
        return cls(p, [counts[k] - top for k in range(p - 1)])

    @classmethod
    def zeta_power(cls, p: int, k: int) -> "CycInt":
        counts = [0] * p
        counts[k % p] = 1
        return cls.from_exponent_counts(p, counts)

    def _check(self, other: "CycInt") -> None:
        if self.p != other.p:
            raise ValueError("mixing different roots of unity")

    def __add__(self, other):
        if isinstance(other, int):
            other = CycInt(self.p, [other])
        self._check(other)
        return CycInt(self.p, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.p, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.p, [a * other for a in self.coords])
        self._check(other)
        p = self.p
        counts = [0] * p
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    counts[(i + j) % p] += a * b
        return CycInt.from_exponent_counts(p, counts)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.coords[0] == other
        return isinstance(other, CycInt) and self.p == other.p and self.coords == other.coords

    def __hash__(self):
        return hash((self.p, self.coords))

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coords[0]

    def __repr__(self):
        return f"CycInt(p={self.p}, coords={self.coords})"
