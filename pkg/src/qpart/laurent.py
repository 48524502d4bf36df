"""Laurent polynomials in one indeterminate ``q`` with integer coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Union

from .errors import InexactDivision

NEG_INF = -math.inf
POS_INF = math.inf

Scalar = Union[int, "LaurentPolyZ"]


class LaurentPolyZ:
    """An element of Z[q, q^-1], stored as ``{exponent: nonzero coefficient}``.

    >>> q = LaurentPolyZ.q()
    >>> str((q - 1) * (q + 1))
    'q^2 - 1'
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            self._c = {}
        elif isinstance(coeffs, int):
            self._c = {0: coeffs} if coeffs else {}
        else:
            self._c = {int(k): int(v) for k, v in coeffs.items() if v}

    @classmethod
    def q(cls) -> "LaurentPolyZ":
        return cls({1: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPolyZ":
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self):
        """Highest exponent; ``-inf`` for the zero polynomial."""
        return max(self._c) if self._c else NEG_INF

    def tdegree(self):
        """Lowest exponent (trailing degree); ``+inf`` for zero."""
        return min(self._c) if self._c else POS_INF

    def is_polynomial(self) -> bool:
        return all(k >= 0 for k in self._c)

    # ring operations
    @staticmethod
    def _lift(x: Scalar) -> "LaurentPolyZ":
        if isinstance(x, LaurentPolyZ):
            return x
        if isinstance(x, int):
            return LaurentPolyZ(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return LaurentPolyZ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolyZ({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise InexactDivision("only monomials are units")
            (e, c), = self._c.items()
            if c not in (1, -1):
                raise InexactDivision("only +-q^k are units")
            return LaurentPolyZ({e * k: c ** (-k)})
        r = LaurentPolyZ(1)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def shift(self, k: int) -> "LaurentPolyZ":
        """Multiply by q^k."""
        return LaurentPolyZ({e + k: c for e, c in self._c.items()})

    def invert_variable(self) -> "LaurentPolyZ":
        """Substitute q -> q^-1."""
        return LaurentPolyZ({-e: c for e, c in self._c.items()})

    def __call__(self, q):
        """Evaluate at ``q``; an ``int`` when no negative exponents survive."""
        if self.is_polynomial() and isinstance(q, int):
            return sum(c * q**e for e, c in self._c.items())
        return sum((c * Fraction(q) ** e for e, c in self._c.items()), Fraction(0))

    def exact_div(self, divisor: "LaurentPolyZ") -> "LaurentPolyZ":
        """Quotient in Z[q, q^-1]; raise InexactDivision unless it exists."""
        divisor = self._lift(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolyZ()
        da, dd = self.tdegree(), divisor.tdegree()
        num = [self[e] for e in range(da, self.degree() + 1)]
        den = [divisor[e] for e in range(dd, divisor.degree() + 1)]
        # den[0] != 0, so polynomial long division decides divisibility
        if len(num) < len(den):
            raise InexactDivision("divisor has larger span than dividend")
        quot = [0] * (len(num) - len(den) + 1)
        lead = den[-1]
        for i in range(len(quot) - 1, -1, -1):
            top = num[i + len(den) - 1]
            if top % lead:
                raise InexactDivision("non-integral quotient coefficient")
            f = top // lead
            quot[i] = f
            if f:
                for j, d in enumerate(den):
                    num[i + j] -= f * d
        if any(num):
            raise InexactDivision("nonzero remainder")
        return LaurentPolyZ({i + da - dd: c for i, c in enumerate(quot)})

    def __repr__(self):
        return f"LaurentPolyZ({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if a == 1 else f"{a}{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict[str, int]:
        return {str(e): self._c[e] for e in sorted(self._c, reverse=True)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPolyZ":
        return cls({int(k): int(v) for k, v in data.items()})


Q = LaurentPolyZ.q()
ONE = LaurentPolyZ(1)
ZERO = LaurentPolyZ()
