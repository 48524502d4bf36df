"""Finite fields GF(p^e) with elements encoded as integers in [0, p^e).

An element value ``v`` is read base ``p``: digit ``i`` is the coefficient of
``x^i`` in the polynomial basis modulo the field's defining polynomial.
All arithmetic goes through lookup tables built once per field.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from .errors import NonPrime, ReducibleModulus, UnsupportedSize

# Conway polynomials, coefficients low -> high, for the non-prime orders <= 16.
_MODULUS_TABLE = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (3, 2): (2, 2, 1),        # x^2 + 2x + 2
}

_TABLE_LIMIT = 1 << 12


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q = p**e``; raise NonPrime otherwise."""
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NonPrime(f"{q} is not a prime power")
    return p, e


# --- polynomials over GF(p), coefficient tuples low -> high -----------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        f = a[-1] * inv_lead % p
        s = len(a) - len(b)
        for i, bc in enumerate(b):
            a[s + i] = (a[s + i] - f * bc) % p
        _trim(a)
    return a


def _monic_polys(p: int, deg: int):
    for v in range(p**deg):
        coeffs = []
        for _ in range(deg):
            coeffs.append(v % p)
            v //= p
        yield coeffs + [1]


def is_irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    f = _trim([c % p for c in coeffs])
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(f, g, p):
                return False
    return True


class FieldCtx:
    """The field GF(p^e) defined by a fixed monic irreducible modulus.

    Instances are immutable; equality and hashing use ``(p, e, modulus)``.
    """

    __slots__ = ("p", "e", "q", "modulus", "_add", "_mul", "_neg", "_inv", "_trace")

    def __init__(self, p: int, e: int, modulus: Sequence[int]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(int(c) for c in modulus)
        self._build_tables()

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.e, self.modulus) == (
            other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    # element <-> digit vector
    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, d: Sequence[int]) -> int:
        v = 0
        for c in reversed(d):
            v = v * self.p + (c % self.p)
        return v

    def _raw_mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.from_digits(_poly_mod(prod, self.modulus, p) if e > 1 else prod)

    def _raw_add(self, a: int, b: int) -> int:
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def _build_tables(self) -> None:
        q = self.q
        if q > _TABLE_LIMIT:
            raise UnsupportedSize(f"field order {q} exceeds table limit {_TABLE_LIMIT}")
        if self.e == 1:
            p = self.p
            self._add = [[(a + b) % p for b in range(p)] for a in range(p)]
            self._mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            self._add = [[self._raw_add(a, b) for b in range(q)] for a in range(q)]
            self._mul = [[self._raw_mul(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._add[a].index(0) for a in range(q)]
        self._inv = [None] + [self._mul[a].index(1) for a in range(1, q)]
        tr = []
        for a in range(q):
            s, x = 0, a
            for _ in range(self.e):
                s = self._add[s][x]
                x = self.pow(x, self.p)
            tr.append(s)
        self._trace = tr

    # arithmetic
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def pow(self, a: int, k: int) -> int:
        r = 1
        for _ in range(k):
            r = self._mul[r][a]
        return r

    def trace(self, a: int) -> int:
        """Absolute trace to the prime field; the result lies in [0, p)."""
        return self._trace[a]

    def elements(self) -> range:
        return range(self.q)

    # raw tables for hot loops (read-only by convention)
    @property
    def add_table(self):
        return self._add

    @property
    def mul_table(self):
        return self._mul

    @property
    def neg_table(self):
        return self._neg

    @property
    def inv_table(self):
        return self._inv

    @property
    def trace_table(self):
        return self._trace


def field_new(p: int, e: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Construct GF(p^e).

    ``modulus`` lists the e+1 coefficients of a monic irreducible polynomial,
    constant term first.  When omitted, a built-in table supplies one for
    every order up to 16 (prime fields need none).
    """
    return _field_new(p, e, None if modulus is None else tuple(modulus))


@lru_cache(maxsize=None)
def _field_new(p: int, e: int, modulus: Optional[tuple]) -> FieldCtx:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        if e == 1:
            modulus = (0, 1)
        elif (p, e) in _MODULUS_TABLE:
            modulus = _MODULUS_TABLE[(p, e)]
        else:
            raise UnsupportedSize(f"no built-in modulus for GF({p}^{e}); pass one explicitly")
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != e + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {e}")
    if not is_irreducible_mod_p(modulus, p):
        raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
    return FieldCtx(p, e, modulus)


def field_of_order(q: int) -> FieldCtx:
    p, e = prime_power(q)
    return field_new(p, e)


def field_arith(ctx: FieldCtx, op: str, a: int, b: Optional[int] = None) -> int:
    """Dispatch one of ``add``, ``mul``, ``neg``, ``inv`` by name."""
    if op == "add":
        return ctx.add(a, b)
    if op == "mul":
        return ctx.mul(a, b)
    if op == "neg":
        return ctx.neg(a)
    if op == "inv":
        return ctx.inv(a)
    raise ValueError(f"unknown field operation {op!r}")


def abs_trace(ctx: FieldCtx, a: int) -> int:
    return ctx.trace(a)
