"""Arithmetic in GF(p^k).

Elements are integers ``0..q-1``.  The base-``p`` digits of an element are
the coefficients of its polynomial representative, lowest degree first, so
``a = c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` stands for
``c_0 + c_1 x + ... + c_{k-1} x^{k-1}``.  For prime ``q`` this is just
arithmetic mod ``q``.
"""
from __future__ import annotations

from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

# Monic irreducible moduli, coefficients lowest degree first.
MODULI: Dict[int, Tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 0, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (1, 0, 1),
    64: (1, 1, 0, 0, 0, 0, 1),
    81: (2, 1, 0, 0, 1),
    121: (1, 0, 1),
    125: (2, 3, 0, 1),
    128: (1, 1, 0, 0, 0, 0, 0, 1),
    169: (2, 0, 1),
}


def prime_power(q: int) -> Tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = None
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1
    if p is None:
        return q, 1
    k = 0
    r = q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def _poly_rem(a: List[int], m: Sequence[int], p: int) -> List[int]:
    """Remainder of ``a`` modulo monic ``m`` over GF(p); lists are low-first."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    rem = [c % p for c in a[:dm]]
    return rem + [0] * (dm - len(rem))


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive test: no monic divisor of degree ``1..k//2`` over GF(p)."""
    m = [c % p for c in modulus]
    k = len(m) - 1
    if k < 1 or m[-1] != 1:
        return False
    if k == 1:
        return True
    for deg in range(1, k // 2 + 1):
        for low in product(range(p), repeat=deg):
            div = list(low) + [1]
            if not any(_poly_rem(m, div, p)[:deg]):
                return False
    return True


class FiniteField:
    """The field of order ``q = p**k``."""

    def __init__(self, q: int, modulus: Optional[Sequence[int]] = None):
        p, k = prime_power(q)
        self.p, self.k, self.q = p, k, q
        if k == 1:
            self.modulus: Tuple[int, ...] = (0, 1)
        else:
            if modulus is None:
                if q not in MODULI:
                    raise ValueError(
                        f"no built-in modulus for GF({q}); pass an irreducible one"
                    )
                modulus = MODULI[q]
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1 or not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is not irreducible of degree {k} over GF({p})")
            self.modulus = modulus
        self._mul_table: Optional[List[List[int]]] = None

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q}, modulus={self.modulus})"

    # -- encoding ----------------------------------------------------------

    def digits(self, a: int) -> List[int]:
        out = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def encode(self, coeffs: Sequence[int]) -> int:
        a = 0
        for c in reversed(list(coeffs)[: self.k]):
            a = a * self.p + (c % self.p)
        return a

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.encode([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.encode([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        return self.encode([x - y for x, y in zip(self.digits(a), self.digits(b))])

    def _mul_slow(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.encode(_poly_rem(prod, self.modulus, self.p))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if self._mul_table is None and self.q <= 1024:
            self._mul_table = [[self._mul_slow(a_, b_) for b_ in range(self.q)] for a_ in range(self.q)]
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    def squares(self) -> set:
        """The nonzero squares."""
        return {self.mul(c, c) for c in range(1, self.q)}

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1


def finite_field(q: int, modulus: Optional[Sequence[int]] = None) -> FiniteField:
    return FiniteField(q, modulus)
