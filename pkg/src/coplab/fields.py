"""Finite fields GF(p^e) as lookup tables over polynomial arithmetic."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import NotAPrimePower


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


def prime_powers_upto(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if prime_power(q)]


def _polymod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of a modulo monic f; coefficient lists are lowest degree first."""
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return [x % p for x in a[:df]] + [0] * max(0, df - len(a))


def _is_irreducible(f: list[int], p: int) -> bool:
    e = len(f) - 1
    for deg in range(1, e // 2 + 1):
        for low in product(range(p), repeat=deg):
            g = list(low) + [1]
            if not any(_polymod(f, g, p)):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree e over GF(p).

    Candidates are ordered by their coefficient tuple from x^(e-1) down to x^0.
    """
    for lead_first in product(range(p), repeat=e):
        f = list(reversed(lead_first)) + [1]
        if _is_irreducible(f, p):
            return f
    raise AssertionError("an irreducible polynomial always exists")


class GF:
    """The field with q = p^e elements, encoded as integers 0..q-1.

    Integer ``k`` stands for the polynomial whose base-p digits (lowest first)
    are its coefficients; addition and multiplication are table lookups.
    """

    def __init__(self, q: int):
        pe = prime_power(q)
        if pe is None:
            raise NotAPrimePower(f"{q} is not a prime power")
        self.q = q
        self.p, self.e = pe
        p, e = pe
        self.modulus = smallest_irreducible(p, e) if e > 1 else [0, 1]
        digits = [self._digits(k) for k in range(q)]
        self.add = [[self._encode([(x + y) % p for x, y in zip(digits[a], digits[b])])
                     for b in range(q)] for a in range(q)]
        self.mul = [[self._encode(self._polymul(digits[a], digits[b])) for b in range(q)]
                    for a in range(q)]
        self.neg = [self.add[a].index(0) for a in range(q)]
        self.inv = [0] + [self.mul[a].index(1) for a in range(1, q)]

    def _digits(self, k: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(k % self.p)
            k //= self.p
        return out

    def _encode(self, coeffs: list[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(coeffs))

    def _polymul(self, a: list[int], b: list[int]) -> list[int]:
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] += x * y
        if self.e == 1:
            return [prod[0] % self.p]
        return _polymod(prod, self.modulus, self.p)

    def dot(self, x, y) -> int:
        acc = 0
        for a, b in zip(x, y):
            acc = self.add[acc][self.mul[a][b]]
        return acc


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
