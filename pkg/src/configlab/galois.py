"""Table-driven arithmetic in GF(p^k).

An element is an int in ``range(q)`` whose base-p digits, least significant
first, are the coefficients of a polynomial in the generator ``x`` modulo
the field's irreducible modulus.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import UnsupportedField

MAX_FIELD = 2 ** 9


def factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise UnsupportedField(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise UnsupportedField(f"{q} is not a prime power")
    return p, k


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# polynomials over GF(p) as coefficient lists, low degree first

def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = a[:]
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < dm:
            break
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> list[int]:
    """Monic irreducible of degree k, smallest by (c0, c1, ..., c_{k-1})."""
    if k == 1:
        return [0, 1]
    for low in itertools.product(range(p), repeat=k):
        poly = list(low) + [1]
        if low[0] != 0 and is_irreducible(poly, p):
            return poly
    raise UnsupportedField(f"no irreducible of degree {k} over GF({p})")


class FieldTable:
    """GF(q) with precomputed log/antilog tables."""

    def __init__(self, q: int):
        if q > MAX_FIELD:
            raise UnsupportedField(f"q={q} exceeds the table cap {MAX_FIELD}")
        p, k = factor_prime_power(q)
        self.p, self.k, self.q = p, k, q
        self.modulus = smallest_irreducible(p, k)
        self._pw = [p ** i for i in range(k)]
        if p == 2:
            self.add_table = [[a ^ b for b in range(q)] for a in range(q)]
        else:
            self.add_table = [[self._add_digits(a, b) for b in range(q)] for a in range(q)]
        self.neg_table = [self._neg_digits(a) for a in range(q)]
        self._build_logs()

    def _digits(self, a: int) -> list[int]:
        return [(a // w) % self.p for w in self._pw]

    def _from_digits(self, ds) -> int:
        return sum(d * w for d, w in zip(ds, self._pw))

    def _add_digits(self, a, b):
        return self._from_digits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _neg_digits(self, a):
        return self._from_digits([(-x) % self.p for x in self._digits(a)])

    def _poly_mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        red = _poly_mod(prod, self.modulus, self.p) if self.k > 1 else [prod[0] % self.p]
        return self._from_digits(red + [0] * (self.k - len(red)))

    def _build_logs(self):
        q = self.q
        if q == 2:
            self.exp, self.log, self.generator = [1, 1], {1: 0}, 1
            return
        for g in range(2, q) if q > 2 else []:
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._poly_mul(x, g)
            if len(exp) == q - 1:
                self.generator = g
                self.exp = exp + exp
                self.log = {e: i for i, e in enumerate(exp)}
                return
        raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover

    # arithmetic

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p ** times)

    def elements(self) -> range:
        return range(self.q)

    def prime_subfield(self) -> list[int]:
        return [a for a in range(self.q) if self.frobenius(a) == a]

    def roots_of_unity(self, n: int) -> list[int]:
        """All x with x^n = 1, sorted by discrete log."""
        if (self.q - 1) % n:
            return []
        step = (self.q - 1) // n
        return [self.exp[i * step] for i in range(n)]

    # vectors

    def dot(self, u, w) -> int:
        acc = 0
        for a, b in zip(u, w):
            if a and b:
                acc = self.add_table[acc][self.exp[self.log[a] + self.log[b]]]
        return acc

    def scale(self, c: int, u) -> tuple:
        return tuple(self.mul(c, a) for a in u)

    def normalize(self, u) -> tuple:
        """Projective representative: first nonzero coordinate scaled to 1."""
        for a in u:
            if a:
                return self.scale(self.inv(a), u)
        raise ValueError("zero vector has no projective point")

    def __repr__(self):
        return f"FieldTable(q={self.q}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def field(q: int) -> FieldTable:
    return FieldTable(q)
