"""Design detection, arithmetic existence tests and Hadamard matrices."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import gcd, isqrt

from .errors import InvalidOrder, InvalidParams, NotHadamard, NotSymmetric
from .galois import is_prime
from .incidence import IncidenceStructure, validate_tactical


@dataclass(frozen=True)
class BCRVerdict:
    passed: bool
    reason: str | None = None

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {"pass": self.passed, "reason": self.reason}


@dataclass(frozen=True)
class DesignReport:
    is_design: bool
    lam: int | None = None
    symmetric_dual_lambda_holds: bool | None = None
    bcr_verdict: BCRVerdict | None = None

    def to_dict(self):
        return {
            "is_design": self.is_design,
            "lambda": self.lam,
            "symmetric_dual_lambda_holds": self.symmetric_dual_lambda_holds,
            "bcr": self.bcr_verdict.to_dict() if self.bcr_verdict else None,
        }


def check_design_equations(v: int, k: int, b: int, r: int, lam: int) -> bool:
    return v * k == b * r and k * (r - 1) == lam * (v - 1)


def design_lambda(s: IncidenceStructure) -> DesignReport:
    p = validate_tactical(s)
    rows = s.rows
    counts = {(rows[x] & rows[y]).bit_count() for x in range(s.v) for y in range(x + 1, s.v)}
    if len(counts) != 1 or 0 in counts:
        return DesignReport(False)
    lam = counts.pop()
    dual_holds = None
    bcr = None
    if p.symmetric:
        cols = s.cols
        dual_holds = all((cols[i] & cols[j]).bit_count() == lam
                         for i in range(s.b) for j in range(i + 1, s.b))
        bcr = bruck_chowla_ryser(p.v, p.k, lam)
    return DesignReport(True, lam, dual_holds, bcr)


# ternary quadratic forms

def squarefree_part(n: int) -> int:
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            out *= d
        d += 1
    return sign * out * n


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_square_mod(x: int, m: int) -> bool:
    """x a square modulo squarefree m, with gcd(x, m) = 1."""
    for p in _prime_factors(m):
        if p == 2:
            continue
        if pow(x % p, (p - 1) // 2, p) != 1:
            return False
    return True


def reduce_ternary(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Squarefree, pairwise coprime coefficients with the same solvability."""
    while True:
        g = gcd(gcd(a, b), c)
        a, b, c = a // g, b // g, c // g
        a, b, c = squarefree_part(a), squarefree_part(b), squarefree_part(c)
        for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
            co = [a, b, c]
            g = gcd(co[i], co[j])
            if g > 1:
                # g divides the third variable; substitute it as g * z'
                co[i] //= g
                co[j] //= g
                co[k] *= g
                a, b, c = co
                break
        else:
            return a, b, c


def legendre_solvable(a: int, b: int, c: int) -> bool:
    """Whether a x^2 + b y^2 + c z^2 = 0 has a nontrivial integer solution."""
    if a == 0 or b == 0 or c == 0:
        raise InvalidParams("coefficients must be nonzero")
    a, b, c = reduce_ternary(a, b, c)
    if (a > 0) == (b > 0) == (c > 0):
        return False
    return (_is_square_mod(-b * c, abs(a))
            and _is_square_mod(-c * a, abs(b))
            and _is_square_mod(-a * b, abs(c)))


def bruck_chowla_ryser(v: int, k: int, lam: int) -> BCRVerdict:
    if k * (k - 1) != lam * (v - 1):
        raise InvalidParams(f"k(k-1)={k * (k - 1)} but lambda(v-1)={lam * (v - 1)}")
    n = k - lam
    if v % 2 == 0:
        if isqrt(n) ** 2 == n:
            return BCRVerdict(True)
        return BCRVerdict(False, f"v even and k-lambda={n} is not a square")
    if n == 0 or lam == 0:
        return BCRVerdict(True)
    sign = -1 if ((v - 1) // 2) % 2 else 1
    if legendre_solvable(n, sign * lam, -1):
        return BCRVerdict(True)
    form = f"{n}x^2 {'-' if sign < 0 else '+'} {lam}y^2 - z^2"
    return BCRVerdict(False, f"{form} has no nontrivial integer zero")


# Hadamard matrices

@dataclass(frozen=True)
class SignMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise InvalidOrder("sign matrix must be square of order n")
        if any(e not in (1, -1) for r in self.entries for e in r):
            raise InvalidOrder("entries must be +1 or -1")

    @classmethod
    def from_rows(cls, rows) -> "SignMatrix":
        rows = tuple(tuple(int(e) for e in r) for r in rows)
        return cls(len(rows), rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.entries)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "SignMatrix":
        return cls.from_rows(r for r in csv.reader(io.StringIO(text)) if r)


def hadamard_check(m: SignMatrix) -> bool:
    rows = m.entries
    for i in range(m.n):
        for j in range(i + 1, m.n):
            if sum(x * y for x, y in zip(rows[i], rows[j])):
                return False
    assert m.n in (1, 2) or m.n % 4 == 0
    return True


def sylvester(k: int) -> SignMatrix:
    if k < 0:
        raise InvalidOrder("k must be nonnegative")
    h = [[1]]
    for _ in range(k):
        h = [row + row for row in h] + [row + [-e for e in row] for row in h]
    return SignMatrix.from_rows(h)


def paley(q: int) -> SignMatrix:
    """Paley construction I of order q+1 for a prime q = 3 mod 4."""
    if not is_prime(q) or q % 4 != 3:
        raise InvalidOrder(f"paley needs a prime q = 3 mod 4, got {q}")
    squares = {(x * x) % q for x in range(1, q)}

    def chi(a):
        a %= q
        return 0 if a == 0 else (1 if a in squares else -1)

    n = q + 1
    s = [[0] * n for _ in range(n)]
    for j in range(1, n):
        s[0][j] = 1
        s[j][0] = -1
    for i in range(q):
        for j in range(q):
            s[i + 1][j + 1] = chi(j - i)
    h = [[s[i][j] + (1 if i == j else 0) for j in range(n)] for i in range(n)]
    return SignMatrix.from_rows(h)


@dataclass(frozen=True)
class HadamardDesign:
    structure: IncidenceStructure
    t: int
    lam: int
    degenerate: bool


def normalize_hadamard(m: SignMatrix) -> SignMatrix:
    """Negate columns to make row 0 positive, then rows to make column 0 positive."""
    rows = [list(r) for r in m.entries]
    for j in range(m.n):
        if rows[0][j] < 0:
            for r in rows:
                r[j] = -r[j]
    for r in rows:
        if r[0] < 0:
            r[:] = [-e for e in r]
    return SignMatrix.from_rows(rows)


def hadamard_to_design(m: SignMatrix) -> HadamardDesign:
    if not hadamard_check(m):
        raise NotHadamard("rows are not pairwise orthogonal")
    if m.n < 4:
        raise InvalidOrder("need order 4t >= 4")
    norm = normalize_hadamard(m).entries
    inner = [[1 if e > 0 else 0 for e in r[1:]] for r in norm[1:]]
    t = m.n // 4
    return HadamardDesign(IncidenceStructure.from_matrix(inner), t, t - 1, t == 1)


def design_to_sign_matrix(s: IncidenceStructure) -> SignMatrix:
    if s.v != s.b:
        raise NotSymmetric(f"need v == b, got v={s.v}, b={s.b}")
    return SignMatrix.from_rows([[1 if e else -1 for e in row] for row in s.matrix()])
