"""Named configurations and their exact realizations."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .errors import DegeneratePlane, InvalidN, InvalidV, NOutOfRange, RootsUnavailable
from .galois import factor_prime_power, field
from .geometry import pg_configuration
from .incidence import IncidenceStructure
from .realize import RationalPointSet, extract_incidence, primitive


# Ceva

def ceva(n: int) -> IncidenceStructure:
    """Points (a,b,c) in (Z/n)^3 with a+b+c = 0; block (i, alpha) holds the points with coordinate i equal to alpha."""
    if n < 2:
        raise InvalidN(f"n must be >= 2, got {n}")
    pts = [(a, b, (-a - b) % n) for a in range(n) for b in range(n)]
    blocks = [[x for x, p in enumerate(pts) if p[i] == alpha]
              for i in range(3) for alpha in range(n)]
    return IncidenceStructure.from_blocks(
        len(pts), blocks,
        point_labels=["".join(map(str, p)) for p in pts],
        block_labels=[f"{i}:{alpha}" for i in range(3) for alpha in range(n)],
    )


@dataclass
class CevaRealization:
    n: int
    q: int
    points: list[tuple[int, ...]]
    lines: list[tuple[int, ...]]
    structure: IncidenceStructure
    constant: int
    isomorphic: bool

    def to_dict(self) -> dict:
        return {"n": self.n, "q": self.q, "points": [list(p) for p in self.points],
                "lines": [list(l) for l in self.lines], "constant": self.constant,
                "isomorphic": self.isomorphic}


def _cross(F, u, w):
    return (
        F.sub(F.mul(u[1], w[2]), F.mul(u[2], w[1])),
        F.sub(F.mul(u[2], w[0]), F.mul(u[0], w[2])),
        F.sub(F.mul(u[0], w[1]), F.mul(u[1], w[0])),
    )


def ceva_realize(n: int, q: int) -> CevaRealization:
    """Lines through the vertices of the coordinate triangle over GF(q).

    Through (1:0:0) the lines x1 = alpha x2, through (0:1:0) the lines
    x2 = beta x0, through (0:0:1) the lines x0 = gamma x1, with alpha, beta,
    gamma running over the n-th roots of unity.
    """
    from .symmetry import is_isomorphic

    if n < 2:
        raise InvalidN(f"n must be >= 2, got {n}")
    factor_prime_power(q)
    if (q - 1) % n:
        raise RootsUnavailable(f"{n} does not divide q-1={q - 1}")
    F = field(q)
    mu = F.roots_of_unity(n)
    one = 1
    lines = []
    for alpha in mu:
        lines.append((0, one, F.neg(alpha)))
    for beta in mu:
        lines.append((F.neg(beta), 0, one))
    for gamma in mu:
        lines.append((one, F.neg(gamma), 0))
    pts = []
    for a in range(n):
        for b in range(n):
            p = _cross(F, lines[a], lines[n + b])
            pts.append(F.normalize(p))
    rows = []
    for p in pts:
        rows.append(sum(1 << j for j, l in enumerate(lines) if F.dot(l, p) == 0))
    structure = IncidenceStructure(len(pts), len(lines), rows)
    constants = set()
    for x in range(len(pts)):
        on = structure.point_blocks(x)
        prod = 1
        for j in on:
            prod = F.mul(prod, mu[j % n])
        constants.add(prod)
    constant = constants.pop() if len(constants) == 1 else -1
    return CevaRealization(n, q, pts, lines, structure, constant,
                           is_isomorphic(structure, ceva(n)))


# modular configurations

def s_formula(N: int) -> int:
    """N * prod over primes p | N of (1 + 1/p)."""
    out = Fraction(N)
    m, p = N, 2
    while m > 1:
        if m % p == 0:
            out *= Fraction(p + 1, p)
            while m % p == 0:
                m //= p
        p += 1
    return int(out)


@dataclass(frozen=True)
class ModularCosetSystem:
    N: int
    subgroups: tuple[tuple[tuple[int, int], ...], ...]
    cosets: tuple[tuple[tuple[tuple[int, int], ...], int], ...]   # (elements, subgroup index)


def _order(a, b, N):
    k = 1
    x, y = a % N, b % N
    while (x, y) != (0, 0):
        x, y = (x + a) % N, (y + b) % N
        k += 1
    return k


def cyclic_subgroups(N: int) -> list[tuple[tuple[int, int], ...]]:
    found = set()
    for a in range(N):
        for b in range(N):
            if _order(a, b, N) == N:
                found.add(tuple(sorted(((k * a) % N, (k * b) % N) for k in range(N))))
    return sorted(found)


def modular_cosets(N: int) -> ModularCosetSystem:
    if not 2 <= N <= 12:
        raise NOutOfRange(f"N must be in [2, 12], got {N}")
    subs = cyclic_subgroups(N)
    cosets = []
    for h, H in enumerate(subs):
        seen = set()
        for a in range(N):
            for b in range(N):
                c = tuple(sorted(((a + x) % N, (b + y) % N) for x, y in H))
                if c not in seen:
                    seen.add(c)
                    cosets.append((c, h))
    return ModularCosetSystem(N, tuple(subs), tuple(cosets))


def modular_config(N: int) -> IncidenceStructure:
    """Points are cosets of cyclic order-N subgroups of (Z/N)^2, blocks the group elements."""
    system = modular_cosets(N)
    elems = [(a, b) for a in range(N) for b in range(N)]
    idx = {e: i for i, e in enumerate(elems)}
    rows = [sum(1 << idx[e] for e in c) for c, _ in system.cosets]
    return IncidenceStructure(
        len(rows), len(elems), rows,
        point_labels=[f"H{h}+{c[0][0]},{c[0][1]}" for c, h in system.cosets],
        block_labels=[f"{a},{b}" for a, b in elems],
    )


# Desargues

def desargues() -> IncidenceStructure:
    pts = list(itertools.combinations(range(1, 6), 2))
    blks = list(itertools.combinations(range(1, 6), 3))
    return IncidenceStructure.from_blocks(
        len(pts), [[pts.index(d) for d in itertools.combinations(t, 2)] for t in blks],
        point_labels=["".join(map(str, d)) for d in pts],
        block_labels=["".join(map(str, t)) for t in blks],
    )


@dataclass
class DesarguesRealization:
    plane: tuple[int, ...]
    points: RationalPointSet
    lines: list[list[tuple[int, ...]]]
    structure: IncidenceStructure
    isomorphic: bool

    def to_dict(self) -> dict:
        return {"plane": list(self.plane), "points": self.points.to_dict(),
                "lines": [[list(p) for p in l] for l in self.lines],
                "isomorphic": self.isomorphic}


def desargues_realize(plane=(1, 2, 4, 8)) -> DesarguesRealization:
    """Cut the lines <e_i, e_j> of P^3 (e_5 = e_1+e_2+e_3+e_4) by a plane."""
    from .realize import bareiss_rank
    from .symmetry import is_isomorphic

    e = [tuple(1 if k == i else 0 for k in range(4)) for i in range(4)] + [(1, 1, 1, 1)]

    def ev(x):
        return sum(a * b for a, b in zip(plane, x))

    pairs = list(itertools.combinations(range(1, 6), 2))
    pts = {}
    for i, j in pairs:
        u, w = e[i - 1], e[j - 1]
        p = tuple(ev(w) * a - ev(u) * b for a, b in zip(u, w))
        if not any(p):
            raise DegeneratePlane(f"line <e{i},e{j}> lies in the plane")
        pts[(i, j)] = primitive(p)
    if len(set(pts.values())) != len(pts):
        raise DegeneratePlane("two cut points coincide")
    lines = []
    for t in itertools.combinations(range(1, 6), 3):
        a, b = (t[0], t[1]), (t[0], t[2])
        if bareiss_rank([pts[a], pts[b]]) != 2:
            raise DegeneratePlane(f"plane <e_i : i in {t}> meets the cutting plane badly")
        lines.append([pts[a], pts[b]])
    point_set = RationalPointSet.of(3, [pts[d] for d in pairs],
                                    labels=["".join(map(str, d)) for d in pairs])
    structure = extract_incidence(
        point_set, lines,
        block_labels=["".join(map(str, t)) for t in itertools.combinations(range(1, 6), 3)])
    return DesarguesRealization(tuple(plane), point_set, lines, structure,
                                is_isomorphic(structure, desargues()))


# Reye

def reye_realization() -> tuple[RationalPointSet, list[list[tuple[int, ...]]]]:
    """Cube vertices, centre and the three points at infinity; 12 edges and 4 diagonals."""
    verts = [(1,) + s for s in itertools.product((1, -1), repeat=3)]
    extra = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    labels = ["v" + "".join("+" if c > 0 else "-" for c in v[1:]) for v in verts]
    labels += ["o", "x", "y", "z"]
    points = RationalPointSet.of(3, verts + extra, labels=labels)
    lines = []
    for u, w in itertools.combinations(verts, 2):
        diff = sum(a != b for a, b in zip(u, w))
        if diff in (1, 3):
            lines.append([u, w])
    return points, lines


def reye() -> IncidenceStructure:
    points, lines = reye_realization()
    return extract_incidence(points, lines)


# Hesse-Salmon

HESSE_SALMON_TRIPLES = (
    (1, 1, 1), (1, 2, 4), (1, 3, 2), (1, 4, 3),
    (2, 1, 3), (2, 2, 2), (2, 3, 4), (2, 4, 1),
    (3, 1, 4), (3, 2, 1), (3, 3, 3), (3, 4, 2),
    (4, 1, 2), (4, 2, 3), (4, 3, 1), (4, 4, 4),
)


def hesse_salmon() -> IncidenceStructure:
    labels = [f"{c}{i}" for c in "ABC" for i in range(1, 5)]
    blocks = [[a - 1, 4 + b - 1, 8 + c - 1] for a, b, c in HESSE_SALMON_TRIPLES]
    return IncidenceStructure.from_blocks(
        12, blocks, point_labels=labels,
        block_labels=[f"A{a}B{b}C{c}" for a, b, c in HESSE_SALMON_TRIPLES])


# complete configurations

def complete_configuration(v: int) -> IncidenceStructure:
    if v < 2:
        raise InvalidV(f"v must be >= 2, got {v}")
    full = (1 << v) - 1
    return IncidenceStructure(v, v, [full ^ (1 << x) for x in range(v)])


# golden data

GOLDEN = ("fano", "hesse", "brianchon", "cyclic93", "third93", "four3", "five3", "six3")


def golden(name: str) -> IncidenceStructure:
    if name not in GOLDEN:
        raise KeyError(name)
    text = resources.files("configlab").joinpath(f"data/{name}.json").read_text()
    return IncidenceStructure.from_dict(json.loads(text))


def fano() -> IncidenceStructure:
    return pg_configuration(2, 0, 1, 2)


# the builder catalog, with the parameters each entry must have

def _kummer(g=2):
    from .symplectic import kummer_configuration
    return kummer_configuration(g)


def _cremona():
    from .symplectic import cremona_richmond
    return cremona_richmond()


def _iso_aniso():
    from .symplectic import isotropic_anisotropic_config
    return isotropic_anisotropic_config()


def _mukai(q=2):
    from .geometry import mukai_incidence
    return mukai_incidence(q)


CATALOG = {
    "fano": (fano, (7, 3, 7, 3)),
    "ceva3": (lambda: ceva(3), (9, 3, 9, 3)),
    "modular3": (lambda: modular_config(3), (12, 3, 9, 4)),
    "desargues": (desargues, (10, 3, 10, 3)),
    "reye": (reye, (12, 4, 16, 3)),
    "hesse-salmon": (hesse_salmon, (12, 4, 16, 3)),
    "cremona-richmond": (_cremona, (15, 3, 15, 3)),
    "isotropic-anisotropic": (_iso_aniso, (15, 4, 10, 6)),
    "complete5": (lambda: complete_configuration(5), (5, 4, 5, 4)),
    "kummer2": (lambda: _kummer(2), (16, 6, 16, 6)),
    "kummer3": (lambda: _kummer(3), (64, 28, 64, 28)),
    "mukai2": (lambda: _mukai(2), (21, 5, 21, 5)),
}
