"""Exact coordinate realizations and incidence extraction.

All arithmetic is on Python integers. Rational input is cleared of
denominators before it is stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import DegreeTooSmall, DimensionMismatch, ZeroVector
from .incidence import IncidenceStructure, validate_tactical


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for i in range(rank + 1, nrows):
            a = m[i][c]
            m[i] = [(p * m[i][j] - a * m[rank][j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def bareiss_det(rows) -> int:
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def primitive(vec) -> tuple[int, ...]:
    """Integer representative: denominators cleared, gcd 1, first nonzero positive."""
    vec = [Fraction(x) for x in vec]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in vec), 1)
    ints = [int(x * den) for x in vec]
    g = reduce(gcd, ints, 0)
    if g == 0:
        raise ZeroVector("zero vector is not a projective point")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return tuple(-x for x in ints) if lead < 0 else tuple(ints)


@dataclass(frozen=True)
class RationalPointSet:
    n: int
    points: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @classmethod
    def of(cls, n: int, points, labels=None) -> "RationalPointSet":
        pts = []
        for p in points:
            if len(p) != n + 1:
                raise DimensionMismatch(f"point {p} is not in P^{n}")
            pts.append(primitive(p))
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        return cls(n, tuple(pts), tuple(labels) if labels else None)

    def to_dict(self) -> dict:
        return {"n": self.n, "points": [list(p) for p in self.points],
                "labels": list(self.labels) if self.labels else None}


def _check_dim(vec, n):
    if len(vec) != n + 1:
        raise DimensionMismatch(f"vector of length {len(vec)} in P^{n}")


def extract_incidence(points: RationalPointSet, blocks, kind: str = "span",
                      block_labels=None) -> IncidenceStructure:
    """Incidence of points with blocks.

    With ``kind="span"`` each block is a list of spanning vectors and a point
    is incident when adding it does not raise the rank. With
    ``kind="equation"`` each block is a list of linear forms (or a single
    form) and a point is incident when all of them vanish on it.
    """
    n = points.n
    rows = [0] * len(points.points)
    for j, blk in enumerate(blocks):
        if kind == "equation" and blk and isinstance(blk[0], int):
            blk = [blk]
        for vec in blk:
            _check_dim(vec, n)
        if kind == "span":
            span = [primitive(v) for v in blk]
            base = bareiss_rank(span)
            for i, p in enumerate(points.points):
                if bareiss_rank(span + [p]) == base:
                    rows[i] |= 1 << j
        elif kind == "equation":
            forms = [primitive(f) for f in blk]
            for i, p in enumerate(points.points):
                if all(sum(a * x for a, x in zip(f, p)) == 0 for f in forms):
                    rows[i] |= 1 << j
        else:
            raise ValueError(f"unknown block kind {kind!r}")
    return IncidenceStructure(len(points.points), len(blocks), rows,
                              point_labels=points.labels, block_labels=block_labels)


def hyperplane_through(points) -> tuple[int, ...]:
    """Integer normal vector of the hyperplane spanned by n independent points of P^n."""
    m = [list(p) for p in points]
    cols = len(m[0])
    coeffs = []
    for j in range(cols):
        minor = [row[:j] + row[j + 1:] for row in m]
        coeffs.append((-1) ** j * bareiss_det(minor))
    return primitive(coeffs)


@dataclass
class HyperplaneRealization:
    points: RationalPointSet
    hyperplanes: list[tuple[int, ...]]
    structure: IncidenceStructure
    matches: bool
    report: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "points": self.points.to_dict(),
            "hyperplanes": [list(h) for h in self.hyperplanes],
            "matches": self.matches,
            "report": self.report,
        }


def moment_point(t: int, r: int) -> tuple[int, ...]:
    return tuple(t ** e for e in range(r + 1))


def generic_point_hyperplane_realization(s: IncidenceStructure) -> HyperplaneRealization:
    """Points on the rational normal curve of degree r in P^r, blocks as hyperplanes."""
    p = validate_tactical(s)
    r = p.r
    if r < 2:
        raise DegreeTooSmall(f"block size r={r} < 2")
    pts = RationalPointSet.of(r, [moment_point(i + 1, r) for i in range(s.v)],
                              labels=s.point_labels)
    hyper = [hyperplane_through([pts.points[x] for x in blk]) for blk in s.blocks]
    out = extract_incidence(pts, hyper, kind="equation", block_labels=s.block_labels)
    return HyperplaneRealization(
        pts, hyper, out, out == s,
        {"dimension": r, "parameters": list(range(1, s.v + 1)),
         "max_coefficient": max(abs(c) for h in hyper for c in h)},
    )
