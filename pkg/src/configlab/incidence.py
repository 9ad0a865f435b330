"""Incidence structures: points, blocks and a relation between them.

Rows of the incidence matrix are stored as Python ints used as bitsets
(bit ``j`` of ``rows[x]`` is set iff point ``x`` lies on block ``j``), so
pair intersections are a single ``&`` and ``int.bit_count``.
"""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    IncompatibleParams,
    IndexOutOfRange,
    InvalidParams,
    NotSymmetric,
    NotTactical,
)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class IncidenceStructure:
    """Immutable ``v x b`` incidence relation.

    Labels are provenance metadata only and do not take part in equality.
    """

    __slots__ = ("v", "b", "rows", "cols", "point_labels", "block_labels")

    def __init__(self, v: int, b: int, rows: Sequence[int],
                 point_labels: Sequence[str] | None = None,
                 block_labels: Sequence[str] | None = None):
        if v < 1 or b < 1:
            raise InvalidParams(f"need v >= 1 and b >= 1, got v={v}, b={b}")
        if len(rows) != v:
            raise InvalidParams(f"{len(rows)} rows for v={v}")
        full = (1 << b) - 1
        for x, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise InvalidParams(f"row {x} references a block >= {b}")
        if point_labels is not None and len(point_labels) != v:
            raise InvalidParams("point_labels length differs from v")
        if block_labels is not None and len(block_labels) != b:
            raise InvalidParams("block_labels length differs from b")
        cols = [0] * b
        for x, row in enumerate(rows):
            for j in _bits(row):
                cols[j] |= 1 << x
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "cols", tuple(cols))
        object.__setattr__(self, "point_labels",
                           tuple(point_labels) if point_labels is not None else None)
        object.__setattr__(self, "block_labels",
                           tuple(block_labels) if block_labels is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("IncidenceStructure is immutable")

    # construction helpers

    @classmethod
    def from_blocks(cls, v: int, blocks: Iterable[Iterable[int]], **labels) -> "IncidenceStructure":
        blocks = [sorted(set(B)) for B in blocks]
        rows = [0] * v
        for j, B in enumerate(blocks):
            for x in B:
                if not 0 <= x < v:
                    raise IndexOutOfRange(f"block {j} contains point {x} outside [0,{v})")
                rows[x] |= 1 << j
        return cls(v, len(blocks), rows, **labels)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], **labels) -> "IncidenceStructure":
        v = len(matrix)
        b = len(matrix[0]) if v else 0
        rows = []
        for line in matrix:
            if len(line) != b:
                raise InvalidParams("ragged incidence matrix")
            rows.append(sum(1 << j for j, e in enumerate(line) if e))
        return cls(v, b, rows, **labels)

    # views

    @property
    def blocks(self) -> list[tuple[int, ...]]:
        return [tuple(_bits(c)) for c in self.cols]

    def point_blocks(self, x: int) -> list[int]:
        return _bits(self.rows[x])

    def incident(self, x: int, j: int) -> bool:
        return bool(self.rows[x] >> j & 1)

    def matrix(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.b)] for row in self.rows]

    def num_incidences(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def relabel(self, point_perm: Sequence[int], block_perm: Sequence[int]) -> "IncidenceStructure":
        """Point ``x`` becomes ``point_perm[x]``, block ``j`` becomes ``block_perm[j]``."""
        rows = [0] * self.v
        for x, row in enumerate(self.rows):
            m = 0
            for j in _bits(row):
                m |= 1 << block_perm[j]
            rows[point_perm[x]] = m
        return IncidenceStructure(self.v, self.b, rows)

    def __eq__(self, other):
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return self.v == other.v and self.b == other.b and self.rows == other.rows

    def __hash__(self):
        return hash((self.v, self.b, self.rows))

    def __repr__(self):
        return f"IncidenceStructure(v={self.v}, b={self.b}, incidences={self.num_incidences()})"

    # interchange

    def to_dict(self) -> dict:
        d = {"v": self.v, "b": self.b, "blocks": [list(B) for B in self.blocks]}
        if self.point_labels is not None:
            d["point_labels"] = list(self.point_labels)
        if self.block_labels is not None:
            d["block_labels"] = list(self.block_labels)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "IncidenceStructure":
        s = cls.from_blocks(d["v"], d["blocks"],
                            point_labels=d.get("point_labels"),
                            block_labels=d.get("block_labels"))
        if s.b != d.get("b", s.b):
            raise InvalidParams(f"b={d['b']} but {s.b} blocks listed")
        return s

    @classmethod
    def from_json(cls, text: str) -> "IncidenceStructure":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(self.matrix())
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "IncidenceStructure":
        rows = [[int(e) for e in line] for line in csv.reader(io.StringIO(text)) if line]
        return cls.from_matrix(rows)


@dataclass(frozen=True)
class ConfigParams:
    """``(v_k, b_r)``: k blocks through each point, r points on each block."""

    v: int
    k: int
    b: int
    r: int
    lam: int | None = None
    distinct: bool = True

    @property
    def symmetric(self) -> bool:
        return self.v == self.b and self.k == self.r

    def as_tuple(self):
        return (self.v, self.k, self.b, self.r)


def has_distinct_rows(s: IncidenceStructure) -> bool:
    return len(set(s.rows)) == s.v and len(set(s.cols)) == s.b


def validate_tactical(s: IncidenceStructure) -> ConfigParams:
    k = s.rows[0].bit_count()
    for x, row in enumerate(s.rows):
        if row.bit_count() != k:
            raise NotTactical("point", x, k, row.bit_count())
    r = s.cols[0].bit_count()
    for j, col in enumerate(s.cols):
        if col.bit_count() != r:
            raise NotTactical("block", j, r, col.bit_count())
    return ConfigParams(s.v, k, s.b, r, distinct=has_distinct_rows(s))


def is_tactical(s: IncidenceStructure) -> bool:
    try:
        validate_tactical(s)
    except NotTactical:
        return False
    return True


def dual(s: IncidenceStructure) -> IncidenceStructure:
    return IncidenceStructure(s.b, s.v, s.cols,
                              point_labels=s.block_labels, block_labels=s.point_labels)


def complement(s: IncidenceStructure) -> IncidenceStructure:
    p = validate_tactical(s)
    if not p.symmetric:
        raise NotSymmetric(f"complement needs a symmetric configuration, got {p.as_tuple()}")
    full = (1 << s.b) - 1
    return IncidenceStructure(s.v, s.b, [full ^ row for row in s.rows],
                              point_labels=s.point_labels, block_labels=s.block_labels)


def direct_sum(s1: IncidenceStructure, s2: IncidenceStructure) -> IncidenceStructure:
    p1, p2 = validate_tactical(s1), validate_tactical(s2)
    if p1.k != p2.k or p1.r != p2.r:
        raise IncompatibleParams(
            f"direct sum needs equal (k, r), got {(p1.k, p1.r)} and {(p2.k, p2.r)}")
    rows = list(s1.rows) + [row << s1.b for row in s2.rows]
    return IncidenceStructure(s1.v + s2.v, s1.b + s2.b, rows)


def is_connected(s: IncidenceStructure) -> bool:
    """Breadth-first search over the bipartite incidence graph."""
    seen_pts, seen_blk = 1, 0
    frontier = 1
    while frontier:
        reach_blk = 0
        for x in _bits(frontier):
            reach_blk |= s.rows[x]
        new_blk = reach_blk & ~seen_blk
        seen_blk |= new_blk
        reach_pts = 0
        for j in _bits(new_blk):
            reach_pts |= s.cols[j]
        frontier = reach_pts & ~seen_pts
        seen_pts |= frontier
    return seen_pts == (1 << s.v) - 1 and seen_blk == (1 << s.b) - 1


def s_equivalence_classes(s: IncidenceStructure) -> tuple[list[list[int]], list[int]]:
    """Classes of the closure of "share no block".

    Returns the classes (each sorted, ordered by smallest member) and the
    sorted multiset of class sizes.
    """
    parent = list(range(s.v))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(s.v):
        for y in range(x + 1, s.v):
            if not s.rows[x] & s.rows[y]:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[int]] = {}
    for x in range(s.v):
        groups.setdefault(find(x), []).append(x)
    classes = sorted(groups.values())
    return classes, sorted(len(c) for c in classes)


def delete_point(s: IncidenceStructure, x: int) -> IncidenceStructure:
    if not 0 <= x < s.v:
        raise IndexOutOfRange(f"point {x} not in [0,{s.v})")
    keep_blocks = [j for j in range(s.b) if not s.rows[x] >> j & 1]
    keep_points = [y for y in range(s.v) if y != x]
    if not keep_blocks:
        raise InvalidParams("deleting this point removes every block")
    rows = []
    for y in keep_points:
        m = 0
        for new, j in enumerate(keep_blocks):
            if s.rows[y] >> j & 1:
                m |= 1 << new
        rows.append(m)
    pl = [s.point_labels[y] for y in keep_points] if s.point_labels else None
    bl = [s.block_labels[j] for j in keep_blocks] if s.block_labels else None
    return IncidenceStructure(s.v - 1, len(keep_blocks), rows, point_labels=pl, block_labels=bl)


def pair_counts(s: IncidenceStructure) -> set[int]:
    """Set of values ``|R(x) & R(y)|`` over distinct point pairs."""
    rows = s.rows
    return {(rows[x] & rows[y]).bit_count()
            for x in range(s.v) for y in range(x + 1, s.v)}


def is_lineal(s: IncidenceStructure) -> bool:
    rows = s.rows
    for x in range(s.v):
        rx = rows[x]
        for y in range(x + 1, s.v):
            if (rx & rows[y]).bit_count() > 1:
                return False
    return True


def bfs_distances(adj: Sequence[Sequence[int]], src: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist
