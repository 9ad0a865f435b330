"""Exhaustive enumeration of symmetric v_3 configurations up to isomorphism.

Incidence matrices are built row by row in doubly lexicographic form: rows
strictly decreasing and columns non-increasing, both read with index 0 as
the most significant position. Every isomorphism class has such a form, so
the search is complete; survivors are then merged by canonical certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import BudgetExceeded, InvalidV
from .incidence import IncidenceStructure
from .symmetry import canonical_form


@dataclass
class CensusResult:
    v: int
    lineal_only: bool
    certificates: list[bytes]
    representatives: list[IncidenceStructure] = field(repr=False)
    matrices: int = 0          # doubly lexicographic matrices reached
    nodes: int = 0

    @property
    def count(self) -> int:
        return len(self.certificates)


def _row_key(cols, v):
    # lexicographic rank with column 0 most significant
    return sum(1 << (v - 1 - c) for c in cols)


def enumerate_v3(v: int, lineal_only: bool = True, budget: int | None = None) -> CensusResult:
    """All v_3 configurations (lineal ones when ``lineal_only``), one per class.

    ``budget`` caps the number of search nodes.
    """
    if v < 4:
        raise InvalidV(f"v must be >= 4, got {v}")
    if lineal_only and v < 7:
        raise InvalidV("lineal v_3 configurations need v >= 7")
    triples = list(itertools.combinations(range(v), 3))
    triples.sort(key=lambda t: -_row_key(t, v))   # decreasing lex
    masks = [sum(1 << c for c in t) for t in triples]

    colsum = [0] * v
    colval = [0] * v
    rows: list[int] = []
    found: dict[bytes, IncidenceStructure] = {}
    stats = {"nodes": 0, "matrices": 0}

    def columns_ok(i):
        for j in range(v - 1):
            if colval[j] < colval[j + 1]:
                return False
        remaining = v - i - 1
        return all(3 - s <= remaining for s in colsum)

    def rec(i, start):
        stats["nodes"] += 1
        if budget is not None and stats["nodes"] > budget:
            raise BudgetExceeded(f"node budget {budget} exhausted at v={v}")
        if i == v:
            stats["matrices"] += 1
            s = IncidenceStructure(v, v, list(rows))
            if not lineal_only and len(set(s.cols)) < v:
                return
            cert = canonical_form(s)
            if cert not in found:
                found[cert] = s
            return
        bit = 1 << (v - 1 - i)
        for t_idx in range(start, len(triples)):
            m = masks[t_idx]
            t = triples[t_idx]
            if any(colsum[c] >= 3 for c in t):
                continue
            if lineal_only:
                if any((m & r).bit_count() > 1 for r in rows):
                    continue
            elif any(m == r for r in rows):
                continue
            for c in t:
                colsum[c] += 1
                colval[c] |= bit
            if columns_ok(i):
                rows.append(m)
                rec(i + 1, t_idx + 1)
                rows.pop()
            for c in t:
                colsum[c] -= 1
                colval[c] ^= bit

    rec(0, 0)
    certs = sorted(found)
    return CensusResult(v, lineal_only, certs, [found[c] for c in certs],
                        stats["matrices"], stats["nodes"])
