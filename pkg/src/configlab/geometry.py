"""Projective spaces over finite fields: subspaces, PG(n,r,s;q), Mukai's incidence."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidDims, UnsupportedField
from .galois import FieldTable, field
from .incidence import IncidenceStructure, dual

MAX_SUBSPACES = 10 ** 6


def gaussian_binomial(r: int, n: int, q: int) -> int:
    """Number of projective r-subspaces of P^n(F_q), i.e. [n+1 choose r+1]_q."""
    if not 0 <= r <= n:
        return 0
    num = den = 1
    for i in range(r + 1):
        num *= q ** (n + 1 - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@dataclass(frozen=True, order=True)
class Subspace:
    """Projective ``d``-subspace of P^n given by its reduced row-echelon basis."""

    basis: tuple[tuple[int, ...], ...]
    n: int
    d: int


def rref(F: FieldTable, rows) -> tuple[tuple[int, ...], ...]:
    """Reduced row-echelon form with zero rows dropped."""
    m = [list(r) for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    lead = 0
    out_rows = 0
    for c in range(ncols):
        piv = next((i for i in range(out_rows, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[out_rows], m[piv] = m[piv], m[out_rows]
        row = m[out_rows]
        inv = F.inv(row[c])
        m[out_rows] = row = [F.mul(inv, a) for a in row]
        for i in range(len(m)):
            if i != out_rows and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], row)]
        out_rows += 1
        lead += 1
        if out_rows == len(m):
            break
    return tuple(tuple(r) for r in m[:out_rows])


def rank(F: FieldTable, rows) -> int:
    return len(rref(F, rows))


def _check_field(q: int) -> FieldTable:
    try:
        return field(q)
    except UnsupportedField:
        raise
    except Exception as exc:  # pragma: no cover
        raise UnsupportedField(str(exc)) from exc


def _rref_matrices(F: FieldTable, n: int, d: int):
    """Every (d+1) x (n+1) RREF matrix of full rank."""
    cols = n + 1
    q = F.q
    for pivots in itertools.combinations(range(cols), d + 1):
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, cols)
                if j not in pivots]
        for vals in itertools.product(range(q), repeat=len(free)):
            m = [[0] * cols for _ in range(d + 1)]
            for i, pc in enumerate(pivots):
                m[i][pc] = 1
            for (i, j), a in zip(free, vals):
                m[i][j] = a
            yield tuple(tuple(r) for r in m)


def enumerate_subspaces(n: int, d: int, q: int) -> list[Subspace]:
    if not 0 <= d <= n:
        raise InvalidDims(f"need 0 <= d <= n, got d={d}, n={n}")
    F = _check_field(q)
    if gaussian_binomial(d, n, q) > MAX_SUBSPACES:
        raise InvalidDims(f"more than {MAX_SUBSPACES} subspaces requested")
    return sorted(Subspace(b, n, d) for b in _rref_matrices(F, n, d))


def span_vectors(F: FieldTable, basis) -> list[tuple[int, ...]]:
    dim = len(basis[0])
    out = []
    for coeffs in itertools.product(range(F.q), repeat=len(basis)):
        v = [0] * dim
        for c, row in zip(coeffs, basis):
            if c:
                for j, a in enumerate(row):
                    if a:
                        v[j] = F.add(v[j], F.mul(c, a))
        out.append(tuple(v))
    return out


def pg_configuration(n: int, r: int, s: int, q: int) -> IncidenceStructure:
    """Points are projective r-subspaces, blocks s-subspaces, incidence is containment."""
    if not (0 <= r < s <= n):
        raise InvalidDims(f"need 0 <= r < s <= n, got n={n}, r={r}, s={s}")
    F = _check_field(q)
    if s == n:
        raise InvalidDims("s = n gives a single block")
    pts = enumerate_subspaces(n, r, q)
    blks = enumerate_subspaces(n, s, q)
    index = {P.basis: i for i, P in enumerate(pts)}
    local = [B.basis for B in enumerate_subspaces(s, r, q)]
    rows = [0] * len(pts)
    for j, W in enumerate(blks):
        for coeff in local:
            image = []
            for crow in coeff:
                vec = [0] * (n + 1)
                for c, wrow in zip(crow, W.basis):
                    if c:
                        for t, a in enumerate(wrow):
                            if a:
                                vec[t] = F.add(vec[t], F.mul(c, a))
                image.append(vec)
            rows[index[rref(F, image)]] |= 1 << j
    return IncidenceStructure(len(pts), len(blks), rows,
                              point_labels=[_fmt(P.basis) for P in pts],
                              block_labels=[_fmt(B.basis) for B in blks])


def pg_parameters(n: int, r: int, s: int, q: int) -> dict:
    """Closed-form degrees; ``lam`` only when r = 0."""
    out = {
        "v": gaussian_binomial(r, n, q),
        "k": gaussian_binomial(s - r - 1, n - r - 1, q),
        "b": gaussian_binomial(s, n, q),
        "r": gaussian_binomial(r, s, q),
    }
    if r == 0:
        out["lam"] = gaussian_binomial(s - 2, n - 2, q) if s >= 2 else 1
    return out


def check_pg_duality(n: int, r: int, s: int, q: int) -> bool:
    """Projective duality sends r-subspaces to (n-r-1)-subspaces and reverses
    containment, so PG(n,r,s;q) is compared with the point/block transpose of
    PG(n,n-s-1,n-r-1;q)."""
    from .symmetry import is_isomorphic

    a = pg_configuration(n, r, s, q)
    b = pg_configuration(n, n - s - 1, n - r - 1, q)
    return is_isomorphic(a, dual(b))


def _fmt(basis) -> str:
    return ";".join(",".join(map(str, row)) for row in basis)


# Mukai's incidence on P^2(F_{q^2})

def frobenius_power(F: FieldTable, pt, times: int = 1) -> tuple[int, ...]:
    return F.normalize(tuple(F.frobenius(a, times) for a in pt))


def mukai_incidence(q: int) -> IncidenceStructure:
    """Point a on block b iff a0 b0^q + a1 b1^q + a2 b2^q = 0 over F_{q^2}."""
    F = _check_field(q * q)
    pts = [P.basis[0] for P in enumerate_subspaces(2, 0, q * q)]
    conj = [tuple(F.pow(c, q) for c in b) for b in pts]
    rows = []
    for a in pts:
        m = 0
        for j, bq in enumerate(conj):
            if F.dot(a, bq) == 0:
                m |= 1 << j
        rows.append(m)
    labels = [",".join(map(str, a)) for a in pts]
    return IncidenceStructure(len(pts), len(pts), rows, point_labels=labels, block_labels=labels)


def projective_points(n: int, q: int) -> list[tuple[int, ...]]:
    return [P.basis[0] for P in enumerate_subspaces(n, 0, q)]
