"""Subset models of the symplectic space over GF(2).

For genus ``g`` the ground set is ``{1, ..., 2g+2}``, encoded as bits
``0 .. 2g+1``. W_g is the even subsets modulo complementation and Q_g the
subsets of size congruent to g+1 (mod 2) modulo complementation. A class
is stored by its representative that omits the top element ``2g+2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GenusMismatch, GenusOutOfRange, ZeroVector
from .incidence import IncidenceStructure

MAX_GENUS = 3


def _top(g: int) -> int:
    return 1 << (2 * g + 1)


def _full(g: int) -> int:
    return (1 << (2 * g + 2)) - 1


def _canon(g: int, mask: int) -> int:
    return mask ^ _full(g) if mask & _top(g) else mask


def subset_to_mask(elements) -> int:
    return sum(1 << (e - 1) for e in elements)


def mask_to_subset(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


@dataclass(frozen=True, order=True)
class EvenClass:
    g: int
    rep: int

    def __post_init__(self):
        if self.rep.bit_count() % 2:
            raise ValueError("even class needs an even-size representative")
        object.__setattr__(self, "rep", _canon(self.g, self.rep))

    @classmethod
    def of(cls, g: int, elements) -> "EvenClass":
        return cls(g, subset_to_mask(elements))

    def __add__(self, other: "EvenClass") -> "EvenClass":
        _same_genus(self, other)
        return EvenClass(self.g, self.rep ^ other.rep)

    def is_zero(self) -> bool:
        return self.rep == 0

    def elements(self) -> list[int]:
        return mask_to_subset(self.rep)


@dataclass(frozen=True, order=True)
class CharClass:
    g: int
    rep: int

    def __post_init__(self):
        if self.rep.bit_count() % 2 != (self.g + 1) % 2:
            raise ValueError("characteristic needs size congruent to g+1 mod 2")
        object.__setattr__(self, "rep", _canon(self.g, self.rep))

    @classmethod
    def of(cls, g: int, elements) -> "CharClass":
        return cls(g, subset_to_mask(elements))

    @property
    def type(self) -> str:
        return "even" if self.rep.bit_count() % 4 == (self.g + 1) % 4 else "odd"

    def translate(self, t: EvenClass) -> "CharClass":
        _same_genus(self, t)
        return CharClass(self.g, self.rep ^ t.rep)

    def elements(self) -> list[int]:
        return mask_to_subset(self.rep)


def _same_genus(a, b):
    if a.g != b.g:
        raise GenusMismatch(f"genus {a.g} vs {b.g}")


def even_classes(g: int) -> list[EvenClass]:
    low = _top(g) - 1
    return [EvenClass(g, m) for m in range(low + 1) if m.bit_count() % 2 == 0]


def char_classes(g: int) -> list[CharClass]:
    low = _top(g) - 1
    return [CharClass(g, m) for m in range(low + 1) if m.bit_count() % 2 == (g + 1) % 2]


def symplectic_form(a: EvenClass, b: EvenClass) -> int:
    _same_genus(a, b)
    return (a.rep & b.rep).bit_count() & 1


def quad_eval(s: CharClass, t: EvenClass) -> int:
    """q_S(T) = |T|/2 + |T & S| mod 2."""
    _same_genus(s, t)
    return (t.rep.bit_count() // 2 + (t.rep & s.rep).bit_count()) & 1


def quad_eval_raw(g: int, s_mask: int, t_mask: int) -> int:
    """The same formula on arbitrary (non-canonical) representatives."""
    return (t_mask.bit_count() // 2 + (t_mask & s_mask).bit_count()) & 1


def zero_count(s: CharClass) -> int:
    return sum(1 for t in even_classes(s.g) if quad_eval(s, t) == 0)


def _check_genus(g: int, allow_large: bool):
    if g < 1 or (g > MAX_GENUS and not allow_large) or g > 4:
        raise GenusOutOfRange(f"genus {g} outside [1, {MAX_GENUS}]")


def kummer_incident(s: CharClass, t: EvenClass) -> bool:
    want = 1 if s.type == "even" else 0
    return quad_eval(s, t) == want


def kummer_configuration(g: int, allow_large: bool = False) -> IncidenceStructure:
    """Points W_g, blocks Q_g; incidence by the value of q_S fixed by the type of S."""
    _check_genus(g, allow_large)
    pts = even_classes(g)
    blks = char_classes(g)
    rows = []
    for t in pts:
        m = 0
        for j, s in enumerate(blks):
            if kummer_incident(s, t):
                m |= 1 << j
        rows.append(m)
    return IncidenceStructure(
        len(pts), len(blks), rows,
        point_labels=[_label(t.elements()) for t in pts],
        block_labels=[_label(s.elements()) for s in blks],
    )


def _label(elems) -> str:
    return "{" + ",".join(map(str, elems)) + "}"


def kummer_parameters(g: int) -> dict:
    k = 2 ** (g - 1) * (2 ** g - 1)
    out = {"v": 4 ** g, "k": k, "b": 4 ** g, "r": k}
    if g >= 2:
        out["lam"] = 2 ** (g - 1) * (2 ** (g - 1) - 1)
    return out


# symmetries, returned as (point permutation, block permutation) over the
# orderings of even_classes(g) and char_classes(g)

def _indexers(g):
    pts = even_classes(g)
    blks = char_classes(g)
    return pts, blks, {t.rep: i for i, t in enumerate(pts)}, {s.rep: j for j, s in enumerate(blks)}


def translation_symmetry(g: int, t: EvenClass) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if t.g != g:
        raise GenusMismatch(f"genus {t.g} vs {g}")
    pts, blks, pidx, bidx = _indexers(g)
    pmap = tuple(pidx[(x + t).rep] for x in pts)
    bmap = tuple(bidx[s.translate(t).rep] for s in blks)
    return pmap, bmap


def transvection(x: EvenClass, v: EvenClass) -> EvenClass:
    return x + v if symplectic_form(x, v) else x


def transvection_symmetry(g: int, v: EvenClass) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if v.g != g:
        raise GenusMismatch(f"genus {v.g} vs {g}")
    if v.is_zero():
        raise ZeroVector("transvection along 0 is the identity, not a generator")
    pts, blks, pidx, _ = _indexers(g)
    pmap = tuple(pidx[transvection(x, v).rep] for x in pts)
    # q_{S'} = q_S o tau^{-1}; tau is an involution
    table = {}
    for j, s in enumerate(blks):
        table[tuple(quad_eval(s, x) for x in pts)] = j
    bmap = []
    for s in blks:
        values = tuple(quad_eval(s, transvection(x, v)) for x in pts)
        bmap.append(table[values])
    return pmap, tuple(bmap)


def preserves_incidence(s: IncidenceStructure, pmap, bmap) -> bool:
    for x in range(s.v):
        for j in range(s.b):
            if s.incident(x, j) != s.incident(pmap[x], bmap[j]):
                return False
    return True


def levi_perm(v: int, pmap, bmap) -> tuple[int, ...]:
    return tuple(pmap) + tuple(v + j for j in bmap)


# g = 2 over [1,6]: Cremona-Richmond and plane census

def duads() -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, 7), 2))


def synthemes() -> list[tuple[tuple[int, int], ...]]:
    """The 15 perfect matchings of [1,6], in lexicographic order."""
    out = []

    def rec(rest, acc):
        if not rest:
            out.append(tuple(acc))
            return
        a = rest[0]
        for b in rest[1:]:
            rec([x for x in rest if x not in (a, b)], acc + [(a, b)])

    rec(list(range(1, 7)), [])
    return out


def cremona_richmond() -> IncidenceStructure:
    """Duads of a 6-set against synthemes, incidence by membership."""
    pts = duads()
    blks = synthemes()
    return IncidenceStructure.from_blocks(
        len(pts), [[pts.index(d) for d in syn] for syn in blks],
        point_labels=["".join(map(str, d)) for d in pts],
        block_labels=[",".join("".join(map(str, d)) for d in syn) for syn in blks],
    )


def _w2_nonzero() -> list[EvenClass]:
    return [EvenClass.of(2, d) for d in duads()]


def planes_g2() -> list[frozenset[int]]:
    """All 2-dimensional subspaces of W_2, as sets of representatives."""
    elems = [c.rep for c in even_classes(2) if c.rep]
    planes = set()
    for a, b in itertools.combinations(elems, 2):
        planes.add(frozenset({0, a, b, _canon(2, a ^ b)}))
    return sorted(planes, key=lambda p: sorted(p))


def _restricted_form_rank(plane) -> int:
    nz = [x for x in plane if x]
    return 2 if any((a & b).bit_count() & 1 for a in nz for b in nz) else 0


def isotropic_planes() -> list[frozenset[int]]:
    """Ordered to match ``synthemes()``: the plane {0, ab, cd, ef}."""
    out = []
    for syn in synthemes():
        out.append(frozenset({0} | {EvenClass.of(2, d).rep for d in syn}))
    return out


def triad_classes() -> list[tuple[int, int, int]]:
    """3-subsets of [1,6] modulo complement, represented without 6."""
    return [t for t in itertools.combinations(range(1, 7), 3) if 6 not in t]


def triad_plane(t) -> frozenset[int]:
    a, b, c = t
    return frozenset({0} | {EvenClass.of(2, d).rep for d in ((a, b), (b, c), (a, c))})


def plane_census_g2() -> dict:
    planes = planes_g2()
    iso = [p for p in planes if _restricted_form_rank(p) == 0]
    nondeg = [p for p in planes if _restricted_form_rank(p) == 2]
    triangle = [p for p in nondeg
                if any(p == triad_plane(t) for t in itertools.combinations(range(1, 7), 3))]
    return {
        "total": len(planes),
        "isotropic": len(iso),
        "nondegenerate": len(nondeg),
        # an alternating form on a plane is zero or nondegenerate
        "degenerate_radical": len(planes) - len(iso) - len(nondeg),
        "triangle_planes": len(triangle),
        "anisotropic_classes": len(triad_classes()),
        "isotropic_planes": [sorted(p) for p in iso],
        "nondegenerate_planes": [sorted(p) for p in nondeg],
    }


def isotropic_anisotropic_config() -> IncidenceStructure:
    """Isotropic planes against anisotropic triad classes; incident iff they meet only in 0."""
    pts = isotropic_planes()
    blks = triad_classes()
    rows = []
    for L in pts:
        m = 0
        for j, t in enumerate(blks):
            if L & triad_plane(t) == {0}:
                m |= 1 << j
        rows.append(m)
    return IncidenceStructure(
        len(pts), len(blks), rows,
        point_labels=[",".join("".join(map(str, d)) for d in syn) for syn in synthemes()],
        block_labels=["".join(map(str, t)) for t in blks],
    )


def duad_isotropic_incidence() -> IncidenceStructure:
    """Nonzero classes of W_2 against isotropic planes, incidence by membership."""
    pts = _w2_nonzero()
    planes = isotropic_planes()
    rows = []
    for x in pts:
        rows.append(sum(1 << j for j, L in enumerate(planes) if x.rep in L))
    return IncidenceStructure(len(pts), len(planes), rows)
