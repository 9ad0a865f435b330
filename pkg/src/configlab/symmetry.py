"""Automorphism groups, canonical forms and arc-transitivity of configurations."""

from __future__ import annotations

from dataclasses import dataclass

from . import canon
from .errors import Undefined
from .incidence import IncidenceStructure, dual, is_connected
from .levi import levi_graph
from .permgroup import PermGroup, is_identity, mul

POLARITY_SEARCH_LIMIT = 2_000_000


@dataclass
class SymmetryReport:
    group: PermGroup           # acts on Levi vertices: points 0..v-1, blocks v..v+b-1
    v: int
    b: int
    allow_switch: bool
    has_switch: bool
    has_polarity: bool | None  # None when the switch coset was too large to scan

    @property
    def order(self) -> int:
        return self.group.order()

    def proper_generators(self):
        return [g for g in self.group.generators if g[0] < self.v]


def _swaps_colors(g, v) -> bool:
    return g[0] >= v


def _search(s: IncidenceStructure):
    lg = levi_graph(s)
    cells = [list(range(s.v)), list(range(s.v, lg.n))]
    return canon.search(lg.adj, cells), lg


def find_switch(s: IncidenceStructure):
    """A Levi-graph permutation sending points to blocks and blocks to points, or None."""
    if s.v != s.b:
        return None
    iso = isomorphism(s, dual(s))
    if iso is None:
        return None
    pmap, bmap = iso
    return tuple(s.v + y for y in pmap) + tuple(bmap)


def automorphism_group(s: IncidenceStructure, allow_switch: bool = False) -> SymmetryReport:
    # The full group is generated by the proper group and one switch. Searching
    # the uncoloured Levi graph instead would admit maps that swap colours on
    # one connected component only.
    res, lg = _search(s)
    proper = list(res.generators)
    switch = find_switch(s)
    has_polarity: bool | None = False
    full = None
    if switch is not None:
        full = PermGroup(lg.n, proper + [switch])
        has_polarity = _find_polarity(full, switch, s.v)
    if allow_switch and full is not None:
        group = full
    else:
        group = PermGroup(lg.n, proper)
    return SymmetryReport(group, s.v, s.b, allow_switch, switch is not None, has_polarity)


def _find_polarity(group: PermGroup, switch, v: int) -> bool | None:
    if is_identity(mul(switch, switch)):
        return True
    if group.order() > POLARITY_SEARCH_LIMIT:
        return None
    for g in group.elements():
        if _swaps_colors(g, v) and is_identity(mul(g, g)):
            return True
    return False


def proper_group(s: IncidenceStructure) -> PermGroup:
    return automorphism_group(s, allow_switch=False).group


def point_block_actions(group: PermGroup, v: int):
    """Split generators of a proper group into point and block permutations."""
    out = []
    for g in group.generators:
        out.append((tuple(g[:v]), tuple(x - v for x in g[v:])))
    return out


# canonical forms

@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes
    structure: IncidenceStructure
    point_order: tuple[int, ...]   # canonical position -> original point
    block_order: tuple[int, ...]   # canonical position -> original block


def canonical(s: IncidenceStructure) -> CanonicalForm:
    res, lg = _search(s)
    lab = res.labeling
    pts = tuple(lab[:s.v])
    blks = tuple(u - s.v for u in lab[s.v:])
    ppos = {x: i for i, x in enumerate(pts)}
    bpos = {j: i for i, j in enumerate(blks)}
    structure = s.relabel([ppos[x] for x in range(s.v)], [bpos[j] for j in range(s.b)])
    width = (s.b + 7) // 8
    body = b"".join(row.to_bytes(width, "little") for row in structure.rows)
    header = f"{s.v},{s.b};".encode()
    return CanonicalForm(header + body, structure, pts, blks)


def canonical_form(s: IncidenceStructure) -> bytes:
    return canonical(s).certificate


def is_isomorphic(s1: IncidenceStructure, s2: IncidenceStructure) -> bool:
    if (s1.v, s1.b, s1.num_incidences()) != (s2.v, s2.b, s2.num_incidences()):
        return False
    return canonical_form(s1) == canonical_form(s2)


def isomorphism(s1: IncidenceStructure, s2: IncidenceStructure):
    """Verified ``(point_map, block_map)`` from s1 to s2, or None."""
    if (s1.v, s1.b) != (s2.v, s2.b):
        return None
    c1, c2 = canonical(s1), canonical(s2)
    if c1.certificate != c2.certificate:
        return None
    pmap = [0] * s1.v
    bmap = [0] * s1.b
    for a, b in zip(c1.point_order, c2.point_order):
        pmap[a] = b
    for a, b in zip(c1.block_order, c2.block_order):
        bmap[a] = b
    for x in range(s1.v):
        for j in range(s1.b):
            if s1.incident(x, j) != s2.incident(pmap[x], bmap[j]):
                raise AssertionError("certificate match without a valid isomorphism")
    return pmap, bmap


def is_self_dual(s: IncidenceStructure) -> bool:
    return is_isomorphic(s, dual(s))


# transitivity

def is_regular_configuration(s: IncidenceStructure) -> bool:
    g = proper_group(s)
    return g.is_transitive(range(s.v)) and g.is_transitive(range(s.v, s.v + s.b))


def count_s_arcs(adj, s: int) -> int:
    # walks without immediate backtracking, counted by (previous, current) states
    n = len(adj)
    if s == 0:
        return n
    ways = {(u, w): 1 for u in range(n) for w in adj[u]}
    for _ in range(s - 1):
        nxt: dict[tuple[int, int], int] = {}
        for (u, w), c in ways.items():
            for z in adj[w]:
                if z != u:
                    nxt[(w, z)] = nxt.get((w, z), 0) + c
        ways = nxt
    return sum(ways.values())


def _first_arc(adj, s: int):
    arc = [0]
    if s >= 1:
        arc.append(adj[0][0])
    while len(arc) < s + 1:
        prev, cur = arc[-2], arc[-1]
        arc.append(next(z for z in adj[cur] if z != prev))
    return tuple(arc)


def arc_orbit_size(gens, arc) -> int:
    seen = {arc}
    stack = [arc]
    while stack:
        a = stack.pop()
        for g in gens:
            b = tuple(g[x] for x in a)
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen)


def s_regularity(s: IncidenceStructure, max_s: int = 7) -> int:
    """Largest s <= max_s with the full symmetry group transitive on s-arcs."""
    lg = levi_graph(s)
    if min(lg.degrees()) < 2:
        raise Undefined("Levi graph has a vertex of degree < 2")
    if not is_connected(s):
        raise Undefined("Levi graph is disconnected")
    report = automorphism_group(s, allow_switch=True)
    gens = report.group.generators
    best = None
    for k in range(max_s + 1):
        if arc_orbit_size(gens, _first_arc(lg.adj, k)) != count_s_arcs(lg.adj, k):
            break
        best = k
    if best is None:
        raise Undefined("symmetry group is not transitive on Levi graph vertices")
    return best
