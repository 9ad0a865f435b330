"""Canonical labelling and automorphisms of vertex-coloured graphs.

Individualisation-refinement in the style of nauty: equitable refinement,
a search tree that individualises a vertex of the smallest non-singleton
cell, automorphisms harvested from leaves with equal certificates, and
pruning by the pointwise stabiliser of the current prefix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import BudgetExceeded


@dataclass
class SearchResult:
    labeling: list[int]          # position -> vertex of the canonical leaf
    certificate: tuple           # adjacency of the canonical leaf
    generators: list[tuple]      # automorphisms found
    leaves: int = 0
    nodes: int = 0
    first_labeling: list[int] = field(default_factory=list)


class _Partition:
    """Ordered partition stored nauty style: ``lab`` plus cell lengths at starts."""

    __slots__ = ("lab", "cell_len", "cell_of")

    def __init__(self, lab, cell_len, cell_of):
        self.lab = lab
        self.cell_len = cell_len
        self.cell_of = cell_of

    @classmethod
    def from_cells(cls, n, cells):
        lab, cell_len, cell_of = [], [0] * n, [0] * n
        for cell in cells:
            s = len(lab)
            cell_len[s] = len(cell)
            for u in cell:
                cell_of[u] = s
            lab.extend(cell)
        return cls(lab, cell_len, cell_of)

    def copy(self):
        return _Partition(self.lab[:], self.cell_len[:], self.cell_of[:])

    def starts(self):
        n = len(self.lab)
        s = 0
        while s < n:
            yield s
            s += self.cell_len[s]

    def is_discrete(self):
        return all(self.cell_len[s] == 1 for s in self.starts())


def _refine(adj, part: _Partition, queue: list[int]) -> None:
    lab, cell_len, cell_of = part.lab, part.cell_len, part.cell_of
    in_queue = set(queue)
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        in_queue.discard(w)
        count: dict[int, int] = {}
        for u in lab[w:w + cell_len[w]]:
            for nb in adj[u]:
                count[nb] = count.get(nb, 0) + 1
        touched = sorted({cell_of[u] for u in count})
        for s in touched:
            L = cell_len[s]
            if L == 1:
                continue
            groups: dict[int, list[int]] = {}
            for u in lab[s:s + L]:
                groups.setdefault(count.get(u, 0), []).append(u)
            if len(groups) == 1:
                continue
            pos = s
            new_starts = []
            for key in sorted(groups):
                g = groups[key]
                lab[pos:pos + len(g)] = g
                cell_len[pos] = len(g)
                for u in g:
                    cell_of[u] = pos
                new_starts.append(pos)
                pos += len(g)
            if s in in_queue:
                add = new_starts[1:]
            else:
                big = max(new_starts, key=lambda t: (cell_len[t], -t))
                add = [t for t in new_starts if t != big]
            for t in add:
                if t not in in_queue:
                    in_queue.add(t)
                    queue.append(t)


def _individualize(part: _Partition, u: int) -> tuple[_Partition, int]:
    p = part.copy()
    s = p.cell_of[u]
    L = p.cell_len[s]
    cell = p.lab[s:s + L]
    cell.remove(u)
    p.lab[s:s + L] = [u] + cell
    p.cell_len[s] = 1
    p.cell_len[s + 1] = L - 1
    for w in cell:
        p.cell_of[w] = s + 1
    return p, s


def _target_cell(part: _Partition) -> int:
    best, best_len = -1, None
    for s in part.starts():
        L = part.cell_len[s]
        if L > 1 and (best_len is None or L < best_len):
            best, best_len = s, L
    return best


class _Jump(Exception):
    def __init__(self, level):
        self.level = level


def _orbit_reps(gens, n, fixed):
    """Union-find parent array for the group generated by gens fixing ``fixed``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if all(g[x] == x for x in fixed):
            for x in range(n):
                a, b = find(x), find(g[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return find


def search(adj: Sequence[Sequence[int]], cells: Sequence[Sequence[int]],
           node_limit: int | None = None) -> SearchResult:
    """Canonical leaf and automorphism generators for a coloured graph.

    ``cells`` is the ordered initial colour partition. The certificate is
    the list of sorted neighbour positions of each position in the
    lexicographically smallest leaf reached.
    """
    n = len(adj)
    adj = [list(a) for a in adj]
    root = _Partition.from_cells(n, [list(c) for c in cells if c])
    _refine(adj, root, list(root.starts()))

    state = {
        "first": None, "first_cert": None, "first_path": None,
        "best": None, "best_cert": None, "best_path": None,
        "gens": [], "leaves": 0, "nodes": 0,
    }

    def certificate(lab):
        pos = [0] * n
        for i, u in enumerate(lab):
            pos[u] = i
        return tuple(tuple(sorted(pos[w] for w in adj[u])) for u in lab)

    def add_aut(lab_from, lab_to):
        g = [0] * n
        for a, b in zip(lab_from, lab_to):
            g[a] = b
        g = tuple(g)
        if any(g[i] != i for i in range(n)) and g not in state["gens"]:
            state["gens"].append(g)

    def common_prefix(p, q):
        i = 0
        while i < len(p) and i < len(q) and p[i] == q[i]:
            i += 1
        return i

    def visit(part: _Partition, path: list[int]):
        state["nodes"] += 1
        if node_limit is not None and state["nodes"] > node_limit:
            raise BudgetExceeded(f"canonical search exceeded {node_limit} nodes")
        t = _target_cell(part)
        if t < 0:
            state["leaves"] += 1
            lab = part.lab
            cert = certificate(lab)
            if state["first"] is None:
                state["first"], state["first_cert"], state["first_path"] = lab[:], cert, path[:]
                state["best"], state["best_cert"], state["best_path"] = lab[:], cert, path[:]
                return
            if cert == state["first_cert"]:
                add_aut(state["first"], lab)
                raise _Jump(common_prefix(path, state["first_path"]))
            if cert == state["best_cert"]:
                add_aut(state["best"], lab)
                raise _Jump(common_prefix(path, state["best_path"]))
            if cert < state["best_cert"]:
                state["best"], state["best_cert"], state["best_path"] = lab[:], cert, path[:]
            return
        cell = sorted(part.lab[t:t + part.cell_len[t]])
        done: list[int] = []
        for u in cell:
            if done:
                find = _orbit_reps(state["gens"], n, path)
                ru = find(u)
                if any(find(d) == ru for d in done):
                    continue
            done.append(u)
            child, s = _individualize(part, u)
            _refine(adj, child, [s])
            path.append(u)
            try:
                visit(child, path)
            except _Jump as j:
                if j.level < len(path) - 1:
                    path.pop()
                    raise
            path.pop()

    visit(root, [])
    return SearchResult(
        labeling=state["best"],
        certificate=state["best_cert"],
        generators=state["gens"],
        leaves=state["leaves"],
        nodes=state["nodes"],
        first_labeling=state["first"],
    )
