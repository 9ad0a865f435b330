"""Permutation groups through a deterministic Schreier-Sims stabilizer chain.

A permutation is a tuple ``p`` with ``p[x]`` the image of ``x``. Products
act left to right: ``mul(p, q)`` applies ``p`` first, then ``q``.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Iterator, Sequence

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def perm_order(p: Perm) -> int:
    seen = [False] * len(p)
    out = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        out = lcm(out, length)
    return out


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


class _Level:
    __slots__ = ("base", "gens", "trans", "done")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[Perm] = []
        self.trans: dict[int, Perm] = {}
        self.done: set[tuple[int, int]] = set()


class PermGroup:
    """Group generated by ``generators`` acting on ``range(degree)``."""

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = ()):
        self.degree = degree
        self.generators: list[Perm] = []
        self._id = identity(degree)
        self._levels: list[_Level] = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or sorted(g) != list(self._id):
                raise ValueError("not a permutation of the stated degree")
            if is_identity(g):
                continue
            self.generators.append(g)
            self._insert(g)

    # stabilizer chain

    def _strip(self, g: Perm, start: int) -> tuple[Perm, int]:
        for i in range(start, len(self._levels)):
            lev = self._levels[i]
            beta = g[lev.base]
            u = lev.trans.get(beta)
            if u is None:
                return g, i
            g = mul(g, inverse(u))
        return g, len(self._levels)

    def _insert(self, g: Perm) -> None:
        h, _ = self._strip(g, 0)
        if not is_identity(h):
            self._add(0, h)

    def _add(self, i: int, h: Perm) -> None:
        if i == len(self._levels):
            moved = next(x for x in range(self.degree) if h[x] != x)
            lev = _Level(moved)
            lev.trans[moved] = self._id
            self._levels.append(lev)
        lev = self._levels[i]
        lev.gens.append(h)
        while True:
            # close the orbit under current generators
            stack = list(lev.trans)
            while stack:
                pt = stack.pop()
                u = lev.trans[pt]
                for s in lev.gens:
                    img = s[pt]
                    if img not in lev.trans:
                        lev.trans[img] = mul(u, s)
                        stack.append(img)
            pending = [(pt, si) for pt in sorted(lev.trans)
                       for si in range(len(lev.gens)) if (pt, si) not in lev.done]
            if not pending:
                return
            for pt, si in pending:
                lev.done.add((pt, si))
                s = lev.gens[si]
                y = mul(mul(lev.trans[pt], s), inverse(lev.trans[s[pt]]))
                r, _ = self._strip(y, i + 1)
                if not is_identity(r):
                    self._add(i + 1, r)
            # new generators at this level may have been appended by recursion
            # only at deeper levels; loop re-checks for unprocessed pairs.

    # queries

    def order(self) -> int:
        n = 1
        for lev in self._levels:
            n *= len(lev.trans)
        return n

    @property
    def base(self) -> list[int]:
        return [lev.base for lev in self._levels]

    def basic_orbit_lengths(self) -> list[int]:
        return [len(lev.trans) for lev in self._levels]

    def strong_generators(self) -> list[Perm]:
        out = []
        for lev in self._levels:
            out.extend(lev.gens)
        return out

    def contains(self, g: Sequence[int]) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        h, _ = self._strip(g, 0)
        return is_identity(h)

    __contains__ = contains

    def elements(self) -> Iterator[Perm]:
        """Every element exactly once (product of transversal choices)."""
        levels = self._levels

        def rec(i: int, acc: Perm):
            if i < 0:
                yield acc
                return
            for pt in sorted(levels[i].trans):
                yield from rec(i - 1, mul(acc, levels[i].trans[pt]))

        yield from rec(len(levels) - 1, self._id)

    def orbit(self, x: int) -> list[int]:
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g in self.generators:
                z = g[y]
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return sorted(seen)

    def orbits(self, points: Iterable[int] | None = None) -> list[list[int]]:
        todo = set(range(self.degree) if points is None else points)
        out = []
        while todo:
            x = min(todo)
            orb = self.orbit(x)
            out.append(orb)
            todo.difference_update(orb)
        return out

    def is_transitive(self, points: Sequence[int] | None = None) -> bool:
        pts = list(range(self.degree)) if points is None else list(points)
        if not pts:
            return True
        orb = set(self.orbit(pts[0]))
        return all(p in orb for p in pts)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()})"
