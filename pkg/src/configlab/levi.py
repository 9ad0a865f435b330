"""Levi (incidence) graphs and their Graphviz export."""

from __future__ import annotations

from dataclasses import dataclass

from .incidence import IncidenceStructure, _bits, bfs_distances


@dataclass(frozen=True)
class LeviGraph:
    """Vertices ``0..v-1`` are points (black), ``v..v+b-1`` are blocks (white)."""

    v: int
    b: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.v + self.b

    def color(self, u: int) -> str:
        return "black" if u < self.v else "white"

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def is_bipartite_by_color(self) -> bool:
        return all((u < self.v) != (w < self.v) for u in range(self.n) for w in self.adj[u])

    def girth(self) -> float:
        """Shortest cycle length (``inf`` for forests)."""
        best = float("inf")
        for src in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[src] = 0
            frontier = [src]
            while frontier:
                nxt = []
                for u in frontier:
                    for w in self.adj[u]:
                        if dist[w] < 0:
                            dist[w] = dist[u] + 1
                            parent[w] = u
                            nxt.append(w)
                        elif parent[u] != w:
                            best = min(best, dist[u] + dist[w] + 1)
                frontier = nxt
        return best

    def distances(self, u: int) -> list[int]:
        return bfs_distances(self.adj, u)

    def to_dot(self, name: str = "levi") -> str:
        lines = [f"graph {name} {{", "  node [shape=circle, style=filled, label=\"\"];"]
        for u in range(self.n):
            fill = self.color(u)
            tag = f"p{u}" if u < self.v else f"B{u - self.v}"
            lines.append(f"  {u} [fillcolor={fill}, xlabel=\"{tag}\"];")
        for u in range(self.n):
            for w in self.adj[u]:
                if u < w:
                    lines.append(f"  {u} -- {w};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def levi_graph(s: IncidenceStructure) -> LeviGraph:
    adj = [tuple(s.v + j for j in _bits(row)) for row in s.rows]
    adj += [tuple(_bits(col)) for col in s.cols]
    return LeviGraph(s.v, s.b, tuple(adj))
