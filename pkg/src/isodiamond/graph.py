"""Undirected simple graphs, edge-list parsing, BFS distances and 2-coloring.

Vertices are the integers ``0 .. n-1``.  Edges keep the order in which they
were first seen, since downstream algorithms index them.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

#: Distance between vertices in different components.
UNREACHABLE = math.inf

WHITE = 0
BLACK = 1


class GraphError(ValueError):
    """Raised for malformed graph input."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class NotBipartite(GraphError):
    """The graph has an odd cycle; ``cycle`` lists its vertices in order."""

    def __init__(self, cycle: Sequence[int]):
        super().__init__(f"odd cycle of length {len(cycle)}: {list(cycle)}")
        self.cycle = list(cycle)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, collapsing duplicate edges and rejecting self-loops."""
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        seen = set()
        ordered = []
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                continue
            seen.add(key)
            ordered.append(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(ordered), tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    Each non-blank line that does not start with ``#`` holds two
    non-negative integers.  An optional first data line ``n <count>`` fixes
    the vertex count so that trailing isolated vertices survive.

    >>> parse_edge_list("0 1\\n1 2").edges
    ((0, 1), (1, 2))
    """
    declared = None
    pairs = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first and parts[0] == "n":
            first = False
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(lineno, f"bad vertex-count header {line!r}")
            declared = int(parts[1])
            continue
        first = False
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(lineno, f"expected two non-negative integers, got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        pairs.append((lineno, u, v))

    n = 1 + max((max(u, v) for _, u, v in pairs), default=-1)
    if declared is not None:
        if declared < n:
            raise ParseError(1, f"header declares {declared} vertices but index {n - 1} is used")
        n = declared
    return Graph.from_edges(n, ((u, v) for _, u, v in pairs))


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, source: int) -> list:
    """Hop counts from ``source``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> list[list]:
    return [bfs_distances(g, s) for s in range(g.n)]


def check_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return all(d is not UNREACHABLE for d in bfs_distances(g, 0))


@dataclass(frozen=True)
class TwoColoring:
    color: tuple[int, ...]

    def is_white(self, v: int) -> bool:
        return self.color[v] == WHITE

    def swapped(self) -> "TwoColoring":
        return TwoColoring(tuple(1 - c for c in self.color))


def two_color(g: Graph) -> TwoColoring:
    """Proper 2-coloring with vertex 0 white.

    Each component's smallest vertex is white.  Raises :class:`NotBipartite`
    carrying an odd cycle when none exists.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = WHITE
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    raise NotBipartite(_odd_cycle(parent, u, w))
    return TwoColoring(tuple(color))


def _odd_cycle(parent: list[int], u: int, w: int) -> list[int]:
    # u and w are adjacent with equal BFS-tree depth parity; join their tree
    # paths at the lowest common ancestor.
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    index_u = {v: i for i, v in enumerate(path_u)}
    path_w = [w]
    while path_w[-1] not in index_u:
        path_w.append(parent[path_w[-1]])
    lca = path_w[-1]
    return path_u[: index_u[lca] + 1] + path_w[-2::-1]
