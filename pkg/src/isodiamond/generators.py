"""Finite patches of generalized diamond graphs and named fixture graphs."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .graph import Graph

DEFAULT_PATCH_CAP = 200_000


class ResourceLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DiamondPatch:
    k: int
    r: int
    metric: str
    graph: Graph
    coords: tuple[tuple[int, ...], ...]


def _ball(length: int, budget: int):
    # integer vectors in lexicographic order with L1 norm <= budget
    if length == 0:
        yield ()
        return
    for x in range(-budget, budget + 1):
        for rest in _ball(length - 1, budget - abs(x)):
            yield (x,) + rest


def _box(length: int, r: int):
    return itertools.product(range(-r, r + 1), repeat=length)


def generate_diamond_patch(k: int, r: int, metric: str = "box",
                           cap: int = DEFAULT_PATCH_CAP) -> DiamondPatch:
    """Points of the k-dimensional diamond near the origin.

    With ``metric="box"`` every coordinate lies in ``[-r, r]``; the region is
    convex, so the patch is an isometric subgraph of the diamond.  With
    ``metric="ball"`` the L1 norm is at most ``r``; for k >= 2 and r >= 2
    such balls are not isometric (two boundary points can share their only
    common neighbour just outside the ball).

    Vertices are numbered in lexicographic order of their (k+1)-vectors.
    """
    if k < 0 or r < 0:
        raise ValueError("k and r must be non-negative")
    if metric == "box":
        if (2 * r + 1) ** (k + 1) > 50 * cap:
            raise ResourceLimitExceeded(f"diamond patch k={k}, r={r} is too large to enumerate")
        candidates = _box(k + 1, r)
    elif metric == "ball":
        candidates = _ball(k + 1, r)
    else:
        raise ValueError(f"unknown patch metric {metric!r}")
    coords = []
    for v in candidates:
        if sum(v) in (0, 1):
            coords.append(v)
            if len(coords) > cap:
                raise ResourceLimitExceeded(f"diamond patch k={k}, r={r} exceeds {cap} vertices")
    index = {v: i for i, v in enumerate(coords)}
    edges = []
    for i, v in enumerate(coords):
        if sum(v) != 0:
            continue
        for axis in range(k + 1):
            w = v[:axis] + (v[axis] + 1,) + v[axis + 1:]
            j = index.get(w)
            if j is not None:
                edges.append((min(i, j), max(i, j)))
    edges.sort()
    return DiamondPatch(k, r, metric, Graph.from_edges(len(coords), edges), tuple(coords))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def hypercube_graph(dim: int) -> Graph:
    n = 1 << dim
    return Graph.from_edges(n, ((v, v | (1 << b)) for v in range(n) for b in range(dim)
                                if not v & (1 << b)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def desargues_graph() -> Graph:
    """Generalized Petersen graph GP(10, 3).

    Outer cycle 0-9, spokes i -- i+10, inner vertices 10-19 joined with step 3.
    """
    edges = [(i, (i + 1) % 10) for i in range(10)]
    edges += [(i, i + 10) for i in range(10)]
    edges += [(10 + i, 10 + (i + 3) % 10) for i in range(10)]
    return Graph.from_edges(20, edges)


_FIXED = {
    "desargues": desargues_graph,
    "c4": lambda: cycle_graph(4),
    "c6": lambda: cycle_graph(6),
    "q3": lambda: hypercube_graph(3),
    "k23": lambda: complete_bipartite(2, 3),
    "k2": lambda: path_graph(2),
}

NAMED_GRAPHS = tuple(_FIXED) + ("p<N>", "cycle<N>")


def generate_named(name: str) -> Graph:
    """Fixture graph by name: desargues, c4, c6, q3, k23, k2, p<N>, cycle<N>."""
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"(p|path|cycle|c)_?(\d+)", key)
    if m:
        size = int(m.group(2))
        if m.group(1) in ("p", "path"):
            if size < 1:
                raise ValueError("a path needs at least one vertex")
            return path_graph(size)
        return cycle_graph(size)
    raise ValueError(f"unknown graph name {name!r}; choose from {', '.join(NAMED_GRAPHS)}")
