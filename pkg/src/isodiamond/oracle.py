"""Brute-force embedding search used to cross-check the fast algorithms.

Nothing here looks at Djokovic-Winkler classes or colorings: the search
places vertices one at a time on diamond points and keeps a placement only
if every L1 distance to an earlier vertex equals the graph distance.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .generators import ResourceLimitExceeded
from .graph import Graph, all_pairs_distances, check_connected

DEFAULT_NODE_CAP = 5_000_000


@dataclass(frozen=True)
class OracleResult:
    found: bool
    placement: Optional[tuple[tuple[int, ...], ...]] = None

    def __bool__(self) -> bool:
        return self.found


def _bfs_order(g: Graph) -> tuple[list[int], list[int]]:
    order, parent = [0], [-1] * g.n
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
                queue.append(w)
    return order, parent


def brute_force_embeddable(g: Graph, k: int, r: int, cap: int = DEFAULT_NODE_CAP) -> OracleResult:
    """Search for an isometric placement of ``g`` in the k-dimensional diamond.

    Points are restricted to L1 norm at most ``r``.  Vertex 0 goes to the
    origin, and failing that to the unit point ``e_0``.  Coordinates are
    interchangeable, so a fresh axis is only ever the lowest unused one.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if not check_connected(g):
        raise ValueError("graph is not connected")
    if k < 0:
        return OracleResult(False)
    dm = all_pairs_distances(g)
    order, parent = _bfs_order(g)
    dims = k + 1
    nodes = [0]

    def search(pos: dict, depth: int, used: int) -> Optional[dict]:
        if depth == len(order):
            return pos
        nodes[0] += 1
        if nodes[0] > cap:
            raise ResourceLimitExceeded(f"oracle search exceeded {cap} nodes")
        v = order[depth]
        x = pos[parent[v]]
        step = 1 if sum(x) == 0 else -1
        for axis in range(min(used + 1, dims)):
            y = x[:axis] + (x[axis] + step,) + x[axis + 1:]
            if sum(map(abs, y)) > r:
                continue
            if all(sum(abs(a - b) for a, b in zip(y, pos[u])) == dm[v][u]
                   for u in order[:depth]):
                pos[v] = y
                found = search(pos, depth + 1, max(used, axis + 1))
                if found is not None:
                    return found
                del pos[v]
        return None

    origin = (0,) * dims
    starts = [(origin, 0)]
    if r >= 1:
        starts.append(((1,) + (0,) * k, 1))
    for start, used in starts:
        found = search({0: start}, 1, used)
        if found is not None:
            return OracleResult(True, tuple(found[v] for v in range(g.n)))
    return OracleResult(False)


def brute_force_min_dimension(g: Graph, kmax: int, r: int,
                              cap: int = DEFAULT_NODE_CAP) -> Optional[int]:
    for k in range(kmax + 1):
        if brute_force_embeddable(g, k, r, cap):
            return k
    return None
