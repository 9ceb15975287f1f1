"""Djokovic-Winkler classes, semicubes and partial-cube recognition.

Recognition computes the relation on all edge pairs from precomputed
distances, groups edges into candidate classes by connected components of
the relation, and certifies the result by checking that the induced
hypercube labeling is an isometry.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, NotBipartite, all_pairs_distances, check_connected, two_color


class NotPartialCube(ValueError):
    """A candidate class does not split the graph into two semicubes."""

    def __init__(self, message: str, class_id: Optional[int] = None):
        super().__init__(message)
        self.class_id = class_id


@dataclass(frozen=True)
class DwClass:
    id: int
    edges: tuple[int, ...]
    endpoints: tuple[tuple[int, int], ...]
    semicube_a: frozenset[int]
    semicube_b: frozenset[int]

    def side_of(self, v: int) -> frozenset[int]:
        return self.semicube_a if v in self.semicube_a else self.semicube_b


@dataclass(frozen=True)
class HypercubeLabeling:
    base: int
    bits: tuple[tuple[int, ...], ...]

    def hamming(self, u: int, v: int) -> int:
        return sum(a != b for a, b in zip(self.bits[u], self.bits[v]))


@dataclass(frozen=True)
class PartialCubeVerdict:
    is_partial_cube: bool
    labeling: Optional[HypercubeLabeling] = None
    classes: tuple[DwClass, ...] = ()
    reason: Optional[str] = None
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.is_partial_cube


def dw_related(e: Sequence[int], f: Sequence[int], dm) -> bool:
    """Djokovic-Winkler relation in its equal-sums form.

    On bipartite graphs this agrees with the classical
    ``d(p,r) + d(q,s) != d(p,s) + d(q,r)`` test.
    """
    p, q = e
    r, s = f
    return dm[p][r] + dm[p][s] == dm[q][r] + dm[q][s]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller root wins so representatives are minimum edge indices
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def relation_components(g: Graph, dm) -> list[list[int]]:
    """Edge-index groups of the relation graph, ordered by minimum edge index."""
    uf = _UnionFind(g.m)
    edges = g.edges
    for i in range(g.m):
        for j in range(i + 1, g.m):
            if dw_related(edges[i], edges[j], dm):
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(g.m):
        groups.setdefault(uf.find(i), []).append(i)
    return [groups[root] for root in sorted(groups)]


def _components_without(g: Graph, removed: set[tuple[int, int]]) -> list[frozenset[int]]:
    label = [-1] * g.n
    comps = []
    for root in range(g.n):
        if label[root] != -1:
            continue
        label[root] = len(comps)
        members = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if label[w] == -1 and (min(u, w), max(u, w)) not in removed:
                    label[w] = len(comps)
                    members.append(w)
                    queue.append(w)
        comps.append(frozenset(members))
    return comps


def compute_dw_classes(g: Graph, dm=None) -> list[DwClass]:
    """Djokovic-Winkler classes with their semicubes.

    Raises :class:`NotPartialCube` if deleting a class does not leave exactly
    two components separated by every edge of the class.
    """
    if dm is None:
        dm = all_pairs_distances(g)
    classes = []
    for cid, group in enumerate(relation_components(g, dm)):
        endpoints = tuple(g.edges[i] for i in group)
        comps = _components_without(g, set(endpoints))
        if len(comps) != 2:
            raise NotPartialCube(
                f"class {cid} leaves {len(comps)} components when deleted", cid)
        a, b = comps
        if 0 in b:
            a, b = b, a
        for u, v in endpoints:
            if (u in a) == (v in a):
                raise NotPartialCube(f"class {cid} edge ({u}, {v}) does not span its cut", cid)
        classes.append(DwClass(cid, tuple(group), endpoints, a, b))
    return classes


def hypercube_label(g: Graph, classes: Sequence[DwClass], base: int = 0) -> HypercubeLabeling:
    bits = tuple(
        tuple(0 if (w in c.semicube_a) == (base in c.semicube_a) else 1 for c in classes)
        for w in range(g.n)
    )
    return HypercubeLabeling(base, bits)


def _halfspace_labeling(g: Graph, dm, groups: list[list[int]]) -> HypercubeLabeling:
    # Fallback used only to produce a witness pair: each group is split by
    # which endpoint of its first edge a vertex is closer to.
    bits = []
    for w in range(g.n):
        row = []
        for group in groups:
            p, q = g.edges[group[0]]
            row.append(0 if (dm[w][p] < dm[w][q]) == (dm[0][p] < dm[0][q]) else 1)
        bits.append(tuple(row))
    return HypercubeLabeling(0, tuple(bits))


def find_isometry_violation(labeling: HypercubeLabeling, dm) -> Optional[tuple[int, int]]:
    n = len(labeling.bits)
    for u in range(n):
        for v in range(u + 1, n):
            if labeling.hamming(u, v) != dm[u][v]:
                return (u, v)
    return None


def is_partial_cube(g: Graph, dm=None) -> PartialCubeVerdict:
    """Decide whether ``g`` embeds isometrically in a hypercube.

    The labeling uses vertex 0 as the all-zero base.  Negative verdicts carry
    either an odd cycle or a vertex pair whose label Hamming distance differs
    from the graph distance.
    """
    if not check_connected(g):
        raise ValueError("graph is not connected")
    try:
        two_color(g)
    except NotBipartite as exc:
        return PartialCubeVerdict(False, reason="odd_cycle", witness=tuple(exc.cycle))
    if dm is None:
        dm = all_pairs_distances(g)
    try:
        classes = compute_dw_classes(g, dm)
    except NotPartialCube:
        labeling = _halfspace_labeling(g, dm, relation_components(g, dm))
        pair = find_isometry_violation(labeling, dm)
        assert pair is not None
        return PartialCubeVerdict(False, reason="not_partial_cube", witness=pair)
    labeling = hypercube_label(g, classes, 0)
    pair = find_isometry_violation(labeling, dm)
    if pair is not None:
        return PartialCubeVerdict(False, reason="not_partial_cube", witness=pair,
                                  classes=tuple(classes))
    return PartialCubeVerdict(True, labeling=labeling, classes=tuple(classes))
