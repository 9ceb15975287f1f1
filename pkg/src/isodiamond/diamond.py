"""Isometric embeddings into generalized diamond graphs.

A k-dimensional generalized diamond is the graph on integer (k+1)-vectors
whose coordinates sum to 0 or 1, with edges between vectors at L1 distance
one.  Embeddings here are always stored as those integer vectors; planar
projection is left to :mod:`isodiamond.drawing`.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import (
    Graph,
    NotBipartite,
    TwoColoring,
    all_pairs_distances,
    check_connected,
    two_color,
)
from .partial_cube import DwClass, compute_dw_classes, is_partial_cube


class IncoherentCut(ValueError):
    """A class whose spanning edges put white endpoints on both sides."""

    def __init__(self, class_id: int, edges: Sequence[tuple[int, int]]):
        super().__init__(f"cut {class_id} is incoherent: edges {list(edges)}")
        self.class_id = class_id
        self.edges = [tuple(e) for e in edges]


@dataclass(frozen=True)
class Certificate:
    reason: str  # odd_cycle | not_partial_cube | incoherent_cut | disconnected | empty
    witness: tuple = ()

    def to_json(self) -> dict:
        return {"reason": self.reason, "witness": [list(w) if isinstance(w, tuple) else w
                                                   for w in self.witness]}


class NotDiamondEmbeddable(ValueError):
    def __init__(self, certificate: Certificate):
        super().__init__(f"not an isometric diamond subgraph: {certificate.reason}")
        self.certificate = certificate


@dataclass(frozen=True)
class OrientedCut:
    class_id: int
    white_side: frozenset[int]
    black_side: frozenset[int]


@dataclass(frozen=True)
class CutPoset:
    k: int
    below: tuple[tuple[bool, ...], ...]

    def transpose(self) -> "CutPoset":
        return CutPoset(self.k, tuple(tuple(self.below[j][i] for j in range(self.k))
                                      for i in range(self.k)))


@dataclass(frozen=True)
class ChainDecomposition:
    chains: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.chains)


@dataclass(frozen=True)
class DiamondEmbedding:
    dimension: int
    vectors: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "vectors": [list(v) for v in self.vectors]}

    @classmethod
    def from_json(cls, doc: dict) -> "DiamondEmbedding":
        vectors = tuple(tuple(int(x) for x in v) for v in doc["vectors"])
        d = int(doc["dimension"])
        if any(len(v) != d + 1 for v in vectors):
            raise ValueError(f"every vector must have length dimension+1 = {d + 1}")
        return cls(d, vectors)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(", ", ": "))

    def padded(self, dimension: int) -> "DiamondEmbedding":
        """Same embedding with zero coordinates appended up to ``dimension``."""
        if dimension < self.dimension:
            raise ValueError("cannot pad to a smaller dimension")
        extra = (0,) * (dimension - self.dimension)
        return DiamondEmbedding(dimension, tuple(v + extra for v in self.vectors))


@dataclass(frozen=True)
class DiamondVerdict:
    embeddable: bool
    certificate: Optional[Certificate] = None
    classes: tuple[DwClass, ...] = ()
    coloring: Optional[TwoColoring] = None
    cuts: tuple[OrientedCut, ...] = ()
    distances: Optional[list] = field(default=None, repr=False, compare=False)

    def __bool__(self) -> bool:
        return self.embeddable


@dataclass(frozen=True)
class EmbeddingCheck:
    ok: bool
    violation: Optional[str] = None
    vertices: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def orient_cuts(classes: Sequence[DwClass], coloring: TwoColoring) -> list[OrientedCut]:
    """Orient each cut so its white side holds the white endpoints of its edges."""
    cuts = []
    for c in classes:
        white_side = None
        first = None
        for u, v in c.endpoints:
            w = u if coloring.is_white(u) else v
            side = c.side_of(w)
            if white_side is None:
                white_side, first = side, (u, v)
            elif side != white_side:
                raise IncoherentCut(c.id, [first, (u, v)])
        black_side = c.semicube_b if white_side is c.semicube_a else c.semicube_a
        cuts.append(OrientedCut(c.id, white_side, black_side))
    return cuts


def is_isometric_diamond_subgraph(g: Graph, coloring: Optional[TwoColoring] = None) -> DiamondVerdict:
    """Decide embeddability; the verdict carries the first obstruction found."""
    if g.n == 0:
        return DiamondVerdict(False, Certificate("empty"))
    if not check_connected(g):
        return DiamondVerdict(False, Certificate("disconnected", _unreached(g)))
    try:
        base_coloring = two_color(g)
    except NotBipartite as exc:
        return DiamondVerdict(False, Certificate("odd_cycle", tuple(exc.cycle)))
    if coloring is None:
        coloring = base_coloring
    dm = all_pairs_distances(g)
    pc = is_partial_cube(g, dm)
    if not pc:
        return DiamondVerdict(False, Certificate(pc.reason, pc.witness))
    try:
        cuts = orient_cuts(pc.classes, coloring)
    except IncoherentCut as exc:
        return DiamondVerdict(False, Certificate("incoherent_cut", (exc.class_id, *exc.edges)),
                              classes=pc.classes, coloring=coloring, distances=dm)
    return DiamondVerdict(True, None, pc.classes, coloring, tuple(cuts), dm)


def _unreached(g: Graph) -> tuple[int, ...]:
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return tuple(v for v in range(g.n) if v not in seen)


def cut_poset(cuts: Sequence[OrientedCut]) -> CutPoset:
    """Inclusion order on white sides: ``below[i][j]`` iff C_i is a proper subset of C_j."""
    sides = [c.white_side for c in cuts]
    if len(set(sides)) != len(sides):
        raise ValueError("two cuts share the same white side")
    k = len(sides)
    below = tuple(tuple(i != j and sides[i] <= sides[j] for j in range(k)) for i in range(k))
    return CutPoset(k, below)


def maximum_matching(k: int, below: Sequence[Sequence[bool]]) -> list[int]:
    """Maximum bipartite matching between left and right copies of the elements.

    Left ``i`` may match right ``j`` when ``below[i][j]``.  Returns ``succ``
    with ``succ[i] = j`` for matched pairs and -1 otherwise.  Kuhn's
    augmenting-path search, scanning vertices in index order.
    """
    succ = [-1] * k
    pred = [-1] * k
    adj = [[j for j in range(k) if below[i][j]] for i in range(k)]

    def augment(i: int, visited: list[bool]) -> bool:
        # iterative DFS over alternating paths starting at left vertex i
        stack = [(i, iter(adj[i]))]
        path = []
        while stack:
            left, it = stack[-1]
            advanced = False
            for j in it:
                if visited[j]:
                    continue
                visited[j] = True
                if pred[j] == -1:
                    path.append((left, j))
                    for a, b in path:
                        succ[a] = b
                        pred[b] = a
                    return True
                path.append((left, j))
                stack.append((pred[j], iter(adj[pred[j]])))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if path:
                    path.pop()
        return False

    for i in range(k):
        augment(i, [False] * k)
    return succ


def poset_width_and_chains(p: CutPoset) -> tuple[int, ChainDecomposition]:
    """Width via Dilworth: k minus a maximum matching of the comparability graph."""
    succ = maximum_matching(p.k, p.below)
    has_pred = [False] * p.k
    for j in succ:
        if j != -1:
            has_pred[j] = True
    chains = []
    for start in range(p.k):
        if has_pred[start]:
            continue
        chain = [start]
        while succ[chain[-1]] != -1:
            chain.append(succ[chain[-1]])
        chains.append(tuple(chain))
    width = p.k - sum(1 for j in succ if j != -1)
    assert width == len(chains)
    return width, ChainDecomposition(tuple(chains))


def _require(g: Graph) -> DiamondVerdict:
    verdict = is_isometric_diamond_subgraph(g)
    if not verdict:
        raise NotDiamondEmbeddable(verdict.certificate)
    return verdict


def diamond_dimension(g: Graph) -> int:
    verdict = _require(g)
    if not verdict.cuts:
        return 0
    width, _ = poset_width_and_chains(cut_poset(verdict.cuts))
    return width - 1


def embed_direct(g: Graph) -> DiamondEmbedding:
    """One coordinate per cut, plus one constant zero coordinate.

    Coordinate i is 0 on vertex 0's side of cut i, and otherwise +1 or -1
    according to whether vertex 0 lies on the white or black side.
    """
    verdict = _require(g)
    cuts = verdict.cuts
    base = 0
    vectors = []
    for w in range(g.n):
        row = []
        for c in cuts:
            base_white = base in c.white_side
            if base_white == (w in c.white_side):
                row.append(0)
            else:
                row.append(1 if base_white else -1)
        row.append(0)
        vectors.append(tuple(row))
    return DiamondEmbedding(len(cuts), tuple(vectors))


def embed_minimum(g: Graph) -> DiamondEmbedding:
    """Embedding of minimum dimension from an optimal chain decomposition.

    Vertex 0 sits at the origin.  Walking breadth-first, crossing an edge of
    a cut in chain c from its white to its black endpoint adds one to
    coordinate c; the reverse direction subtracts one.
    """
    verdict = _require(g)
    if not verdict.cuts:
        return DiamondEmbedding(0, ((0,),))
    width, decomposition = poset_width_and_chains(cut_poset(verdict.cuts))
    chain_of = {}
    for c, chain in enumerate(decomposition.chains):
        for cut_index in chain:
            chain_of[cut_index] = c
    edge_chain = {}
    for cut_index, cls in enumerate(verdict.classes):
        for e in cls.endpoints:
            edge_chain[e] = chain_of[cut_index]

    coloring = verdict.coloring
    vectors: list[Optional[list[int]]] = [None] * g.n
    vectors[0] = [0] * width
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if vectors[w] is not None:
                continue
            step = list(vectors[u])
            c = edge_chain[(min(u, w), max(u, w))]
            step[c] += 1 if coloring.is_white(u) else -1
            vectors[w] = step
            queue.append(w)
    return DiamondEmbedding(width - 1, tuple(tuple(v) for v in vectors))


def verify_embedding(g: Graph, e: DiamondEmbedding, dm=None) -> EmbeddingCheck:
    """Check coordinate sums, unit edge steps and the all-pairs isometry."""
    if len(e.vectors) != g.n:
        return EmbeddingCheck(False, f"expected {g.n} vectors, got {len(e.vectors)}")
    for v, vec in enumerate(e.vectors):
        if len(vec) != e.dimension + 1:
            return EmbeddingCheck(False, f"vector length {len(vec)} != dimension+1", (v,))
        if sum(vec) not in (0, 1):
            return EmbeddingCheck(False, f"sum out of range ({sum(vec)})", (v,))
    for u, v in g.edges:
        diffs = [abs(a - b) for a, b in zip(e.vectors[u], e.vectors[v]) if a != b]
        if diffs != [1]:
            return EmbeddingCheck(False, "edge is not a unit step in one coordinate", (u, v))
    if dm is None:
        dm = all_pairs_distances(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            l1 = sum(abs(a - b) for a, b in zip(e.vectors[u], e.vectors[v]))
            if l1 != dm[u][v]:
                return EmbeddingCheck(
                    False, f"L1 distance {l1} != graph distance {dm[u][v]}", (u, v))
    return EmbeddingCheck(True)
