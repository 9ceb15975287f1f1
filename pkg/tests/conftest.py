import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from isodiamond.generators import generate_diamond_patch, generate_named
from isodiamond.graph import Graph, check_connected

settings.register_profile("default", deadline=None)
settings.load_profile("default")

EMBEDDABLE_FIXTURES = ["k2", "p3", "p5", "p8", "c6", "desargues"]


def atlas_graphs(max_n=7):
    """All connected graphs on 1..max_n vertices from the networkx graph atlas."""
    nx = pytest.importorskip("networkx")
    out = []
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= max_n and nx.is_connected(G):
            out.append(Graph.from_edges(G.number_of_nodes(), G.edges()))
    return out


def random_connected_graph(rng: random.Random, n: int, extra: int) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def connected_graphs(draw, max_n=8, max_extra=6):
    n = draw(st.integers(1, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    edges = {(p, v) for v, p in zip(range(1, n), parents)}
    if n >= 2:
        pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda t: t[0] != t[1])
        for u, v in draw(st.lists(pairs, max_size=max_extra)):
            edges.add((min(u, v), max(u, v)))
    g = Graph.from_edges(n, sorted(edges))
    assert check_connected(g)
    return g


def embeddable_fixture_graphs():
    graphs = {name: generate_named(name) for name in EMBEDDABLE_FIXTURES}
    for k in range(4):
        graphs[f"patch{k}r2"] = generate_diamond_patch(k, 2).graph
    return graphs
