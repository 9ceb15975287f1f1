"""Acceptance criteria; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import math
import re
import time
from itertools import combinations

import pytest

from conftest import EMBEDDABLE_FIXTURES, atlas_graphs, embeddable_fixture_graphs
from isodiamond.diamond import (
    cut_poset,
    diamond_dimension,
    embed_direct,
    embed_minimum,
    is_isometric_diamond_subgraph,
    poset_width_and_chains,
    verify_embedding,
)
from isodiamond.drawing import DrawingConfig, emit_svg
from isodiamond.generators import generate_diamond_patch, generate_named
from isodiamond.graph import two_color
from isodiamond.oracle import brute_force_embeddable, brute_force_min_dimension
from isodiamond.partial_cube import compute_dw_classes, is_partial_cube
from oracles import hop_distances

EDGE_REL_TOL = 1e-9


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail
    return emit


def test_criterion_1_desargues(report):
    start = time.perf_counter()
    g = generate_named("desargues")
    classes = compute_dw_classes(g)
    verdict = is_isometric_diamond_subgraph(g)
    emb = embed_direct(g)
    check = verify_embedding(g, emb)
    elapsed = time.perf_counter() - start
    ok = (len(classes) == 5 and bool(verdict) and len(verdict.cuts) == 5
          and emb.dimension == 5 and all(len(v) == 6 for v in emb.vectors)
          and bool(check) and elapsed < 1.0)
    report(1, ok, f"Desargues: {len(classes)} classes, all coherent={bool(verdict)}, "
                  f"direct embedding dim {emb.dimension} verified={bool(check)}, {elapsed:.3f}s < 1s")


def test_criterion_2_hypercubes_rejected(report):
    start = time.perf_counter()
    details, ok = [], True
    for name in ("c4", "q3"):
        g = generate_named(name)
        pc = is_partial_cube(g)
        verdict = is_isometric_diamond_subgraph(g)
        reason = verdict.certificate.reason if verdict.certificate else None
        ok &= bool(pc) and not verdict and reason == "incoherent_cut"
        details.append(f"{name}: partial_cube={bool(pc)} diamond={bool(verdict)} ({reason})")
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1.0
    report(2, ok, "; ".join(details) + f", {elapsed:.3f}s < 1s")


def test_criterion_3_dimension_formula(report):
    start = time.perf_counter()
    cases = [("k2", generate_named("k2"), 0), ("p3", generate_named("p3"), 1),
             ("c6", generate_named("c6"), 2)]
    cases += [(f"patch(k={k},r=2)", generate_diamond_patch(k, 2).graph, k) for k in range(4)]
    ok, details = True, []
    for name, g, expected in cases:
        verdict = is_isometric_diamond_subgraph(g)
        width, dec = poset_width_and_chains(cut_poset(verdict.cuts))
        d = diamond_dimension(g)
        emb = embed_minimum(g)
        good = (d == expected and d + 1 == width == len(dec)
                and emb.dimension == d and bool(verify_embedding(g, emb)))
        ok &= good
        details.append(f"{name}->{d}")
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    report(3, ok, ", ".join(details) + f" (width = dim+1), {elapsed:.3f}s < 5s")


def test_criterion_4_oracle_equivalence(report):
    graphs = atlas_graphs(7)
    start = time.perf_counter()
    mismatches, embeddable = [], 0
    for g in graphs:
        fast = bool(is_isometric_diamond_subgraph(g))
        slow = bool(brute_force_embeddable(g, 6, 7))
        if fast != slow:
            mismatches.append(("verdict", g.edges))
            continue
        if fast:
            embeddable += 1
            if diamond_dimension(g) != brute_force_min_dimension(g, 6, 7):
                mismatches.append(("dimension", g.edges))
    elapsed = time.perf_counter() - start
    report(4, not mismatches and len(graphs) == 996,
           f"{len(graphs)} connected atlas graphs on <=7 vertices, {embeddable} embeddable, "
           f"{len(mismatches)} mismatches vs brute force (kmax=6, r=7), {elapsed:.1f}s")


def test_criterion_5_color_reversal(report):
    ok, details = True, []
    for name, g in sorted(embeddable_fixture_graphs().items()):
        verdict = is_isometric_diamond_subgraph(g)
        swapped = is_isometric_diamond_subgraph(g, coloring=two_color(g).swapped())
        p, q = cut_poset(verdict.cuts), cut_poset(swapped.cuts)
        w_p, w_q = poset_width_and_chains(p)[0], poset_width_and_chains(q)[0]
        good = q.below == p.transpose().below and w_p == w_q
        ok &= good
        details.append(f"{name}:{w_p}")
    report(5, ok, "below' = transpose(below), widths unchanged: " + ", ".join(details))


def _independent_violations(g, emb):
    dm = hop_distances(g)
    count = 0
    for v in emb.vectors:
        count += sum(v) not in (0, 1)
    for u, w in g.edges:
        diff = [abs(a - b) for a, b in zip(emb.vectors[u], emb.vectors[w])]
        count += sorted(diff)[-1:] != [1] or sum(diff) != 1
    for u, w in combinations(range(g.n), 2):
        count += sum(abs(a - b) for a, b in zip(emb.vectors[u], emb.vectors[w])) != dm[u][w]
    return count


def test_criterion_6_isometry_suite(report):
    fixtures = embeddable_fixture_graphs()
    fixtures.update({f"patch(k={k},r=1)": generate_diamond_patch(k, 1).graph for k in range(4)})
    total, checked = 0, 0
    for name, g in fixtures.items():
        for build in (embed_direct, embed_minimum):
            emb = build(g)
            total += _independent_violations(g, emb)
            total += not verify_embedding(g, emb)
            checked += 1
    report(6, total == 0, f"{checked} embeddings over {len(fixtures)} fixtures "
                          f"({', '.join(EMBEDDABLE_FIXTURES)}, patches): {total} violations")


LINE = re.compile(r'<line x1="([^"]+)" y1="([^"]+)" x2="([^"]+)" y2="([^"]+)"/>')


def _geometry_errors(g, emb, cfg):
    svg = emit_svg(g, emb, cfg)
    segs = [tuple(map(float, m)) for m in LINE.findall(svg)]
    assert len(segs) == g.m
    expected = cfg.scale * math.sqrt(2 / 3)
    errors = 0
    for x1, y1, x2, y2 in segs:
        errors += abs(math.dist((x1, y1), (x2, y2)) - expected) > EDGE_REL_TOL * expected
    # angles between edges meeting at a vertex
    circles = {int(i): (float(x), float(y)) for i, x, y in
               re.findall(r'<circle id="v(\d+)" cx="([^"]+)" cy="([^"]+)"', svg)}
    for v in range(g.n):
        cx, cy = circles[v]
        dirs = [math.atan2(circles[w][1] - cy, circles[w][0] - cx) for w in g.neighbors(v)]
        for a, b in combinations(dirs, 2):
            angle = math.degrees(abs(a - b)) % 360
            errors += abs(angle / 60 - round(angle / 60)) > 1e-6
    return errors


def test_criterion_7_drawing_geometry(report):
    cfg = DrawingConfig()
    c6 = generate_named("c6")
    patch = generate_diamond_patch(2, 2)
    from isodiamond.diamond import DiamondEmbedding
    cases = [("embed_minimum(C6)", c6, embed_minimum(c6)),
             ("embed_minimum(patch k=2,r=2)", patch.graph, embed_minimum(patch.graph)),
             ("patch k=2,r=2 own coords", patch.graph, DiamondEmbedding(2, patch.coords))]
    errors = {name: _geometry_errors(g, e, cfg) for name, g, e in cases}
    report(7, not any(errors.values()),
           f"edges = scale*sqrt(2/3) within {EDGE_REL_TOL:g} rel, angles multiples of 60 deg; "
           f"errors {errors}")
