"""Planar drawings of 2-dimensional diamond embeddings (hexagonal tiling)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .diamond import DiamondEmbedding
from .graph import Graph

SQRT2 = math.sqrt(2.0)
SQRT6 = math.sqrt(6.0)
#: Projected length of a unit lattice step.
EDGE_LENGTH = math.sqrt(2.0 / 3.0)


class UnsupportedDimension(ValueError):
    pass


@dataclass(frozen=True)
class DrawingConfig:
    scale: float = 100.0
    margin: float = 20.0
    vertex_radius: float = 4.0

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError("scale must be positive")
        if self.margin < 0:
            raise ValueError("margin must be non-negative")
        if self.vertex_radius < 0:
            raise ValueError("vertex radius must be non-negative")


@dataclass(frozen=True)
class PlanarPoint:
    x: float
    y: float


def project_to_plane(v: Sequence[int]) -> PlanarPoint:
    """Orthogonal projection onto the plane x+y+z=0 in a fixed orthonormal basis."""
    if len(v) != 3:
        raise ValueError(f"expected a 3-vector, got length {len(v)}")
    a, b, c = v
    return PlanarPoint((a - b) / SQRT2, (a + b - 2 * c) / SQRT6)


def layout(e: DiamondEmbedding, cfg: DrawingConfig = DrawingConfig()) -> list[tuple[float, float]]:
    """Pixel positions: projected, scaled, y flipped and shifted into the margin."""
    if e.dimension != 2:
        raise UnsupportedDimension(f"only dimension-2 embeddings can be drawn, got {e.dimension}")
    pts = [project_to_plane(v) for v in e.vectors]
    if not pts:
        return []
    min_x = min(p.x for p in pts)
    max_y = max(p.y for p in pts)
    return [(cfg.margin + (p.x - min_x) * cfg.scale, cfg.margin + (max_y - p.y) * cfg.scale)
            for p in pts]


def _num(x: float) -> str:
    s = f"{x:.10f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def emit_svg(g: Graph, e: DiamondEmbedding, cfg: DrawingConfig = DrawingConfig()) -> str:
    """SVG 1.1 text: one ``line`` per edge then one ``circle`` per vertex, in index order."""
    pos = layout(e, cfg)
    if len(pos) != g.n:
        raise ValueError("embedding does not cover every vertex")
    width = max((x for x, _ in pos), default=0.0) + cfg.margin
    height = max((y for _, y in pos), default=0.0) + cfg.margin
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">',
        '<g stroke="black" stroke-width="1.5">',
    ]
    for u, v in g.edges:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        out.append(f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}"/>')
    out.append("</g>")
    out.append('<g fill="white" stroke="black">')
    for v, (x, y) in enumerate(pos):
        out.append(f'<circle id="v{v}" cx="{_num(x)}" cy="{_num(y)}" r="{_num(cfg.vertex_radius)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
