"""Matplotlib rendering of hexagonal-tiling embeddings, for report figures."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.collections import LineCollection  # noqa: E402

from .diamond import DiamondEmbedding  # noqa: E402
from .drawing import UnsupportedDimension, project_to_plane  # noqa: E402
from .graph import Graph  # noqa: E402


def plot_embedding(g: Graph, e: DiamondEmbedding, ax=None, labels: bool = False,
                   color_vertices: bool = True):
    """Draw a dimension-2 embedding on ``ax`` and return the axes.

    Vertices with coordinate sum 0 are drawn white, sum 1 black.
    """
    if e.dimension != 2:
        raise UnsupportedDimension(f"only dimension-2 embeddings can be plotted, got {e.dimension}")
    if ax is None:
        _, ax = plt.subplots(figsize=(5, 5))
    pts = [project_to_plane(v) for v in e.vectors]
    segments = [[(pts[u].x, pts[u].y), (pts[v].x, pts[v].y)] for u, v in g.edges]
    ax.add_collection(LineCollection(segments, colors="0.2", linewidths=1.2, zorder=1))
    faces = ["white" if sum(v) == 0 or not color_vertices else "black" for v in e.vectors]
    ax.scatter([p.x for p in pts], [p.y for p in pts], s=36, c=faces,
               edgecolors="black", linewidths=0.8, zorder=2)
    if labels:
        for i, p in enumerate(pts):
            ax.annotate(str(i), (p.x, p.y), textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.set_axis_off()
    return ax


def save_embedding_figure(g: Graph, e: DiamondEmbedding, path, labels: bool = False,
                          dpi: int = 150) -> None:
    fig, ax = plt.subplots(figsize=(5, 5))
    try:
        plot_embedding(g, e, ax=ax, labels=labels)
        fig.savefig(path, dpi=dpi, bbox_inches="tight")
    finally:
        plt.close(fig)
