"""Recognize and construct isometric embeddings into generalized diamond graphs."""

from .diamond import (
    Certificate,
    ChainDecomposition,
    CutPoset,
    DiamondEmbedding,
    IncoherentCut,
    NotDiamondEmbeddable,
    OrientedCut,
    cut_poset,
    diamond_dimension,
    embed_direct,
    embed_minimum,
    is_isometric_diamond_subgraph,
    orient_cuts,
    poset_width_and_chains,
    verify_embedding,
)
from .drawing import DrawingConfig, UnsupportedDimension, emit_svg, project_to_plane
from .generators import DiamondPatch, generate_diamond_patch, generate_named
from .graph import (
    UNREACHABLE,
    Graph,
    NotBipartite,
    all_pairs_distances,
    bfs_distances,
    check_connected,
    parse_edge_list,
    two_color,
)
from .oracle import brute_force_embeddable, brute_force_min_dimension
from .partial_cube import DwClass, compute_dw_classes, dw_related, hypercube_label, is_partial_cube

__version__ = "0.1.0"
