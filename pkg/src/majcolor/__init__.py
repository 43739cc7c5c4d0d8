"""Majority edge-colorings of graphs: constructions, verifiers and an exhaustive oracle."""

from .coloring import EdgeColoring
from .euler2 import EulerTour, balanced_2coloring, balanced_2coloring_pinned, euler_tour
from .graph import (
    Graph,
    Multigraph,
    SplitMap,
    Subgraph,
    connected_components,
    edge_subgraph,
    from_edge_list,
    induced_subgraph,
    split_graph,
    split_vertex,
)
from .majority3 import build_E1, classify, fixup, majority3, majority3_pipeline
from .matching import (
    GEDecomposition,
    Matching,
    gallai_edmonds,
    match_A_to_components,
    max_matching,
    near_perfect_matching,
)
from .netflow import FlowNetwork, IntegralFlow, max_flow, select_edges, selection_network
from .properedge import alpha_majority_k2, kk_parts, majority4, mod3_parts, proper_edge_coloring
from .randomized import ResampleConfig, random_coloring, resample_until_valid
from .verify import Violation, brute_min_colors, verify_alpha, verify_majority

__version__ = "0.1.0"
