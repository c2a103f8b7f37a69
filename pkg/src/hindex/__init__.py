"""Exact degree-based graph indices and exhaustive checks of harmonic-index bounds."""

from .bounds import BoundReport, bound_2m_over_n, bound_cauchy_schwarz, spider_second_max_value, tree_extremal_values
from .constructions import PathAttachment, SpiderSpec, attach_paths, complete_bipartite, path, remove_edge, spider, star
from .enumeration import all_connected_labeled_graphs, all_free_trees, prufer_tree_oracle, random_connected_graph
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    add_edge,
    canonical_form,
    degree,
    is_complete_bipartite,
    is_connected,
    is_tree,
    is_triangle_free,
    new_graph,
    parse_graph6,
    to_graph6,
)
from .invariants import EdgeWeight, edge_weight, first_zagreb, harmonic_index, min_weight_edge, randic_index

__version__ = "0.1.0"
