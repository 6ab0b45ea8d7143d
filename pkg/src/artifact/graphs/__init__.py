"""Neutrosophic graph structures, products and whole-graph measures."""

from .graph import (
    CHANNEL_NAMES,
    CHANNEL_RULES,
    NeutroGraph,
    complete_graph,
    edge_key,
    label_channels,
    label_from_channels,
)
from .products import SEP, cartesian, composition, join, union
from .hausdorff import (
    HAUSDORFF_FORMS,
    graph_hausdorff,
    graph_prob_similarity,
    hausdorff_channel,
    matrix_collections,
)

__all__ = [
    "CHANNEL_NAMES",
    "CHANNEL_RULES",
    "HAUSDORFF_FORMS",
    "NeutroGraph",
    "SEP",
    "cartesian",
    "complete_graph",
    "composition",
    "edge_key",
    "graph_hausdorff",
    "graph_prob_similarity",
    "hausdorff_channel",
    "join",
    "label_channels",
    "label_from_channels",
    "matrix_collections",
    "union",
]
