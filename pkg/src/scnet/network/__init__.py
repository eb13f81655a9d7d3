from scnet.network.centrality import (
    MEASURES,
    CentralityReport,
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    top_k,
)
from scnet.network.graph import CollaborationGraph, Edge, build_interactions, document_pairs
from scnet.network.structure import connected_components, giant_component, maximal_cliques
from scnet.network.temporal import SliceDelta, graph_from_records, slice_deltas, temporal_slices

__all__ = [
    "MEASURES",
    "CentralityReport",
    "CollaborationGraph",
    "Edge",
    "SliceDelta",
    "betweenness_centrality",
    "build_interactions",
    "closeness_centrality",
    "connected_components",
    "degree_centrality",
    "document_pairs",
    "giant_component",
    "graph_from_records",
    "maximal_cliques",
    "slice_deltas",
    "temporal_slices",
    "top_k",
]
