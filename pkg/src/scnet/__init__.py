"""Stakeholder collaboration networks from disaster-response work orders.

Pipeline: load work-order records, match a stakeholder gazetteer against
each statement of work, link matches to canonical IDs, and connect every
pair of stakeholders named in the same document.
"""

from scnet.errors import (
    ConfigError,
    CorpusError,
    DataError,
    EvaluationError,
    GazetteerConflictError,
    RowError,
    ScnError,
)
from scnet.evaluation import EvalReport, GoldAnnotation, evaluate, sample_documents
from scnet.gazetteer import Gazetteer, GazetteerEntry, add_entry, load_gazetteer, normalize_surface
from scnet.ingestion import ColumnMapping, DateRange, DocumentRecord, filter_by_date, load_documents
from scnet.matcher import Mention, Token, extract_stakeholders, match_entities, tokenize
from scnet.network import (
    CentralityReport,
    CollaborationGraph,
    Edge,
    betweenness_centrality,
    build_interactions,
    closeness_centrality,
    connected_components,
    degree_centrality,
    maximal_cliques,
    temporal_slices,
    top_k,
)

__version__ = "0.1.0"

__all__ = [
    "CentralityReport",
    "CollaborationGraph",
    "ColumnMapping",
    "ConfigError",
    "CorpusError",
    "DataError",
    "DateRange",
    "DocumentRecord",
    "Edge",
    "EvalReport",
    "EvaluationError",
    "Gazetteer",
    "GazetteerConflictError",
    "GazetteerEntry",
    "GoldAnnotation",
    "Mention",
    "RowError",
    "ScnError",
    "Token",
    "add_entry",
    "betweenness_centrality",
    "build_interactions",
    "closeness_centrality",
    "connected_components",
    "degree_centrality",
    "evaluate",
    "extract_stakeholders",
    "filter_by_date",
    "load_documents",
    "load_gazetteer",
    "match_entities",
    "maximal_cliques",
    "normalize_surface",
    "sample_documents",
    "temporal_slices",
    "tokenize",
    "top_k",
]
