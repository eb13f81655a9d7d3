"""Per-window networks for tracking how collaboration changes over time."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from scnet.errors import ConfigError
from scnet.gazetteer import Gazetteer
from scnet.ingestion import DateRange, DocumentRecord, filter_by_date
from scnet.matcher import extract_stakeholders
from scnet.network.graph import CollaborationGraph, build_interactions


def graph_from_records(records: Sequence[DocumentRecord], g: Gazetteer) -> CollaborationGraph:
    return build_interactions((r.doc_id, extract_stakeholders(r, g)[0]) for r in records)


def temporal_slices(
    records: Sequence[DocumentRecord],
    g: Gazetteer,
    windows: Sequence[DateRange],
) -> list[CollaborationGraph]:
    """One graph per window, built only from the records dated inside it."""
    if not windows:
        raise ConfigError("at least one window is required")
    for w in windows:
        if w.start > w.end:
            raise ConfigError(f"invalid window: start {w.start} is after end {w.end}")
    return [graph_from_records(filter_by_date(records, w), g) for w in windows]


@dataclass(frozen=True)
class SliceDelta:
    """What appears in a window that was absent from the previous one."""

    emerging_nodes: tuple[str, ...]
    emerging_edges: tuple[tuple[str, str], ...]


def slice_deltas(graphs: Sequence[CollaborationGraph]) -> list[SliceDelta]:
    out = []
    prev = CollaborationGraph.empty()
    for graph in graphs:
        prev_pairs = {e.pair for e in prev.edges}
        out.append(
            SliceDelta(
                tuple(sorted(graph.nodes - prev.nodes)),
                tuple(e.pair for e in graph.edges if e.pair not in prev_pairs),
            )
        )
        prev = graph
    return out
