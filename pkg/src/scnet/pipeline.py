"""End-to-end runs: records -> mentions -> collaboration graph."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from scnet.config import PipelineConfig
from scnet.gazetteer import Gazetteer, load_gazetteer
from scnet.ingestion import DocumentRecord, filter_by_date, load_documents
from scnet.matcher import Mention, extract_stakeholders
from scnet.network.graph import CollaborationGraph, build_interactions

_worker_gazetteer: Gazetteer | None = None


def _init_worker(g: Gazetteer) -> None:
    global _worker_gazetteer
    _worker_gazetteer = g


def _extract_in_worker(doc: DocumentRecord) -> tuple[frozenset[str], list[Mention]]:
    assert _worker_gazetteer is not None
    return extract_stakeholders(doc, _worker_gazetteer)


@dataclass(frozen=True)
class Extraction:
    records: tuple[DocumentRecord, ...]
    stakeholder_sets: tuple[frozenset[str], ...]
    mentions: tuple[Mention, ...]
    graph: CollaborationGraph

    def mentions_by_doc(self) -> dict[str, list[Mention]]:
        out: dict[str, list[Mention]] = {r.doc_id: [] for r in self.records}
        for m in self.mentions:
            out[m.doc_id].append(m)
        return out


def extract_corpus(records: Sequence[DocumentRecord], g: Gazetteer, *, jobs: int = 1) -> Extraction:
    """Run extraction over ``records`` and build the graph.

    With ``jobs > 1`` documents are spread over worker processes; results
    are gathered back in record order, so output is identical either way.
    """
    if jobs > 1 and len(records) > 1:
        chunk = max(1, len(records) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(g,)) as pool:
            results = list(pool.map(_extract_in_worker, records, chunksize=chunk))
    else:
        results = [extract_stakeholders(r, g) for r in records]
    sets = tuple(ids for ids, _ in results)
    mentions = tuple(m for _, ms in results for m in ms)
    graph = build_interactions(zip((r.doc_id for r in records), sets))
    return Extraction(tuple(records), sets, mentions, graph)


def load_inputs(config: PipelineConfig) -> tuple[list[DocumentRecord], Gazetteer]:
    """Load the configured corpus (windowed when a date range is set) and gazetteer."""
    config.require_inputs()
    g = load_gazetteer(config.gazetteer_path)
    records = load_documents(
        config.documents_path, config.column_mapping, delimiter=config.delimiter, strict=config.strict
    )
    if config.date_range is not None:
        records = filter_by_date(records, config.date_range)
    return records, g


def run_extraction(config: PipelineConfig) -> Extraction:
    records, g = load_inputs(config)
    return extract_corpus(records, g, jobs=config.jobs)
