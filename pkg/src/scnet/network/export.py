"""Node/edge datasets and graph interchange formats.

All writers sort their output so repeated runs produce identical bytes.
"""

from __future__ import annotations

import csv
import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Iterable

from scnet.errors import RowError
from scnet.matcher import Mention
from scnet.network.centrality import CentralityReport
from scnet.network.graph import CollaborationGraph, Edge

NODES_HEADER = ("stakeholder_id",)
EDGES_HEADER = ("source", "target", "weight")
MENTIONS_HEADER = ("doc_id", "start_char", "end_char", "surface", "stakeholder_id")
GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def write_nodes(g: CollaborationGraph, path: str | Path) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        w = _writer(fh)
        w.writerow(NODES_HEADER)
        w.writerows((v,) for v in g.sorted_nodes())


def write_edges(g: CollaborationGraph, path: str | Path) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        w = _writer(fh)
        w.writerow(EDGES_HEADER)
        w.writerows((e.a, e.b, e.weight) for e in g.edges)


def write_mentions(mentions: Iterable[Mention], path: str | Path) -> None:
    """Mentions in the order given; callers pass them in corpus order."""
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        w = _writer(fh)
        w.writerow(MENTIONS_HEADER)
        w.writerows((m.doc_id, m.start_char, m.end_char, m.matched_surface, m.stakeholder_id) for m in mentions)


def write_centrality(report: CentralityReport, path: str | Path) -> None:
    rows = sorted(report.scores.items(), key=lambda kv: (-kv[1], kv[0]))
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        w = _writer(fh)
        w.writerow(("stakeholder_id", report.measure))
        w.writerows((v, repr(s)) for v, s in rows)


def read_graph(nodes_path: str | Path, edges_path: str | Path) -> CollaborationGraph:
    """Rebuild a graph from the node and edge datasets written above."""
    nodes: set[str] = set()
    with Path(nodes_path).open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        next(reader, None)
        nodes.update(row[0] for row in reader if row)
    edges = []
    with Path(edges_path).open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        next(reader, None)
        for row in reader:
            if not row:
                continue
            try:
                a, b, weight = row
                a, b = sorted((a, b))
                edges.append(Edge(a, b, int(weight)))
            except ValueError as exc:
                raise RowError(f"bad edge row {row}: {exc}", path=edges_path, row=reader.line_num) from None
    nodes.update(v for e in edges for v in e.pair)
    return CollaborationGraph(frozenset(nodes), tuple(edges))


def to_graphml(g: CollaborationGraph) -> str:
    root = ET.Element("graphml", xmlns=GRAPHML_NS)
    ET.SubElement(root, "key", {"id": "w", "for": "edge", "attr.name": "weight", "attr.type": "int"})
    graph = ET.SubElement(root, "graph", id="SCN", edgedefault="undirected")
    for v in g.sorted_nodes():
        ET.SubElement(graph, "node", id=v)
    for e in g.edges:
        el = ET.SubElement(graph, "edge", source=e.a, target=e.b)
        ET.SubElement(el, "data", key="w").text = str(e.weight)
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: CollaborationGraph, name: str = "SCN") -> str:
    lines = [f"graph {_dot_id(name)} {{"]
    lines += [f"  {_dot_id(v)};" for v in g.sorted_nodes()]
    lines += [f"  {_dot_id(e.a)} -- {_dot_id(e.b)} [weight={e.weight}];" for e in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_graphml(g: CollaborationGraph, path: str | Path) -> None:
    Path(path).write_text(to_graphml(g), encoding="utf-8")


def write_dot(g: CollaborationGraph, path: str | Path) -> None:
    Path(path).write_text(to_dot(g), encoding="utf-8")
