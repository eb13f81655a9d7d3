"""Undirected co-occurrence graph of stakeholders."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping


@dataclass(frozen=True, order=True)
class Edge:
    """Canonical undirected edge, ``a < b``; ``weight`` counts shared documents."""

    a: str
    b: str
    weight: int = 1

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError(f"self-loop on {self.a!r}")
        if self.a > self.b:
            raise ValueError(f"edge endpoints not in canonical order: {self.a!r} > {self.b!r}")
        if self.weight < 1:
            raise ValueError(f"edge weight must be >= 1, got {self.weight}")

    @property
    def pair(self) -> tuple[str, str]:
        return (self.a, self.b)


@dataclass(frozen=True, eq=False)
class CollaborationGraph:
    """Immutable simple graph. Edges are kept sorted by endpoint pair."""

    nodes: frozenset[str]
    edges: tuple[Edge, ...]
    _weights: Mapping[tuple[str, str], int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        edges = tuple(sorted(self.edges))
        weights: dict[tuple[str, str], int] = {}
        for e in edges:
            if e.a not in self.nodes or e.b not in self.nodes:
                raise ValueError(f"edge {e.a}-{e.b} has an endpoint outside the node set")
            if e.pair in weights:
                raise ValueError(f"duplicate edge {e.a}-{e.b}")
            weights[e.pair] = e.weight
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_weights", MappingProxyType(weights))

    @classmethod
    def from_pairs(cls, nodes: Iterable[str], pairs: Mapping[tuple[str, str], int]) -> CollaborationGraph:
        return cls(frozenset(nodes), tuple(Edge(a, b, w) for (a, b), w in pairs.items()))

    @classmethod
    def empty(cls) -> CollaborationGraph:
        return cls(frozenset(), ())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CollaborationGraph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.nodes, self.edges))

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_nodes(self) -> list[str]:
        return sorted(self.nodes)

    def weight(self, u: str, v: str) -> int:
        """Co-occurrence count for the pair, 0 when not adjacent."""
        return self._weights.get((u, v) if u < v else (v, u), 0)

    @cached_property
    def adjacency(self) -> Mapping[str, tuple[str, ...]]:
        """Sorted neighbour tuple per node; every node has an entry."""
        adj: dict[str, list[str]] = {v: [] for v in sorted(self.nodes)}
        for e in self.edges:
            adj[e.a].append(e.b)
            adj[e.b].append(e.a)
        return MappingProxyType({v: tuple(sorted(ns)) for v, ns in adj.items()})


def document_pairs(stakeholders: Iterable[str]) -> list[tuple[str, str]]:
    """All C(k, 2) canonical pairs among the distinct stakeholders of one document."""
    return list(combinations(sorted(set(stakeholders)), 2))


def build_interactions(doc_sets: Iterable[tuple[str, Iterable[str]]]) -> CollaborationGraph:
    """Connect every pair of stakeholders that appear in the same document.

    ``doc_sets`` yields ``(doc_id, stakeholder_ids)``. A document naming a
    single stakeholder still contributes that node.
    """
    nodes: set[str] = set()
    counts: Counter[tuple[str, str]] = Counter()
    for _doc_id, ids in doc_sets:
        ids = set(ids)
        nodes |= ids
        counts.update(document_pairs(ids))
    return CollaborationGraph.from_pairs(nodes, counts)
