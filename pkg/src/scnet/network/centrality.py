"""Degree, closeness and betweenness centrality on the unweighted graph.

Edge weights are ignored here. Betweenness is accumulated in exact
rational arithmetic, so scores do not depend on traversal order and match
an enumeration of shortest paths exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from scnet.errors import ConfigError
from scnet.network.graph import CollaborationGraph

MEASURES = ("degree", "closeness", "betweenness")


@dataclass(frozen=True)
class CentralityReport:
    measure: str
    scores: Mapping[str, float]

    def __post_init__(self) -> None:
        if self.measure not in MEASURES:
            raise ConfigError(f"unknown centrality measure {self.measure!r}; expected one of {MEASURES}")
        if any(s < 0 for s in self.scores.values()):
            raise ValueError("centrality scores must be non-negative")


def degree_centrality(g: CollaborationGraph) -> CentralityReport:
    return CentralityReport("degree", {v: float(len(ns)) for v, ns in g.adjacency.items()})


def _bfs_distances(adj: Mapping[str, tuple[str, ...]], source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def closeness_centrality(g: CollaborationGraph) -> CentralityReport:
    """Inverse mean distance to reachable nodes, scaled by the reachable fraction.

    For a node reaching ``r`` others at total distance ``farness`` in a graph
    of ``n`` nodes the score is ``(r / farness) * (r / (n - 1))``. Isolated
    nodes score 0; on a connected graph this is plain closeness.
    """
    adj = g.adjacency
    n = len(adj)
    scores: dict[str, float] = {}
    for v in adj:
        dist = _bfs_distances(adj, v)
        reach = len(dist) - 1
        farness = sum(dist.values())
        if reach == 0:
            scores[v] = 0.0
        else:
            scores[v] = float(Fraction(reach, farness) * Fraction(reach, n - 1))
    return CentralityReport("closeness", scores)


def betweenness_centrality(g: CollaborationGraph) -> CentralityReport:
    """Unnormalized betweenness via Brandes' dependency accumulation.

    Each unordered pair of endpoints is counted once.
    """
    adj = g.adjacency
    total: dict[str, Fraction] = {v: Fraction(0) for v in adj}
    for s in adj:
        order: list[str] = []
        preds: dict[str, list[str]] = {v: [] for v in adj}
        sigma: dict[str, int] = dict.fromkeys(adj, 0)
        dist: dict[str, int] = {s: 0}
        sigma[s] = 1
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta: dict[str, Fraction] = dict.fromkeys(order, Fraction(0))
        for w in reversed(order):
            coeff = (1 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                total[w] += delta[w]
    # every unordered pair was visited from both ends
    return CentralityReport("betweenness", {v: float(b / 2) for v, b in total.items()})


def compute(measure: str, g: CollaborationGraph) -> CentralityReport:
    funcs = {
        "degree": degree_centrality,
        "closeness": closeness_centrality,
        "betweenness": betweenness_centrality,
    }
    try:
        return funcs[measure](g)
    except KeyError:
        raise ConfigError(f"unknown centrality measure {measure!r}; expected one of {MEASURES}") from None


def top_k(report: CentralityReport, k: int) -> list[tuple[str, float]]:
    """Highest ``k`` scores, descending, ties broken by ascending ID."""
    if k < 1:
        raise ConfigError(f"k must be >= 1, got {k}")
    return sorted(report.scores.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
