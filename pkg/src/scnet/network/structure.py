"""Subgroup structure: connected components and maximal cliques."""

from __future__ import annotations

from collections import deque

from scnet.network.graph import CollaborationGraph


def connected_components(g: CollaborationGraph) -> list[frozenset[str]]:
    """Components ordered by size (largest first), then by smallest member ID.

    The first element, when present, is the giant component.
    """
    adj = g.adjacency
    seen: set[str] = set()
    comps: list[frozenset[str]] = []
    for v in adj:
        if v in seen:
            continue
        seen.add(v)
        comp = [v]
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


def giant_component(g: CollaborationGraph) -> CollaborationGraph:
    """Subgraph induced by the largest component (empty graph for an empty input)."""
    comps = connected_components(g)
    if not comps:
        return CollaborationGraph.empty()
    keep = comps[0]
    return CollaborationGraph(keep, tuple(e for e in g.edges if e.a in keep))


def maximal_cliques(g: CollaborationGraph) -> list[tuple[str, ...]]:
    """Every maximal clique, via Bron-Kerbosch with Tomita pivoting.

    Each clique is a sorted tuple; the list is ordered by size descending,
    then lexicographically. Isolated nodes are maximal cliques of size 1.
    """
    adj = {v: frozenset(ns) for v, ns in g.adjacency.items()}
    found: list[tuple[str, ...]] = []

    def expand(r: list[str], p: set[str], x: set[str]) -> None:
        if not p and not x:
            found.append(tuple(sorted(r)))
            return
        # pivot maximizing |P ∩ N(u)| leaves the fewest branches; ties by ID for determinism
        pivot = max(sorted(p | x), key=lambda u: len(p & adj[u]))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    if adj:
        expand([], set(adj), set())
    found.sort(key=lambda c: (-len(c), c))
    return found
