from __future__ import annotations

import csv
import random
from pathlib import Path

import pytest

from scnet.network.graph import CollaborationGraph, Edge

FIXTURES = Path(__file__).parent / "fixtures"


def write_csv(path: Path, header, rows) -> Path:
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    return path


def make_graph(nodes, edges) -> CollaborationGraph:
    return CollaborationGraph(frozenset(nodes), tuple(Edge(*sorted(e)) for e in edges))


def random_graph(seed: int, *, max_nodes: int = 7, connected: bool = False):
    """Seeded G(n, p) graph with n in 1..max_nodes; optionally forced connected
    by first laying down a random spanning tree."""
    rng = random.Random(seed)
    n = rng.randint(1, max_nodes)
    p = rng.choice((0.2, 0.35, 0.5, 0.7, 0.9))
    nodes = [f"v{i}" for i in range(n)]
    edges = set()
    if connected:
        order = nodes[:]
        rng.shuffle(order)
        for i in range(1, n):
            edges.add(tuple(sorted((order[i], rng.choice(order[:i])))))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((nodes[i], nodes[j]))
    return nodes, sorted(edges)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


# --- acceptance summary -------------------------------------------------

_acceptance: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test checks")


def pytest_runtest_logreport(report):
    if report.when == "teardown":
        return
    item_marker = getattr(report, "criterion_label", None)
    if item_marker is None:
        return
    if report.when == "call" or report.outcome != "passed":
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        _acceptance[report.nodeid] = (item_marker, status)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion_label = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(_acceptance.values(), key=lambda x: int(x[0].split()[0].lstrip("AC"))):
        terminalreporter.write_line(f"[{status}] {label}")
