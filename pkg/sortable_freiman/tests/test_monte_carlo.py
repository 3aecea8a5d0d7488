# sortable_freiman/tests/test_monte_carlo.py
import random

import networkx as nx

from sortable_freiman.logging import ConsoleLog, get_logger
from sortable_freiman.models.graph import Graph
from sortable_freiman.services.chordal import check_peo, is_chordal
from sortable_freiman.services.graphs import induced_subgraph, is_induced_cycle
from sortable_freiman.tests.oracles import has_chordless_cycle, to_networkx

ConsoleLog(level="INFO", quiet=True).setup()
LOG = get_logger("monte")


def _random_graph(rng: random.Random) -> Graph:
    n = rng.randint(1, 12)
    density = rng.uniform(0.1, 0.9)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return Graph.from_edges(n, edges)


def test_monte_carlo_randomized():
    """
    Randomized stress test: verdicts agree with networkx, certificates hold up.
    """
    rng = random.Random(0xC0FFEE)

    for _ in range(1000):
        graph = _random_graph(rng)
        verdict = is_chordal(graph)

        # Invariant 1: agreement with an independent implementation
        assert verdict.chordal == nx.is_chordal(to_networkx(graph))

        # Invariant 2: the certificate is checkable on its own
        if verdict.chordal:
            ok, failure = check_peo(graph, verdict.peo)
            assert ok and failure is None
        else:
            assert len(verdict.chordless_cycle) >= 4
            assert is_induced_cycle(graph, verdict.chordless_cycle)

        # Invariant 3: brute force on the smaller graphs
        if graph.vertex_count <= 9:
            assert verdict.chordal == (not has_chordless_cycle(graph))


def test_chordality_is_hereditary():
    rng = random.Random(0xC0FFEE)
    checked = 0
    for _ in range(300):
        graph = _random_graph(rng)
        if not is_chordal(graph).chordal:
            continue
        keep = [v for v in range(graph.vertex_count) if rng.random() < 0.6]
        assert is_chordal(induced_subgraph(graph, keep)).chordal
        checked += 1
    LOG.info("hereditary check ran on %d chordal graphs", checked)
    assert checked > 0
