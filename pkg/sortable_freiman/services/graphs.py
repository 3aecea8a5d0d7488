# sortable_freiman/services/graphs.py

from __future__ import annotations

import re
from typing import Any, Sequence

from sortable_freiman.models.generator_set import GeneratorSet
from sortable_freiman.models.graph import Graph
from sortable_freiman.services.monomial_parser import parse_monomial
from sortable_freiman.services.sorting import exponents_sorted


def sorted_graph(g: GeneratorSet) -> Graph:
    vectors = g.exponent_vectors()
    edges = [
        (i, j)
        for i in range(len(vectors))
        for j in range(i + 1, len(vectors))
        if exponents_sorted(vectors[i], vectors[j])
    ]
    return Graph.from_edges(len(vectors), edges, g.gens)


def unsorted_graph(g: GeneratorSet) -> Graph:
    return sorted_graph(g).complement()


def is_induced_cycle(graph: Graph, cycle: Sequence[int]) -> bool:
    t = len(cycle)
    if t < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {t}")
    if len(set(cycle)) != t:
        raise ValueError(f"repeated vertices in cycle {list(cycle)}")
    for a in range(t):
        for b in range(a + 1, t):
            consecutive = b == a + 1 or (a == 0 and b == t - 1)
            if graph.has_edge(cycle[a], cycle[b]) != consecutive:
                return False
    return True


def induced_subgraph(graph: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices`` relabelled 0..len-1 in the given order."""
    edges = [
        (a, b)
        for a in range(len(vertices))
        for b in range(a + 1, len(vertices))
        if graph.has_edge(vertices[a], vertices[b])
    ]
    labels = tuple(graph.labels[v] for v in vertices) if graph.labels else ()
    return Graph.from_edges(len(vertices), edges, labels)


# ----------------------------------------------------------------------
# Serialization
# ----------------------------------------------------------------------

def graph_to_json(graph: Graph) -> dict[str, Any]:
    return {
        "n": graph.vertex_count,
        "labels": [graph.label(i) for i in range(graph.vertex_count)],
        "edges": [[i, j] for i, j in graph.edges()],
    }


def graph_to_dot(graph: Graph, name: str = "sorted") -> str:
    lines = [f"graph {name} {{"]
    for i in range(graph.vertex_count):
        lines.append(f'  {i} [label="{graph.label(i)}"];')
    for i, j in graph.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE_RE = re.compile(r'^\s*(\d+)\s*\[label="([^"]*)"\];\s*$')
_DOT_EDGE_RE = re.compile(r"^\s*(\d+)\s*--\s*(\d+);\s*$")


def parse_dot(text: str, n: int) -> Graph:
    """Read back the DOT emitted by :func:`graph_to_dot`; labels live in n variables."""
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    for line in text.splitlines():
        if node := _DOT_NODE_RE.match(line):
            labels[int(node.group(1))] = node.group(2)
        elif edge := _DOT_EDGE_RE.match(line):
            edges.append((int(edge.group(1)), int(edge.group(2))))
    count = len(labels)
    if sorted(labels) != list(range(count)):
        raise ValueError("DOT vertices must be numbered 0..count-1")
    monomials = [parse_monomial(labels[i], n) for i in range(count)]
    return Graph.from_edges(count, edges, monomials)
