# sortable_freiman/services/chordal.py

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from sortable_freiman.errors import CertificateError
from sortable_freiman.logging import get_logger
from sortable_freiman.models.graph import Graph
from sortable_freiman.models.report import ChordalityVerdict, PeoFailure
from sortable_freiman.services.graphs import is_induced_cycle

LOG = get_logger("freiman.chordal")


def lexbfs(graph: Graph) -> list[int]:
    """Lexicographic BFS by partition refinement; ties go to the lowest vertex index."""
    cells: list[list[int]] = [list(range(graph.vertex_count))] if graph.vertex_count else []
    order: list[int] = []
    while cells:
        head = cells[0]
        v = head.pop(0)
        if not head:
            cells.pop(0)
        order.append(v)
        row = graph.rows[v]
        refined: list[list[int]] = []
        for cell in cells:
            inside = [u for u in cell if row >> u & 1]
            outside = [u for u in cell if not row >> u & 1]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        cells = refined
    return order


def check_peo(graph: Graph, order: Sequence[int]) -> tuple[bool, Optional[PeoFailure]]:
    """Check that ``reversed(order)`` is a perfect elimination ordering.

    For each vertex, the neighbours eliminated after it must form a clique; it is
    enough that the first of them to be eliminated is adjacent to all the others.
    """
    if sorted(order) != list(range(graph.vertex_count)):
        raise ValueError(f"not a permutation of 0..{graph.vertex_count - 1}: {list(order)}")
    position = {v: i for i, v in enumerate(order)}
    for v in reversed(order):
        later = [u for u in graph.neighbors(v) if position[u] < position[v]]
        if len(later) < 2:
            continue
        pivot = max(later, key=position.__getitem__)
        for other in sorted(later):
            if other != pivot and not graph.has_edge(pivot, other):
                return False, PeoFailure(vertex=v, pivot=pivot, other=other)
    return True, None


def _shortest_path(graph: Graph, start: int, goal: int, allowed: int) -> Optional[list[int]]:
    parent = {start: start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if u == goal:
            path = [u]
            while path[-1] != start:
                path.append(parent[path[-1]])
            return path[::-1]
        row = graph.rows[u] & allowed
        for w in range(graph.vertex_count):
            if row >> w & 1 and w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def _cycle_at(graph: Graph, v: int, p: int, w: int, within: int) -> Optional[list[int]]:
    # Internal path vertices must avoid N[v]; a shortest path is induced.
    closed = graph.rows[v] | (1 << v)
    allowed = (within & ~closed) | (1 << p) | (1 << w)
    path = _shortest_path(graph, p, w, allowed)
    if path is None:
        return None
    return [v, *path]


def _extract_cycle(graph: Graph, order: Sequence[int], failure: PeoFailure) -> list[int]:
    everything = (1 << graph.vertex_count) - 1
    position = {u: i for i, u in enumerate(order)}
    earlier = sum(1 << u for u in order if position[u] < position[failure.vertex])

    for within in (earlier, everything):
        cycle = _cycle_at(graph, failure.vertex, failure.pivot, failure.other, within)
        if cycle is not None:
            return cycle

    LOG.debug("Witness %s gave no path; scanning every vertex", failure)
    for v in range(graph.vertex_count):
        nbrs = graph.neighbors(v)
        for a, p in enumerate(nbrs):
            for w in nbrs[a + 1:]:
                if graph.has_edge(p, w):
                    continue
                cycle = _cycle_at(graph, v, p, w, everything)
                if cycle is not None:
                    return cycle
    raise CertificateError("no chordless cycle found although the PEO check failed")


def is_chordal(graph: Graph) -> ChordalityVerdict:
    order = lexbfs(graph)
    ok, failure = check_peo(graph, order)
    if ok:
        return ChordalityVerdict(chordal=True, peo=tuple(order))
    cycle = _extract_cycle(graph, order, failure)
    if len(cycle) < 4 or not is_induced_cycle(graph, cycle):
        raise CertificateError(f"extracted cycle {cycle} is not chordless")
    return ChordalityVerdict(chordal=False, chordless_cycle=tuple(cycle))
