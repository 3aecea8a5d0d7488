# sortable_freiman/models/graph.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from sortable_freiman.models.monomial import Monomial


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..vertex_count-1.

    ``rows[i]`` is a bitmask of the neighbours of vertex i; the relation is kept
    symmetric and irreflexive by every constructor.
    """

    vertex_count: int
    labels: tuple[Monomial, ...]
    rows: tuple[int, ...]

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Monomial] = (),
    ) -> "Graph":
        rows = [0] * vertex_count
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise ValueError(f"edge ({i}, {j}) outside 0..{vertex_count - 1}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        labels = tuple(labels)
        if labels and len(labels) != vertex_count:
            raise ValueError(f"{len(labels)} labels for {vertex_count} vertices")
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be distinct")
        return cls(vertex_count=vertex_count, labels=labels, rows=tuple(rows))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        row = self.rows[i]
        return [j for j in range(self.vertex_count) if row >> j & 1]

    def degree(self, i: int) -> int:
        return bin(self.rows[i]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.vertex_count)
            for j in range(i + 1, self.vertex_count)
            if self.rows[i] >> j & 1
        ]

    @property
    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(self.vertex_count)) // 2

    def complement(self) -> "Graph":
        full = (1 << self.vertex_count) - 1
        rows = tuple((full & ~row) & ~(1 << i) for i, row in enumerate(self.rows))
        return Graph(vertex_count=self.vertex_count, labels=self.labels, rows=rows)

    def label(self, i: int) -> str:
        return self.labels[i].to_symbolic() if self.labels else str(i)
