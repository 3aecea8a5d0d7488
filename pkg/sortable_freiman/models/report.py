# sortable_freiman/models/report.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from sortable_freiman.models.generator_set import GeneratorSet
from sortable_freiman.models.graph import Graph


@dataclass(frozen=True)
class PeoFailure:
    """``pivot`` and ``other`` are later neighbours of ``vertex`` in elimination but not adjacent."""

    vertex: int
    pivot: int
    other: int


@dataclass(frozen=True)
class ChordalityVerdict:
    chordal: bool
    # Lex-BFS visiting order; its reverse is a perfect elimination ordering.
    peo: Optional[tuple[int, ...]] = None
    chordless_cycle: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if (self.peo is None) == (self.chordless_cycle is None):
            raise ValueError("exactly one of peo / chordless_cycle must be present")
        if self.chordal != (self.peo is not None):
            raise ValueError("a chordal verdict carries a peo, a negative one a cycle")
        if self.chordless_cycle is not None and len(self.chordless_cycle) < 4:
            raise ValueError("a chordless cycle certificate has length at least 4")


@dataclass(frozen=True)
class AnalysisReport:
    generators: GeneratorSet
    mu: int
    spread: int
    mu_square: int
    bound: int
    gap: int
    freiman: bool
    sortable: bool
    chordal: Optional[ChordalityVerdict] = None
    sorted_graph: Optional[Graph] = None


@dataclass(frozen=True)
class Verdict:
    freiman_predicted: bool
    clause: str
    normalization: dict[str, Any] = field(default_factory=dict)
    description: str = ""
