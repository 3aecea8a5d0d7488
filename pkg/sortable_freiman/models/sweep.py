# sortable_freiman/models/sweep.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

CSV_COLUMNS: tuple[str, ...] = (
    "family",
    "params",
    "mu",
    "spread",
    "mu_square",
    "bound",
    "gap",
    "freiman_computed",
    "freiman_predicted",
    "clause",
    "chordal",
    "agree",
)


@dataclass(frozen=True)
class SweepRow:
    family: str
    # Stable text form, e.g. "n=3;d=2;u=x3^2" or "k=2;n=3;d=3".
    params: str
    mu: int
    spread: int
    mu_square: int
    bound: int
    gap: int
    freiman_computed: bool
    # None when no closed form applies (generator files).
    freiman_predicted: Optional[bool]
    clause: str
    chordal: Optional[bool]
    sortable: bool
    # Point coordinates for cross-row checks; Borel rows also carry the exponent vector of u.
    point: tuple[int, ...] = ()
    reduction_ok: Optional[bool] = None
    certificate_ok: Optional[bool] = None

    @property
    def agree(self) -> bool:
        if self.chordal is None or self.freiman_computed != self.chordal:
            return False
        return self.freiman_predicted in (None, self.freiman_computed)

    def as_csv_values(self) -> list[str]:
        def _b(value: Optional[bool]) -> str:
            return "" if value is None else str(value).lower()

        return [
            self.family,
            self.params,
            str(self.mu),
            str(self.spread),
            str(self.mu_square),
            str(self.bound),
            str(self.gap),
            _b(self.freiman_computed),
            _b(self.freiman_predicted),
            self.clause,
            _b(self.chordal),
            _b(self.agree),
        ]


@dataclass
class SweepSummary:
    points: int = 0
    agreements: int = 0
    disagreements: list[str] = field(default_factory=list)
    non_sortable: list[str] = field(default_factory=list)
    inequality_violations: list[str] = field(default_factory=list)
    reduction_violations: list[str] = field(default_factory=list)
    lemma_violations: list[str] = field(default_factory=list)
    certificate_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.disagreements
            or self.non_sortable
            or self.inequality_violations
            or self.reduction_violations
            or self.lemma_violations
            or self.certificate_failures
        )

    def counts(self) -> dict[str, int]:
        return {
            "points": self.points,
            "agreements": self.agreements,
            "disagreements": len(self.disagreements),
            "non_sortable": len(self.non_sortable),
            "inequality_violations": len(self.inequality_violations),
            "reduction_violations": len(self.reduction_violations),
            "lemma_violations": len(self.lemma_violations),
            "certificate_failures": len(self.certificate_failures),
        }


@dataclass
class SweepReport:
    family: str
    bounds: dict[str, list[int]]
    rows: list[SweepRow]
    summary: SweepSummary
