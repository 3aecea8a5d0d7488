# sortable_freiman/services/sweep_runner.py

from __future__ import annotations

import multiprocessing as mp
from itertools import starmap
from math import comb
from typing import Optional, Sequence

from sortable_freiman.config import AppConfig
from sortable_freiman.errors import EmptyDomainError, LimitExceededError
from sortable_freiman.logging import get_logger
from sortable_freiman.models.generator_set import GeneratorSet
from sortable_freiman.models.monomial import Monomial, configure_limits
from sortable_freiman.models.report import AnalysisReport, Verdict
from sortable_freiman.models.sweep import SweepReport, SweepRow, SweepSummary
from sortable_freiman.services.certificates import (
    borel_certificate,
    validate_certificate,
    veronese_certificate,
)
from sortable_freiman.services.classify import predicted_borel, predicted_veronese
from sortable_freiman.services.ideals import (
    analytic_spread,
    borel_closure,
    degree_vectors,
    effective_bound,
    freiman_bound,
    freiman_report,
    mu_square,
    veronese_constant,
)

FAMILIES = ("borel", "veronese")


def _counts_as_freiman(g: GeneratorSet) -> bool:
    return mu_square(g) == freiman_bound(g.mu, analytic_spread(g))


def _certificate_ok(g: GeneratorSet, cycle: Optional[list[Monomial]], predicted: bool) -> bool:
    if predicted:
        return cycle is None
    return cycle is not None and validate_certificate(g, cycle)


def row_from_report(
    family: str,
    params: str,
    report: AnalysisReport,
    verdict: Optional[Verdict],
    point: tuple[int, ...] = (),
    **extra,
) -> SweepRow:
    return SweepRow(
        family=family,
        params=params,
        mu=report.mu,
        spread=report.spread,
        mu_square=report.mu_square,
        bound=report.bound,
        gap=report.gap,
        freiman_computed=report.freiman,
        freiman_predicted=verdict.freiman_predicted if verdict else None,
        clause=verdict.clause if verdict else "",
        chordal=report.chordal.chordal if report.chordal else None,
        sortable=report.sortable,
        point=point,
        **extra,
    )


def evaluate_borel_point(
    n: int, exponents: tuple[int, ...], reduction_powers: int
) -> SweepRow:
    u = Monomial(exponents)
    g = borel_closure([u], n)
    verdict = predicted_borel(u, n)
    report = freiman_report(g)

    reduction_ok: Optional[bool] = None
    if reduction_powers:
        reduction_ok = True
        for k in range(1, reduction_powers + 1):
            shifted = Monomial((exponents[0] + k,) + exponents[1:])
            if _counts_as_freiman(borel_closure([shifted], n)) != report.freiman:
                reduction_ok = False
            if predicted_borel(shifted, n).freiman_predicted != verdict.freiman_predicted:
                reduction_ok = False

    cycle = borel_certificate(u, n)
    return row_from_report(
        "borel",
        f"n={n};d={u.degree};u={u}",
        report,
        verdict,
        (n, u.degree, *exponents),
        reduction_ok=reduction_ok,
        certificate_ok=_certificate_ok(g, cycle, verdict.freiman_predicted),
    )


def evaluate_veronese_point(k: int, n: int, d: int) -> SweepRow:
    g = veronese_constant(k, n, d)
    verdict = predicted_veronese(k, n, d)
    cycle = veronese_certificate(k, n, d)
    return row_from_report(
        "veronese",
        f"k={k};n={n};d={d}",
        freiman_report(g),
        verdict,
        (k, n, d),
        certificate_ok=_certificate_ok(g, cycle, verdict.freiman_predicted),
    )


class SweepRunner:
    """Evaluate a family over a parameter grid and cross-check every point."""

    def __init__(self, cfg, log):
        self.cfg = cfg
        self.log = log

    def _borel_tasks(self, bounds: dict[str, Sequence[int]]) -> list[tuple]:
        powers = self.cfg.sweep.reduction_powers if self.cfg.sweep.check_reduction else 0
        self._check_point_count(
            sum(comb(n + d - 1, d) for n in bounds["n"] for d in bounds["d"])
        )
        return [
            (n, exps, powers)
            for n in bounds["n"]
            for d in bounds["d"]
            for exps in degree_vectors(n, d)
        ]

    def _veronese_tasks(self, bounds: dict[str, Sequence[int]]) -> list[tuple]:
        tasks = []
        for k in bounds["k"]:
            for n in bounds["n"]:
                degrees = bounds.get("d") or range(1, k * n)
                for d in degrees:
                    if effective_bound(k, d) * n <= d:
                        self.log.debug("Skipping empty domain k=%d n=%d d=%d", k, n, d)
                        continue
                    tasks.append((k, n, d))
        self._check_point_count(len(tasks))
        return tasks

    def _check_point_count(self, count: int) -> None:
        cap = self.cfg.limits.max_sweep_points
        if count > cap:
            raise LimitExceededError(f"sweep has {count} points, above the cap of {cap}")

    def _evaluate(self, func, tasks: list[tuple]) -> list[SweepRow]:
        workers = self.cfg.sweep.workers
        if workers <= 1 or len(tasks) < 2:
            return list(starmap(func, tasks))
        limits = (self.cfg.limits.max_degree, self.cfg.limits.max_variables)
        mp_context = mp.get_context("spawn")
        with mp_context.Pool(
            processes=workers, initializer=configure_limits, initargs=limits
        ) as pool:
            # starmap keeps task order, so output does not depend on scheduling.
            return pool.starmap(func, tasks)

    def run(self, family: str, bounds: dict[str, Sequence[int]]) -> SweepReport:
        if family == "borel":
            rows = self._evaluate(evaluate_borel_point, self._borel_tasks(bounds))
        elif family == "veronese":
            rows = self._evaluate(evaluate_veronese_point, self._veronese_tasks(bounds))
        else:
            raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
        if not rows:
            raise EmptyDomainError(f"the {family} sweep bounds contain no valid point")

        summary = self._summarize(rows)
        if family == "veronese" and self.cfg.sweep.check_extension_lemma:
            summary.lemma_violations.extend(extension_lemma_violations(rows))

        for params in summary.disagreements:
            self.log.warning("Theorem/computation disagreement at %s %s", family, params)
        self.log.info(
            "Sweep %s finished: %s",
            family,
            ", ".join(f"{k}={v}" for k, v in summary.counts().items()),
        )
        return SweepReport(
            family=family,
            bounds={key: list(values) for key, values in bounds.items() if values},
            rows=rows,
            summary=summary,
        )

    @staticmethod
    def _summarize(rows: list[SweepRow]) -> SweepSummary:
        summary = SweepSummary(points=len(rows))
        for row in rows:
            if row.agree:
                summary.agreements += 1
            else:
                summary.disagreements.append(row.params)
            if not row.sortable:
                summary.non_sortable.append(row.params)
            elif row.gap < 0:
                summary.inequality_violations.append(row.params)
            if row.reduction_ok is False:
                summary.reduction_violations.append(row.params)
            if row.certificate_ok is False:
                summary.certificate_failures.append(row.params)
        return summary


def extension_lemma_violations(rows: Sequence[SweepRow]) -> list[str]:
    """Points where I_{k,n,d} is not Freiman but a swept I_{k,n+1,d+p} is, for p <= k."""
    by_point = {row.point: row for row in rows if row.family == "veronese"}
    violations = []
    for (k, n, d), row in by_point.items():
        if row.freiman_computed:
            continue
        for power in (1, 2):
            if power > k:
                continue
            target = by_point.get((k, n + 1, d + power))
            if target is not None and target.freiman_computed:
                violations.append(f"{row.params} -> {target.params}")
    return violations


def sweep(
    family: str,
    bounds: dict[str, Sequence[int]],
    cfg: Optional[AppConfig] = None,
    log=None,
) -> SweepReport:
    return SweepRunner(cfg or AppConfig(), log or get_logger("freiman.sweep")).run(family, bounds)
