# sortable_freiman/services/output_formatter.py

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Mapping, Optional

from sortable_freiman.models.graph import Graph
from sortable_freiman.models.report import AnalysisReport, ChordalityVerdict, Verdict
from sortable_freiman.models.sweep import CSV_COLUMNS, SweepReport, SweepRow
from sortable_freiman.services.graphs import graph_to_dot, graph_to_json, sorted_graph
from sortable_freiman.services.sweep_runner import row_from_report

SCHEMA_VERSION = 1


def source_params(source: Mapping[str, Any]) -> str:
    """Compact ``key=value;...`` form of an input echo, as used in CSV rows."""
    return ";".join(f"{k}={v}" for k, v in source.items() if k != "family")


def source_title(source: Mapping[str, Any]) -> str:
    family = source.get("family")
    if family == "borel":
        return f"B({source['u']}) in {source['n']} variables"
    if family == "veronese":
        k, n, d = source["requested_k"], source["n"], source["d"]
        title = f"I_(k={k},n={n},d={d})"
        if source.get("effective_k") != k:
            title += f", bound clamped to {source['effective_k']}"
        return title
    return f"generator set from {source.get('file')}"


def _labelled(graph: Graph, indices) -> list[dict[str, Any]]:
    return [{"index": i, "label": graph.label(i)} for i in indices]


def _chordal_to_dict(
    verdict: Optional[ChordalityVerdict], graph: Optional[Graph]
) -> Optional[dict]:
    if verdict is None or graph is None:
        return None
    if verdict.chordal:
        return {"chordal": True, "peo": _labelled(graph, verdict.peo)}
    return {"chordal": False, "cycle": _labelled(graph, verdict.chordless_cycle)}


def analysis_payload(
    source: Mapping[str, Any],
    report: AnalysisReport,
    prediction: Optional[Verdict],
) -> dict[str, Any]:
    g = report.generators
    payload: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "input": dict(source),
        "n": g.n,
        "d": g.d,
        "generators": [str(u) for u in g],
        "mu": report.mu,
        "spread": report.spread,
        "mu_square": report.mu_square,
        "bound": report.bound,
        "gap": report.gap,
        "freiman": report.freiman,
        "sortable": report.sortable,
        "chordal": _chordal_to_dict(report.chordal, report.sorted_graph),
        "sorted_graph": graph_to_json(report.sorted_graph) if report.sorted_graph else None,
        "prediction": None,
    }
    if prediction is not None:
        payload["prediction"] = {
            "freiman_predicted": prediction.freiman_predicted,
            "clause": prediction.clause,
            "description": prediction.description,
            "normalization": dict(prediction.normalization),
        }
    return payload


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


def _table(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [
        max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
        for i, h in enumerate(headers)
    ]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    return [fmt.format(*headers)] + [fmt.format(*r) for r in rows]


def _analysis_text(
    source: Mapping[str, Any],
    report: AnalysisReport,
    prediction: Optional[Verdict],
) -> str:
    g = report.generators
    lines = [f"Ideal: {source_title(source)}"]
    lines.append(f"Generators ({g.mu}, degree {g.d}): " + ", ".join(str(u) for u in g))
    lines.append("")
    lines.extend(
        _table(
            ["mu", "spread", "mu_square", "bound", "gap"],
            [[str(report.mu), str(report.spread), str(report.mu_square),
              str(report.bound), str(report.gap)]],
        )
    )
    lines.append("")
    if report.freiman:
        lines.append("Freiman: yes (mu(I^2) meets the lower bound)")
    else:
        lines.append(f"Freiman: no (mu(I^2) exceeds the lower bound by {report.gap})")
    lines.append(f"Sortable: {_yes_no(report.sortable)}")

    graph, verdict = report.sorted_graph, report.chordal
    if graph is not None and verdict is not None:
        lines.append(
            f"Sorted graph: {graph.vertex_count} vertices, {graph.edge_count} edges"
        )
        if verdict.chordal:
            order = ", ".join(graph.label(i) for i in verdict.peo)
            lines.append("Chordal: yes")
            lines.append(f"  Lex-BFS order (reverse is a perfect elimination order): {order}")
        else:
            cycle = [graph.label(i) for i in verdict.chordless_cycle]
            lines.append("Chordal: no")
            lines.append(
                f"  Chordless {len(cycle)}-cycle: " + " - ".join(cycle + [cycle[0]])
            )
    else:
        lines.append("Chordal: not evaluated (the set is not sortable)")

    if prediction is not None:
        lines.append(
            f"Prediction: Freiman {_yes_no(prediction.freiman_predicted)} "
            f"[{prediction.clause}] {prediction.description}"
        )
    return "\n".join(lines) + "\n"


def _csv_text(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv_values())
    return buf.getvalue()


def render_analysis(
    fmt: str,
    source: Mapping[str, Any],
    report: AnalysisReport,
    prediction: Optional[Verdict] = None,
) -> str:
    if fmt == "json":
        return json.dumps(analysis_payload(source, report, prediction), indent=2) + "\n"
    if fmt == "csv":
        row = row_from_report(source["family"], source_params(source), report, prediction)
        return _csv_text([row])
    if fmt == "dot":
        graph = report.sorted_graph or sorted_graph(report.generators)
        return graph_to_dot(graph)
    return _analysis_text(source, report, prediction)


def _sweep_text(sweep: SweepReport) -> str:
    headers = ["params", "mu", "spread", "mu_square", "bound", "gap",
               "computed", "predicted", "chordal", "clause", "agree"]

    def _flag(value: Optional[bool]) -> str:
        return "-" if value is None else _yes_no(value)

    rows = [
        [r.params, str(r.mu), str(r.spread), str(r.mu_square), str(r.bound), str(r.gap),
         _flag(r.freiman_computed), _flag(r.freiman_predicted), _flag(r.chordal),
         r.clause, _flag(r.agree)]
        for r in sweep.rows
    ]
    bounds = " ".join(
        f"{key}={values[0]}..{values[-1]}" for key, values in sweep.bounds.items()
    )
    lines = [f"Sweep: {sweep.family} {bounds}", ""]
    lines.extend(_table(headers, rows))
    lines.append("")
    summary = sweep.summary
    for key, value in summary.counts().items():
        lines.append(f"{key}: {value}")
    problems = [
        ("disagreement", summary.disagreements),
        ("non-sortable", summary.non_sortable),
        ("inequality violation", summary.inequality_violations),
        ("reduction violation", summary.reduction_violations),
        ("extension lemma violation", summary.lemma_violations),
        ("certificate failure", summary.certificate_failures),
    ]
    for label, items in problems:
        for params in items:
            lines.append(f"{label}: {params}")
    lines.append(f"Result: {'PASS' if summary.ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


def sweep_payload(sweep: SweepReport) -> dict[str, Any]:
    summary = sweep.summary
    return {
        "schema": SCHEMA_VERSION,
        "family": sweep.family,
        "bounds": {key: [values[0], values[-1]] for key, values in sweep.bounds.items()},
        "rows": [
            dict(zip(CSV_COLUMNS, (
                row.family, row.params, row.mu, row.spread, row.mu_square, row.bound,
                row.gap, row.freiman_computed, row.freiman_predicted, row.clause,
                row.chordal, row.agree,
            )))
            for row in sweep.rows
        ],
        "summary": {
            "counts": summary.counts(),
            "ok": summary.ok,
            "disagreements": list(summary.disagreements),
            "non_sortable": list(summary.non_sortable),
            "inequality_violations": list(summary.inequality_violations),
            "reduction_violations": list(summary.reduction_violations),
            "lemma_violations": list(summary.lemma_violations),
            "certificate_failures": list(summary.certificate_failures),
        },
    }


def render_sweep(fmt: str, sweep: SweepReport) -> str:
    if fmt == "json":
        return json.dumps(sweep_payload(sweep), indent=2) + "\n"
    if fmt == "csv":
        return _csv_text(sweep.rows)
    if fmt == "dot":
        raise ValueError("--format dot applies to analyze and export, not sweep")
    return _sweep_text(sweep)


def emit(text: str, out: Optional[str]) -> None:
    """Write a rendered report to ``out`` or stdout ('-' or None)."""
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(out).expanduser()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
