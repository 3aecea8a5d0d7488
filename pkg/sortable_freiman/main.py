# sortable_freiman/main.py

from datetime import datetime, timezone
import sys
from typing import Any, Sequence

from .cli import build_parser
from .config import AppConfig, Config
from .logging import ConsoleLog, StructuredLog, RunLogEntry

from .models.generator_set import GeneratorSet
from .models.monomial import configure_limits
from .models.report import Verdict
from .services.classify import predicted_borel, predicted_veronese
from .services.generator_file import load_generator_file
from .services.graphs import graph_to_dot, sorted_graph
from .services.ideals import (
    borel_closure,
    effective_bound,
    freiman_report,
    veronese_constant,
)
from .services.monomial_parser import parse_monomial
from .services.output_formatter import (
    analysis_payload,
    emit,
    render_analysis,
    render_sweep,
    sweep_payload,
)
from .services.sweep_runner import SweepRunner

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2


def build_input(args) -> tuple[dict[str, Any], GeneratorSet, Verdict | None]:
    """Resolve the family arguments into (input echo, generator set, closed-form prediction)."""
    if args.family == "borel":
        u = parse_monomial(args.u, args.n)
        source = {"family": "borel", "u": u.to_symbolic(), "n": args.n}
        return source, borel_closure([u], args.n), predicted_borel(u, args.n)
    if args.family == "veronese":
        source = {
            "family": "veronese",
            "requested_k": args.k,
            "effective_k": effective_bound(args.k, args.d),
            "n": args.n,
            "d": args.d,
        }
        g = veronese_constant(args.k, args.n, args.d)
        return source, g, predicted_veronese(args.k, args.n, args.d)
    g = load_generator_file(args.file)
    return {"family": "set", "file": args.file, "n": g.n, "d": g.d}, g, None


def run_analyze(args, fmt: str, structured: StructuredLog, log) -> int:
    source, g, prediction = build_input(args)
    report = freiman_report(g)
    log.info(
        "Analyzed %s: mu=%d spread=%d gap=%d chordal=%s",
        source,
        report.mu,
        report.spread,
        report.gap,
        report.chordal.chordal if report.chordal else None,
    )
    emit(render_analysis(fmt, source, report, prediction), args.out)
    if args.dot:
        emit(graph_to_dot(report.sorted_graph or sorted_graph(g)), args.dot)

    disagreement = prediction is not None and (
        prediction.freiman_predicted != report.freiman
    )
    if disagreement:
        log.warning(
            "Theorem/computation disagreement for %s: predicted=%s computed=%s",
            source,
            prediction.freiman_predicted,
            report.freiman,
        )
    structured.write(
        RunLogEntry(
            timestamp=datetime.now(timezone.utc).isoformat(),
            command="analyze",
            family=args.family,
            params=source,
            summary={"freiman": report.freiman, "gap": report.gap},
            disagreements=[str(source)] if disagreement else None,
            report=analysis_payload(source, report, prediction),
        )
    )
    return EXIT_OK


def run_export(args, log) -> int:
    source, g, _ = build_input(args)
    graph = sorted_graph(g)
    log.info("Exporting sorted graph of %s (%d vertices)", source, graph.vertex_count)
    emit(graph_to_dot(graph), args.dot)
    return EXIT_OK


def run_sweep(args, app_cfg: AppConfig, fmt: str, structured: StructuredLog, log) -> int:
    if args.family == "borel":
        bounds = {"n": args.n, "d": args.d}
    else:
        bounds = {"k": args.k, "n": args.n, "d": args.d}
    sweep = SweepRunner(app_cfg, log).run(args.family, bounds)
    emit(render_sweep(fmt, sweep), args.out)

    summary = sweep.summary
    structured.write(
        RunLogEntry(
            timestamp=datetime.now(timezone.utc).isoformat(),
            command="sweep",
            family=args.family,
            params=sweep.bounds,
            summary=summary.counts(),
            disagreements=list(summary.disagreements),
            report=sweep_payload(sweep)["summary"],
        )
    )
    return EXIT_OK if summary.ok else EXIT_DISAGREEMENT


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help.
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        app_cfg = Config.load_optional(args.config)
    except (ValueError, OSError) as exc:
        print(f"sortable-freiman: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    console_logger = ConsoleLog(
        level="DEBUG" if args.debug else app_cfg.logging.console_level,
        quiet=args.quiet or app_cfg.logging.console_quiet,
        debug_modules=app_cfg.logging.debug_modules,
        log_path=app_cfg.logging.log_path,
        log_max_bytes=app_cfg.logging.log_max_bytes,
        log_backup_count=app_cfg.logging.log_backup_count,
    )
    log = console_logger.setup()
    structured_logger = StructuredLog(
        app_cfg.logging.structured_path,
        app_cfg.logging.structured_enabled,
    )

    if args.workers is not None:
        app_cfg.sweep.workers = args.workers
    fmt = args.format or app_cfg.output.format

    try:
        configure_limits(app_cfg.limits.max_degree, app_cfg.limits.max_variables)
        if args.command == "analyze":
            return run_analyze(args, fmt, structured_logger, log)
        if args.command == "export":
            return run_export(args, log)
        if args.command == "sweep":
            return run_sweep(args, app_cfg, fmt, structured_logger, log)
        raise ValueError(f"Unsupported command: {args.command}")
    except (ValueError, OSError) as exc:
        log.debug("Command %s failed", args.command, exc_info=True)
        print(f"sortable-freiman: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
