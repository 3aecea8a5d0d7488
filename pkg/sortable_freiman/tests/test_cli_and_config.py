# sortable_freiman/tests/test_cli_and_config.py
from __future__ import annotations

from pathlib import Path

import pytest

from sortable_freiman.cli import build_parser, int_range
from sortable_freiman.config import DEFAULT_CONFIG_PATH, Config


def _write_config(tmp_path: Path, body: str) -> Path:
    path = tmp_path / "freiman.conf"
    path.write_text(body, encoding="utf-8")
    return path


def test_cli_parser_supports_analyze_and_flags():
    parser = build_parser()

    args = parser.parse_args(
        [
            "--config",
            "custom.conf",
            "--debug",
            "analyze",
            "--format",
            "json",
            "borel",
            "--u",
            "x3^2",
            "--n",
            "3",
            "--quiet",
        ]
    )

    assert args.config == "custom.conf"
    assert args.debug is True
    assert args.quiet is True
    assert args.format == "json"
    assert args.command == "analyze"
    assert args.family == "borel"
    assert args.u == "x3^2"
    assert args.n == 3
    assert args.dot is None


def test_cli_parser_sweep_ranges():
    parser = build_parser()

    args = parser.parse_args(["sweep", "veronese", "--k", "1..3", "--n", "2..5", "--workers", "2"])

    assert args.command == "sweep"
    assert args.k == range(1, 4)
    assert args.n == range(2, 6)
    assert args.d is None
    assert args.workers == 2


def test_cli_parser_export_requires_dot():
    parser = build_parser()
    with pytest.raises(SystemExit):
        parser.parse_args(["export", "veronese", "--k", "2", "--n", "3", "--d", "3"])

    args = parser.parse_args(["export", "set", "--file", "gens.txt", "--dot", "-"])
    assert (args.family, args.file, args.dot) == ("set", "gens.txt", "-")


def test_int_range_parsing():
    assert int_range("4") == range(4, 5)
    assert int_range("2..5") == range(2, 6)
    for bad in ("5..2", "0..3", "a..b"):
        with pytest.raises(Exception):
            int_range(bad)


def test_config_defaults_without_a_file(tmp_path: Path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert not Path(DEFAULT_CONFIG_PATH).exists()

    cfg = Config.load_optional(None)

    assert cfg.limits.max_degree == 512
    assert cfg.limits.max_variables == 64
    assert cfg.limits.max_sweep_points == 200_000
    assert cfg.sweep.workers == 1
    assert cfg.sweep.check_reduction is True
    assert cfg.output.format == "text"
    assert cfg.logging.console_level == "WARNING"


def test_config_default_path_is_read_when_present(tmp_path: Path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    Path(DEFAULT_CONFIG_PATH).write_text("[output]\nformat = csv\n", encoding="utf-8")

    assert Config.load_optional(None).output.format == "csv"


def test_config_explicit_path_must_exist(tmp_path: Path):
    with pytest.raises(FileNotFoundError, match="Config file not found"):
        Config.load_optional(str(tmp_path / "missing.conf"))


def test_config_parses_every_section(tmp_path: Path):
    path = _write_config(
        tmp_path,
        """
[limits]
max_degree = 40
max_variables = 9
max_sweep_points = 1000

[sweep]
workers = 4
check_reduction = false
reduction_powers = 2
check_extension_lemma = false

[output]
format = JSON   # case-insensitive

[logging]
console_level = DEBUG
console_quiet = true
debug_modules = freiman.chordal, freiman.ideals
structured_enabled = true
structured_path = ./structured.jsonl
""".strip(),
    )

    cfg = Config.load(str(path))

    assert (cfg.limits.max_degree, cfg.limits.max_variables) == (40, 9)
    assert cfg.limits.max_sweep_points == 1000
    assert cfg.sweep.workers == 4
    assert cfg.sweep.check_reduction is False
    assert cfg.sweep.reduction_powers == 2
    assert cfg.sweep.check_extension_lemma is False
    assert cfg.output.format == "json"
    assert cfg.logging.console_level == "DEBUG"
    assert cfg.logging.console_quiet is True
    assert cfg.logging.debug_modules == ["freiman.chordal", "freiman.ideals"]
    assert cfg.logging.structured_enabled is True
    assert cfg.logging.structured_path == "./structured.jsonl"


def test_config_rejects_invalid_boolean_values(tmp_path: Path):
    path = _write_config(tmp_path, "[sweep]\ncheck_reduction = tru\n")

    with pytest.raises(ValueError, match="Invalid boolean value"):
        Config.load(str(path))


def test_config_rejects_non_positive_limits(tmp_path: Path):
    path = _write_config(tmp_path, "[limits]\nmax_degree = 0\n")

    with pytest.raises(ValueError, match=r"\[limits\] max_degree must be positive"):
        Config.load(str(path))


def test_config_rejects_unknown_format(tmp_path: Path):
    path = _write_config(tmp_path, "[output]\nformat = xml\n")

    with pytest.raises(ValueError, match=r"\[output\] format"):
        Config.load(str(path))
