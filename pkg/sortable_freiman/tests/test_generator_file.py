# sortable_freiman/tests/test_generator_file.py

import logging
from pathlib import Path

import pytest

from sortable_freiman.errors import DuplicateGeneratorError, GeneratorFileError
from sortable_freiman.services.generator_file import load_generator_file


def _write(tmp_path: Path, body: str) -> Path:
    path = tmp_path / "gens.txt"
    path.write_text(body, encoding="utf-8")
    return path


def test_mixed_syntaxes_and_comments(tmp_path: Path):
    path = _write(
        tmp_path,
        "# sorted graph is a triangle\n"
        "\n"
        "3 2\n"
        "x1^2\n"
        "1 1 0   # x1*x2\n"
        "x2^2\n",
    )
    g = load_generator_file(path)
    assert (g.n, g.d, g.mu) == (3, 2, 3)
    assert [str(u) for u in g] == ["x1^2", "x1*x2", "x2^2"]


def test_duplicates_are_skipped_with_a_warning(tmp_path: Path, caplog):
    path = _write(tmp_path, "2 2\nx1*x2\nx1^2\n1 1\n")
    with caplog.at_level(logging.WARNING, logger="freiman.generator_file"):
        g = load_generator_file(path)
    assert g.mu == 2
    assert "duplicate generator x1*x2 (first on line 2) skipped" in caplog.text
    assert f"{path}:4:" in caplog.text


def test_duplicates_fail_in_strict_mode(tmp_path: Path):
    path = _write(tmp_path, "2 2\nx1*x2\n1 1\n")
    with pytest.raises(DuplicateGeneratorError) as info:
        load_generator_file(path, strict=True)
    assert info.value.line == 3


@pytest.mark.parametrize(
    "body, line, fragment",
    [
        ("", 1, "missing 'n d' header"),
        ("# only comments\n", 1, "missing 'n d' header"),
        ("3\nx1\n", 1, "header must be 'n d'"),
        ("3 two\nx1\n", 1, "two integers"),
        ("0 2\n", 1, "must be positive"),
        ("3 2\n", 1, "no generators"),
        ("3 2\nx1^2\nx1*x4\n", 3, "variable index 4"),
        ("3 2\nx1^2\nx1*x2*x3\n", 3, "has degree 3, header says 2"),
        ("3 2\n\n0 1\n", 3, "expected 3 exponents"),
    ],
)
def test_file_errors_name_the_line(tmp_path: Path, body, line, fragment):
    path = _write(tmp_path, body)
    with pytest.raises(GeneratorFileError) as info:
        load_generator_file(path)
    assert info.value.line == line
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"{path}:{line}: ")


def test_missing_file_is_an_os_error(tmp_path: Path):
    with pytest.raises(OSError):
        load_generator_file(tmp_path / "absent.txt")
