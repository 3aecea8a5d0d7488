# sortable_freiman/services/generator_file.py

"""Generator-set files.

    # comment lines and blank lines are ignored
    3 2            <- header: ambient variable count n, common degree d
    x1^2
    0 1 1          <- exponent-vector and symbolic lines may be mixed
"""

from __future__ import annotations

from pathlib import Path

from sortable_freiman.errors import (
    DuplicateGeneratorError,
    GeneratorFileError,
    MonomialParseError,
)
from sortable_freiman.logging import get_logger
from sortable_freiman.models.generator_set import GeneratorSet
from sortable_freiman.models.monomial import Monomial
from sortable_freiman.services.monomial_parser import parse_monomial

LOG = get_logger("freiman.generator_file")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_header(path: str, lineno: int, line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GeneratorFileError(path, lineno, f"header must be 'n d', got {line!r}")
    try:
        n, d = int(parts[0]), int(parts[1])
    except ValueError:
        raise GeneratorFileError(path, lineno, f"header must hold two integers, got {line!r}")
    if n < 1 or d < 1:
        raise GeneratorFileError(path, lineno, f"n and d must be positive, got n={n} d={d}")
    return n, d


def load_generator_file(path: str | Path, *, strict: bool = False) -> GeneratorSet:
    source = str(path)
    text = Path(path).read_text(encoding="utf-8")
    lines = _content_lines(text)

    first = next(lines, None)
    if first is None:
        raise GeneratorFileError(source, 1, "missing 'n d' header")
    n, d = _parse_header(source, *first)

    gens: list[Monomial] = []
    seen: dict[Monomial, int] = {}
    for lineno, line in lines:
        try:
            u = parse_monomial(line, n)
        except MonomialParseError as exc:
            raise GeneratorFileError(source, lineno, str(exc)) from exc
        if u.degree != d:
            raise GeneratorFileError(
                source, lineno, f"{u} has degree {u.degree}, header says {d}"
            )
        if u in seen:
            if strict:
                raise DuplicateGeneratorError(
                    source, lineno, f"{u} repeats line {seen[u]}"
                )
            LOG.warning("%s:%d: duplicate generator %s (first on line %d) skipped",
                        source, lineno, u, seen[u])
            continue
        seen[u] = lineno
        gens.append(u)

    if not gens:
        raise GeneratorFileError(source, first[0], "no generators after the header")
    LOG.debug("Loaded %d generators from %s", len(gens), source)
    return GeneratorSet(n=n, d=d, gens=tuple(gens))
