# sortable_freiman/services/monomial_parser.py

"""Reader for the two monomial syntaxes accepted on the command line and in files.

* exponent vectors: ``"0 0 2"`` or ``"0,0,2"``
* symbolic products: ``"x1^2*x3"``; factors of one variable accumulate
* ``"1"`` is the unit monomial when n >= 2; with one variable it is the vector for x1
"""

from __future__ import annotations

import re

from sortable_freiman.errors import (
    MalformedTokenError,
    NegativeExponentError,
    VariableIndexError,
    VectorLengthError,
)
from sortable_freiman.models.monomial import Monomial

_FACTOR_RE = re.compile(r"\s*x(?P<index>\d+)\s*(?:\^\s*(?P<exp>-?\d+))?\s*$")


def parse_monomial(text: str, n: int) -> Monomial:
    if n < 1:
        raise ValueError(f"Ambient variable count must be positive, got {n}")
    if n > 1 and text.strip() == "1":
        return Monomial.one(n)
    if "x" in text:
        return Monomial(_parse_symbolic(text, n))
    return Monomial(_parse_vector(text, n))


def _parse_symbolic(text: str, n: int) -> tuple[int, ...]:
    exps = [0] * n
    offset = 0
    for chunk in text.split("*"):
        match = _FACTOR_RE.match(chunk)
        if match is None:
            raise MalformedTokenError(text, offset, f"malformed factor {chunk.strip()!r}")
        index = int(match.group("index"))
        if not 1 <= index <= n:
            raise VariableIndexError(
                text,
                offset + match.start("index"),
                f"variable index {index} outside 1..{n}",
            )
        raw_exp = match.group("exp")
        exp = 1 if raw_exp is None else int(raw_exp)
        if exp < 0:
            raise NegativeExponentError(
                text, offset + match.start("exp"), f"negative exponent {exp}"
            )
        if exp == 0:
            raise MalformedTokenError(
                text, offset + match.start("exp"), "exponent must be at least 1"
            )
        exps[index - 1] += exp
        offset += len(chunk) + 1
    return tuple(exps)


def _parse_vector(text: str, n: int) -> tuple[int, ...]:
    exps: list[int] = []
    for match in re.finditer(r"[^\s,]+", text):
        token = match.group(0)
        try:
            value = int(token)
        except ValueError:
            raise MalformedTokenError(text, match.start(), f"not an integer {token!r}") from None
        if value < 0:
            raise NegativeExponentError(text, match.start(), f"negative exponent {value}")
        exps.append(value)
    if len(exps) != n:
        raise VectorLengthError(
            text, len(text), f"expected {n} exponents, found {len(exps)}"
        )
    return tuple(exps)
