# sortable_freiman/models/monomial.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from sortable_freiman.errors import LimitExceededError

DEFAULT_MAX_DEGREE = 512
DEFAULT_MAX_VARIABLES = 64

_limits = {"max_degree": DEFAULT_MAX_DEGREE, "max_variables": DEFAULT_MAX_VARIABLES}


def configure_limits(
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_variables: int = DEFAULT_MAX_VARIABLES,
) -> None:
    """Install the construction caps enforced by every new Monomial."""
    if max_degree < 1 or max_variables < 1:
        raise ValueError("Monomial limits must be positive")
    _limits["max_degree"] = max_degree
    _limits["max_variables"] = max_variables


def current_limits() -> tuple[int, int]:
    return _limits["max_degree"], _limits["max_variables"]


@dataclass(frozen=True)
class Monomial:
    """Dense exponent vector over ``n = len(exponents)`` variables x1 < x2 < ... < xn."""

    exponents: tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if not exps:
            raise ValueError("A monomial needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"Negative exponent in {exps}")
        max_degree, max_variables = current_limits()
        if len(exps) > max_variables:
            raise LimitExceededError(
                f"{len(exps)} variables exceeds the cap of {max_variables}"
            )
        degree = sum(exps)
        if degree > max_degree:
            raise LimitExceededError(f"degree {degree} exceeds the cap of {max_degree}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", degree)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int, power: int = 1) -> "Monomial":
        """x_i^power with 1-based index ``i``."""
        exps = [0] * n
        exps[i - 1] = power
        return cls(tuple(exps))

    def to_symbolic(self) -> str:
        parts = []
        for j, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{j}")
            elif e > 1:
                parts.append(f"x{j}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.to_symbolic()


def canonical_key(u: Monomial) -> tuple[int, ...]:
    # Descending lex on exponents: x1^2 < x1x2 < x1x3 < x2^2 in listing order.
    return tuple(-e for e in u.exponents)


def canonical_order(monomials: Iterable[Monomial]) -> list[Monomial]:
    return sorted(set(monomials), key=canonical_key)


def format_monomial(u: Monomial) -> str:
    return u.to_symbolic()
