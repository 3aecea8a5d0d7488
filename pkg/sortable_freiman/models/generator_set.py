# sortable_freiman/models/generator_set.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from sortable_freiman.errors import AmbientMismatchError, DegreeMismatchError, EmptyDomainError
from sortable_freiman.models.monomial import Monomial, canonical_key


@dataclass(frozen=True)
class GeneratorSet:
    """G(I) of an equigenerated monomial ideal: distinct degree-d monomials in canonical order."""

    n: int
    d: int
    gens: tuple[Monomial, ...]
    _members: frozenset[Monomial] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.gens:
            raise EmptyDomainError("a generator set must be nonempty")
        for u in self.gens:
            if u.n != self.n:
                raise AmbientMismatchError(f"{u} lives in {u.n} variables, expected {self.n}")
            if u.degree != self.d:
                raise DegreeMismatchError(f"{u} has degree {u.degree}, expected {self.d}")
        ordered = tuple(sorted(set(self.gens), key=canonical_key))
        if len(ordered) != len(self.gens) or ordered != self.gens:
            object.__setattr__(self, "gens", ordered)
        object.__setattr__(self, "_members", frozenset(ordered))

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial]) -> "GeneratorSet":
        gens = tuple(monomials)
        if not gens:
            raise EmptyDomainError("a generator set must be nonempty")
        return cls(n=gens[0].n, d=gens[0].degree, gens=gens)

    @property
    def mu(self) -> int:
        return len(self.gens)

    def exponent_vectors(self) -> list[tuple[int, ...]]:
        return [u.exponents for u in self.gens]

    def __contains__(self, u: object) -> bool:
        return u in self._members

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)
