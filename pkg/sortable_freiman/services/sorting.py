# sortable_freiman/services/sorting.py

from __future__ import annotations

from sortable_freiman.errors import AmbientMismatchError, DegreeMismatchError
from sortable_freiman.models.monomial import Monomial


def _check_ambient(u: Monomial, v: Monomial) -> None:
    if u.n != v.n:
        raise AmbientMismatchError(f"ambient mismatch: {u.n} variables vs {v.n}")


def _check_degrees(u: Monomial, v: Monomial) -> None:
    _check_ambient(u, v)
    if u.degree != v.degree:
        raise DegreeMismatchError(f"unequal degrees {u.degree} and {v.degree} ({u}, {v})")


def multiply(u: Monomial, v: Monomial) -> Monomial:
    _check_ambient(u, v)
    return Monomial(tuple(a + b for a, b in zip(u.exponents, v.exponents)))


def sort_exponents(
    a: tuple[int, ...], b: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sorting operator on raw exponent vectors of equal degree.

    Variable j owns the word positions [pos, pos + m_j) of the merged word. The
    first factor takes the odd 1-based positions, so it receives ceil(m_j / 2)
    copies when the block starts on an odd position and floor(m_j / 2) otherwise.
    """
    first: list[int] = []
    second: list[int] = []
    pos = 0
    for x, y in zip(a, b):
        m = x + y
        take = (m + 1) // 2 if pos % 2 == 0 else m // 2
        first.append(take)
        second.append(m - take)
        pos += m
    return tuple(first), tuple(second)


def sort_pair(u: Monomial, v: Monomial) -> tuple[Monomial, Monomial]:
    _check_degrees(u, v)
    first, second = sort_exponents(u.exponents, v.exponents)
    return Monomial(first), Monomial(second)


def sort_pair_naive(u: Monomial, v: Monomial) -> tuple[Monomial, Monomial]:
    """Reference sorting that materializes the length-2d index word."""
    _check_degrees(u, v)
    word = []
    for j, m in enumerate(multiply(u, v).exponents):
        word.extend([j] * m)
    first = [0] * u.n
    second = [0] * u.n
    for pos, j in enumerate(word):
        if pos % 2 == 0:
            first[j] += 1
        else:
            second[j] += 1
    return Monomial(tuple(first)), Monomial(tuple(second))


def exponents_sorted(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    first, second = sort_exponents(a, b)
    return (first == a and second == b) or (first == b and second == a)


def is_sorted(u: Monomial, v: Monomial) -> bool:
    _check_degrees(u, v)
    return exponents_sorted(u.exponents, v.exponents)
