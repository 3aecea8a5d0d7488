# sortable_freiman/services/certificates.py

"""Explicit chordless cycles of the sorted graph for non-Freiman instances.

Every cycle here is a common multiple of one of two base cycles: the 4-cycle
x1x2, x1x4, x3x4, x2x3 in degree 2 and the 6-cycle x1x2^2, x1^2x2, x1^2x3,
x1x3^2, x2x3^2, x2^2x3 in degree 3. Multiplying a sorted pair by a common
monomial keeps it sorted, so the multiples stay induced cycles.
"""

from __future__ import annotations

from typing import Optional, Sequence

from sortable_freiman.models.generator_set import GeneratorSet
from sortable_freiman.models.monomial import Monomial
from sortable_freiman.models.graph import Graph
from sortable_freiman.services.graphs import is_induced_cycle
from sortable_freiman.services.ideals import borel_order_contains, effective_bound
from sortable_freiman.services.sorting import is_sorted

# Exponent vectors on x1..x4 and x1..x3.
_BASE_SQUARE = ((1, 1, 0, 0), (1, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 0))
_BASE_HEXAGON = ((1, 2, 0), (2, 1, 0), (2, 0, 1), (1, 0, 2), (0, 1, 2), (0, 2, 1))


def _embed(vectors: Sequence[tuple[int, ...]], n: int, offset: int = 0) -> list[list[int]]:
    """Place each vector at variables offset+1.. of an n-variable exponent vector."""
    out = []
    for vec in vectors:
        exps = [0] * n
        for j, e in enumerate(vec):
            exps[offset + j] = e
        out.append(exps)
    return out


def _times(cycle: list[list[int]], factor: dict[int, int]) -> list[Monomial]:
    """Multiply every vertex by prod x_i^e over ``factor`` (1-based indices)."""
    result = []
    for exps in cycle:
        scaled = list(exps)
        for i, e in factor.items():
            scaled[i - 1] += e
        result.append(Monomial(tuple(scaled)))
    return result


def _widen(cycle: Sequence[Monomial], power: int = 0) -> list[Monomial]:
    return [Monomial(u.exponents + (power,)) for u in cycle]


def borel_certificate(u: Monomial, n: int) -> Optional[list[Monomial]]:
    """A chordless cycle inside G(B(u)), or None when neither base pattern fits."""
    d = u.degree
    if n < 3 or d < 2:
        return None
    candidates: list[list[Monomial]] = []
    if n >= 4:
        candidates.append(_times(_embed(_BASE_SQUARE, n), {1: d - 2}))
    if d >= 3:
        candidates.append(_times(_embed(_BASE_HEXAGON, n), {1: d - 3}))
    for cycle in candidates:
        if all(borel_order_contains(u, v) for v in cycle):
            return cycle
    return None


# Cycles of I_{2,4,d} for d = 2..6; each is a multiple of the previous one.
_BOUND2_N4 = {
    2: ((1, 1, 0, 0), (1, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 0)),
    3: ((2, 1, 0, 0), (2, 0, 0, 1), (1, 0, 1, 1), (1, 1, 1, 0)),
    4: ((2, 2, 0, 0), (2, 1, 0, 1), (1, 1, 1, 1), (1, 2, 1, 0)),
    5: ((2, 2, 1, 0), (2, 1, 1, 1), (1, 1, 2, 1), (1, 2, 2, 0)),
    6: ((2, 2, 1, 1), (2, 1, 1, 2), (1, 1, 2, 2), (1, 2, 2, 1)),
}


def _bound1(n: int, d: int) -> Optional[list[Monomial]]:
    if n < 4 or not 2 <= d <= n - 2:
        return None
    # Square on the last four variables, padded by d-2 distinct earlier ones.
    cycle = _embed(_BASE_SQUARE, n, offset=n - 4)
    return _times(cycle, {n - j: 1 for j in range(4, d + 2)})


def _bound2(n: int, d: int) -> Optional[list[Monomial]]:
    if n == 3:
        return _times(_embed(_BASE_HEXAGON, 3), {}) if d == 3 else None
    if n == 4:
        vectors = _BOUND2_N4.get(d)
        return [Monomial(v) for v in vectors] if vectors else None
    if n < 4:
        return None
    if d <= 2 * n - 4:
        smaller = _bound2(n - 1, d)
        return _widen(smaller) if smaller is not None else None
    if d in (2 * n - 3, 2 * n - 2):
        smaller = _bound2(n - 1, 2 * n - 4)
        if smaller is None:
            return None
        return _widen(smaller, power=d - (2 * n - 4))
    return None


def _bound_at_least3(k: int, n: int, d: int) -> Optional[list[Monomial]]:
    if n < 3:
        return None
    if d == k:
        return _times(_embed(_BASE_HEXAGON, n), {1: d - 3})
    if n == 3:
        hexagon = _embed(_BASE_HEXAGON, 3)
        if k + 1 <= d <= 2 * k - 1:
            return _times(hexagon, {1: k - 2, 2: d - k - 1})
        if 2 * k <= d <= 3 * k - 3:
            return _times(hexagon, {1: k - 2, 2: k - 2, 3: d - 2 * k + 1})
        return None
    square = _embed(_BASE_SQUARE, n)
    if k + 1 <= d <= 2 * k:
        return _times(square, {1: k - 1, 2: d - k - 1})
    if 2 * k + 1 <= d <= 3 * k - 1:
        return _times(square, {1: k - 1, 2: k - 1, 3: d - 2 * k})
    if 3 * k <= d <= 4 * k - 2:
        return _times(square, {1: k - 1, 2: k - 1, 3: k - 1, 4: d - 3 * k + 1})
    for m in range(5, n + 1):
        if (m - 1) * k - 1 <= d <= m * k - 2:
            factor = {1: k - 1, 2: k - 1, 3: k - 1, 4: k - 1}
            factor.update({j: k for j in range(5, m)})
            factor[m] = d - (m - 1) * k + 2
            return _times(square, factor)
    return None


def veronese_certificate(k: int, n: int, d: int) -> Optional[list[Monomial]]:
    """A chordless cycle inside G(I_{k,n,d}), or None where the ideal is Freiman."""
    bound = effective_bound(k, d)
    if bound == 1:
        return _bound1(n, d)
    if bound == 2:
        return _bound2(n, d)
    return _bound_at_least3(bound, n, d)


def paper_certificate(family: str, params: dict[str, object]) -> Optional[list[Monomial]]:
    if family == "borel":
        u = params["u"]
        if not isinstance(u, Monomial):
            raise TypeError("borel certificates need a Monomial 'u'")
        return borel_certificate(u, int(params["n"]))
    if family == "veronese":
        return veronese_certificate(int(params["k"]), int(params["n"]), int(params["d"]))
    raise ValueError(f"unknown family {family!r}")


def validate_certificate(g: GeneratorSet, cycle: Sequence[Monomial]) -> bool:
    """True iff ``cycle`` is a chordless cycle of length >= 4 in the sorted graph of ``g``.

    Sortedness is a property of the pair alone, so only the cycle's own
    vertices need to be compared.
    """
    t = len(cycle)
    if t < 4 or len(set(cycle)) != t or any(u not in g for u in cycle):
        return False
    edges = [(a, b) for a in range(t) for b in range(a + 1, t) if is_sorted(cycle[a], cycle[b])]
    return is_induced_cycle(Graph.from_edges(t, edges, cycle), list(range(t)))
