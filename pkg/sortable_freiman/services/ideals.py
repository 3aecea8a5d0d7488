# sortable_freiman/services/ideals.py

from __future__ import annotations

from collections import deque
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from sortable_freiman.errors import AmbientMismatchError, DegreeMismatchError, EmptyDomainError
from sortable_freiman.logging import get_logger
from sortable_freiman.models.generator_set import GeneratorSet
from sortable_freiman.models.monomial import Monomial
from sortable_freiman.models.report import AnalysisReport
from sortable_freiman.services.chordal import is_chordal
from sortable_freiman.services.exact_rank import bareiss_rank
from sortable_freiman.services.graphs import sorted_graph
from sortable_freiman.services.sorting import sort_exponents

LOG = get_logger("freiman.ideals")


# ----------------------------------------------------------------------
# Generator-set construction
# ----------------------------------------------------------------------

def degree_vectors(n: int, d: int, bound: int | None = None) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of degree d in n variables, each entry at most ``bound``."""
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for j in combo:
            exps[j] += 1
        if bound is not None and max(exps) > bound:
            continue
        yield tuple(exps)


def all_monomials(n: int, d: int) -> list[Monomial]:
    return [Monomial(exps) for exps in degree_vectors(n, d)]


def borel_closure(seeds: Sequence[Monomial], n: int) -> GeneratorSet:
    """Degree-d part of the smallest strongly stable ideal containing ``seeds``."""
    if not seeds:
        raise EmptyDomainError("borel_closure needs at least one seed")
    d = seeds[0].degree
    for u in seeds:
        if u.n != n:
            raise AmbientMismatchError(f"seed {u} lives in {u.n} variables, expected {n}")
        if u.degree != d:
            raise DegreeMismatchError(f"seed {u} has degree {u.degree}, expected {d}")

    seen = {u.exponents for u in seeds}
    queue = deque(seen)
    while queue:
        exps = queue.popleft()
        for j in range(1, n):
            if not exps[j]:
                continue
            for i in range(j):
                moved = list(exps)
                moved[j] -= 1
                moved[i] += 1
                moved_t = tuple(moved)
                if moved_t not in seen:
                    seen.add(moved_t)
                    queue.append(moved_t)
    LOG.debug("Borel closure of %s: %d generators", [str(u) for u in seeds], len(seen))
    return GeneratorSet(n=n, d=d, gens=tuple(Monomial(e) for e in seen))


def borel_order_contains(u: Monomial, v: Monomial) -> bool:
    """True iff v lies in B(u): every prefix sum of v dominates that of u."""
    if u.n != v.n:
        raise AmbientMismatchError(f"ambient mismatch: {u.n} variables vs {v.n}")
    if u.degree != v.degree:
        return False
    total_u = total_v = 0
    for a, b in zip(u.exponents, v.exponents):
        total_u += a
        total_v += b
        if total_v < total_u:
            return False
    return True


def effective_bound(k: int, d: int) -> int:
    return min(k, d)


def veronese_constant(k: int, n: int, d: int) -> GeneratorSet:
    """G(I_{k,n,d}): degree-d monomials in n variables with every exponent at most min(k, d)."""
    if k < 1 or n < 1 or d < 1:
        raise ValueError(f"Veronese parameters must be positive (k={k}, n={n}, d={d})")
    bound = effective_bound(k, d)
    if bound * n <= d:
        raise EmptyDomainError(
            f"I_(k={k},n={n},d={d}) is outside the domain min(k,d)*n > d"
        )
    gens = tuple(Monomial(e) for e in degree_vectors(n, d, bound))
    return GeneratorSet(n=n, d=d, gens=gens)


def multiply_generators(g: GeneratorSet, w: Monomial) -> GeneratorSet:
    if w.n != g.n:
        raise AmbientMismatchError(f"multiplier {w} lives in {w.n} variables, expected {g.n}")
    gens = tuple(Monomial(tuple(a + b for a, b in zip(u.exponents, w.exponents))) for u in g)
    return GeneratorSet(n=g.n, d=g.d + w.degree, gens=gens)


def lift_monomial(u: Monomial, power: int = 1) -> Monomial:
    """u * x_{n+1}^power in n+1 variables."""
    return Monomial(u.exponents + (power,))


def extend_variables(g: GeneratorSet, power: int = 1) -> GeneratorSet:
    return GeneratorSet(
        n=g.n + 1,
        d=g.d + power,
        gens=tuple(lift_monomial(u, power) for u in g),
    )


# ----------------------------------------------------------------------
# Numeric invariants
# ----------------------------------------------------------------------

def _pairs(vectors: Sequence[tuple[int, ...]]) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    for i, a in enumerate(vectors):
        for b in vectors[i:]:
            yield a, b


def is_sortable(g: GeneratorSet) -> bool:
    vectors = g.exponent_vectors()
    members = set(vectors)
    for a, b in _pairs(vectors):
        first, second = sort_exponents(a, b)
        if first not in members or second not in members:
            return False
    return True


def mu_square(g: GeneratorSet) -> int:
    # All products have degree 2d, so no product divides another and the
    # distinct products are exactly G(I^2).
    products = {tuple(x + y for x, y in zip(a, b)) for a, b in _pairs(g.exponent_vectors())}
    return len(products)


def analytic_spread(g: GeneratorSet) -> int:
    # Krull dimension of the toric fiber cone K[G(I)] = rank of the exponent matrix.
    return bareiss_rank(g.exponent_vectors())


def freiman_bound(mu: int, spread: int) -> int:
    return spread * mu - spread * (spread - 1) // 2


def freiman_report(g: GeneratorSet) -> AnalysisReport:
    mu = g.mu
    spread = analytic_spread(g)
    squares = mu_square(g)
    bound = freiman_bound(mu, spread)
    sortable = is_sortable(g)
    verdict = None
    graph = None
    if sortable:
        graph = sorted_graph(g)
        verdict = is_chordal(graph)
    gap = squares - bound
    if sortable and gap < 0:
        LOG.warning(
            "Freiman inequality violated (n=%d, d=%d, mu=%d): gap=%d", g.n, g.d, mu, gap
        )
    return AnalysisReport(
        generators=g,
        mu=mu,
        spread=spread,
        mu_square=squares,
        bound=bound,
        gap=gap,
        freiman=gap == 0,
        sortable=sortable,
        chordal=verdict,
        sorted_graph=graph,
    )
