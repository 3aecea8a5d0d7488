# sortable_freiman/services/classify.py

"""Closed-form Freiman predictions for principal Borel and constant-bound Veronese ideals.

Each clause is encoded as literally stated; the sweep, not this module, decides
whether a statement agrees with the direct count.
"""

from __future__ import annotations

from typing import Iterable

from sortable_freiman.errors import AmbientMismatchError, EmptyDomainError
from sortable_freiman.models.monomial import Monomial
from sortable_freiman.models.report import Verdict
from sortable_freiman.services.ideals import effective_bound

BOREL_CLAUSES: dict[str, str] = {
    "borel.trivial.d1": "d=1: B(u) is generated by variables",
    "borel.trivial.n2": "n<=2: the sorted graph is a path",
    "borel.d2.a1": "d=2: u in G((x1,x2,x3)^2)",
    "borel.d2.a2": "d=2: u in G(x1(x4,...,xn))",
    "borel.d2.a3": "d=2: u in G(x2(x4,...,xn))",
    "borel.d2.complement": "d=2: no listed pattern",
    "borel.d3.b1": "d=3: u in G(x1(x1,x2,x3)^2)",
    "borel.d3.b2": "d=3: u = x1(x1 or x2)x_i with i>3",
    "borel.d3.b3": "d=3: u in G(x2^2(x2,...,xn))",
    "borel.d3.complement": "d=3: no listed pattern",
    "borel.d4.c1": "d>=4: u = x1^(d-2)x3^2",
    "borel.d4.c2": "d>=4: u in G(x1^(d-1)(x1,...,xn))",
    "borel.d4.c3": "d>=4: u in G(x1^(d-r-1)x2^r(x_i,...,xn)), 1<=r<=d-1, i>=2",
    "borel.d4.complement": "d>=4: no listed pattern",
}

VERONESE_CLAUSES: dict[str, str] = {
    "veronese.k1.a": "k=1: n=2 and d=1",
    "veronese.k1.b": "k=1: n>=3 and d=1 or d=n-1",
    "veronese.k1.complement": "k=1: otherwise",
    "veronese.k2.a": "k=2: n=2 and d=2 or d=3",
    "veronese.k2.b": "k=2: n=3 and d=2, 4 or 5",
    "veronese.k2.c": "k=2: n>=4 and d=2n-1",
    "veronese.k2.complement": "k=2: otherwise",
    "veronese.k3.a": "k>=3: n=2 and k<=d<=2k-1",
    "veronese.k3.b": "k>=3: n=3 and d=3k-2 or d=3k-1",
    "veronese.k3.c": "k>=3: n>=4 and d=kn-1",
    "veronese.k3.complement": "k>=3: otherwise",
}


def _is_generator_of(
    u: Monomial,
    prefix: dict[int, int],
    variables: Iterable[int],
    degree: int,
) -> bool:
    """u is a minimal generator of prefix * (x_i : i in variables)^degree (1-based indices)."""
    rest = list(u.exponents)
    for i, e in prefix.items():
        if i > u.n:
            return False
        rest[i - 1] -= e
        if rest[i - 1] < 0:
            return False
    allowed = {i - 1 for i in variables}
    if any(r and j not in allowed for j, r in enumerate(rest)):
        return False
    return sum(rest) == degree


def _borel_d2_clause(u: Monomial, n: int) -> str:
    if _is_generator_of(u, {}, (1, 2, 3), 2):
        return "borel.d2.a1"
    if _is_generator_of(u, {1: 1}, range(4, n + 1), 1):
        return "borel.d2.a2"
    if _is_generator_of(u, {2: 1}, range(4, n + 1), 1):
        return "borel.d2.a3"
    return "borel.d2.complement"


def _borel_d3_clause(u: Monomial, n: int) -> str:
    if _is_generator_of(u, {1: 1}, (1, 2, 3), 2):
        return "borel.d3.b1"
    for y in (1, 2):
        prefix = {1: 2} if y == 1 else {1: 1, 2: 1}
        if _is_generator_of(u, prefix, range(4, n + 1), 1):
            return "borel.d3.b2"
    if _is_generator_of(u, {2: 2}, range(2, n + 1), 1):
        return "borel.d3.b3"
    return "borel.d3.complement"


def _borel_d4_clause(u: Monomial, n: int) -> str:
    d = u.degree
    if _is_generator_of(u, {1: d - 2, 3: 2}, (), 0):
        return "borel.d4.c1"
    if _is_generator_of(u, {1: d - 1}, range(1, n + 1), 1):
        return "borel.d4.c2"
    for r in range(1, d):
        # The union over i >= 2 of (x_i, ..., x_n) is (x_2, ..., x_n).
        if _is_generator_of(u, {1: d - r - 1, 2: r}, range(2, n + 1), 1):
            return "borel.d4.c3"
    return "borel.d4.complement"


def predicted_borel(u: Monomial, n: int) -> Verdict:
    if u.n != n:
        raise AmbientMismatchError(f"{u} lives in {u.n} variables, expected {n}")
    if u.degree < 1:
        raise ValueError("B(1) is the unit ideal; a generator of positive degree is needed")
    x1_power = u.exponents[0]
    normalization = {
        "x1_power": x1_power,
        "core": Monomial((0,) + u.exponents[1:]).to_symbolic(),
    }
    d = u.degree
    if d == 1:
        clause = "borel.trivial.d1"
    elif n <= 2:
        clause = "borel.trivial.n2"
    elif d == 2:
        clause = _borel_d2_clause(u, n)
    elif d == 3:
        clause = _borel_d3_clause(u, n)
    else:
        clause = _borel_d4_clause(u, n)
    return Verdict(
        freiman_predicted=not clause.endswith("complement"),
        clause=clause,
        normalization=normalization,
        description=BOREL_CLAUSES[clause],
    )


def _veronese_clause(k: int, n: int, d: int) -> str:
    if k == 1:
        if n == 2 and d == 1:
            return "veronese.k1.a"
        if n >= 3 and (d == 1 or d == n - 1):
            return "veronese.k1.b"
        return "veronese.k1.complement"
    if k == 2:
        if n == 2 and d in (2, 3):
            return "veronese.k2.a"
        if n == 3 and d in (2, 4, 5):
            return "veronese.k2.b"
        if n >= 4 and d == 2 * n - 1:
            return "veronese.k2.c"
        return "veronese.k2.complement"
    if n == 2 and k <= d <= 2 * k - 1:
        return "veronese.k3.a"
    if n == 3 and d in (3 * k - 2, 3 * k - 1):
        return "veronese.k3.b"
    if n >= 4 and d == k * n - 1:
        return "veronese.k3.c"
    return "veronese.k3.complement"


def predicted_veronese(k: int, n: int, d: int) -> Verdict:
    if k < 1 or n < 1 or d < 1:
        raise ValueError(f"Veronese parameters must be positive (k={k}, n={n}, d={d})")
    effective_k = effective_bound(k, d)
    if effective_k * n <= d:
        raise EmptyDomainError(f"I_(k={k},n={n},d={d}) is outside the domain min(k,d)*n > d")
    clause = _veronese_clause(effective_k, n, d)
    return Verdict(
        freiman_predicted=not clause.endswith("complement"),
        clause=clause,
        normalization={
            "requested_k": k,
            "effective_k": effective_k,
            "clamped": effective_k != k,
        },
        description=VERONESE_CLAUSES[clause],
    )
