# sortable_freiman/tests/test_ideals.py

import random
from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, strategies as st

from sortable_freiman.errors import DegreeMismatchError, EmptyDomainError
from sortable_freiman.logging import ConsoleLog
from sortable_freiman.models.generator_set import GeneratorSet
from sortable_freiman.models.monomial import Monomial
from sortable_freiman.services.exact_rank import bareiss_rank
from sortable_freiman.services.graphs import sorted_graph
from sortable_freiman.services.ideals import (
    all_monomials,
    analytic_spread,
    borel_closure,
    borel_order_contains,
    degree_vectors,
    effective_bound,
    extend_variables,
    freiman_bound,
    freiman_report,
    is_sortable,
    mu_square,
    multiply_generators,
    veronese_constant,
)
from sortable_freiman.services.monomial_parser import parse_monomial
from sortable_freiman.services.sorting import multiply

ConsoleLog(level="INFO", quiet=True).setup()


def _set(texts, n):
    return GeneratorSet.from_monomials(parse_monomial(t, n) for t in texts)


def test_degree_vectors_are_listed_in_canonical_order():
    assert list(degree_vectors(3, 2)) == [
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
    ]
    assert list(degree_vectors(3, 3, bound=1)) == [(1, 1, 1)]


def test_borel_closure_of_x2x3():
    g = borel_closure([parse_monomial("x2*x3", 3)], 3)
    assert [str(u) for u in g] == ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3"]


def test_borel_closure_rejects_bad_seeds():
    with pytest.raises(EmptyDomainError):
        borel_closure([], 3)
    with pytest.raises(DegreeMismatchError):
        borel_closure([parse_monomial("x1", 2), parse_monomial("x2^2", 2)], 2)


def test_borel_order_matches_closure_membership():
    for n in (2, 3, 4):
        for d in (1, 2, 3):
            for u in all_monomials(n, d):
                closure = borel_closure([u], n)
                for v in all_monomials(n, d):
                    assert borel_order_contains(u, v) == (v in closure), (u, v)


def test_x1_factor_commutes_with_borel_closure():
    for u in all_monomials(4, 3):
        x1 = Monomial.variable(1, 4)
        shifted = Monomial((u.exponents[0] + 1,) + u.exponents[1:])
        assert multiply_generators(borel_closure([u], 4), x1) == borel_closure([shifted], 4)


def test_full_square_is_freiman():
    report = freiman_report(borel_closure([parse_monomial("x3^2", 3)], 3))
    assert (report.mu, report.spread, report.mu_square, report.bound) == (6, 3, 15, 15)
    assert report.gap == 0 and report.freiman
    assert report.sortable
    assert report.chordal is not None and report.chordal.chordal


def test_veronese_233_exceeds_the_bound_by_one():
    report = freiman_report(veronese_constant(2, 3, 3))
    assert (report.mu, report.spread, report.mu_square, report.bound) == (7, 3, 19, 18)
    assert report.gap == 1 and not report.freiman
    assert not report.chordal.chordal


def test_veronese_247_is_freiman():
    g = veronese_constant(2, 4, 7)
    assert g.mu == 4
    report = freiman_report(g)
    assert (report.spread, report.mu_square, report.bound) == (4, 10, 10)
    assert report.freiman


def test_veronese_bound_is_clamped_and_domain_checked():
    assert effective_bound(5, 2) == 2
    assert veronese_constant(5, 3, 2) == GeneratorSet.from_monomials(all_monomials(3, 2))
    for k, n, d in [(1, 2, 2), (2, 2, 4), (1, 3, 3)]:
        with pytest.raises(EmptyDomainError):
            veronese_constant(k, n, d)
    with pytest.raises(ValueError):
        veronese_constant(0, 3, 2)


def test_non_sortable_set_skips_the_graph():
    g = _set(["x1*x3", "x2^2"], 3)
    assert not is_sortable(g)
    report = freiman_report(g)
    assert report.chordal is None and report.sorted_graph is None
    assert (report.mu_square, report.spread) == (3, 2)


def test_freiman_bound_formula():
    assert freiman_bound(6, 3) == 15
    assert freiman_bound(1, 1) == 1
    assert freiman_bound(7, 3) == 18


def test_extending_by_a_new_variable_changes_nothing():
    rng = random.Random(0xC0FFEE)
    for _ in range(50):
        n = rng.randint(2, 4)
        d = rng.randint(1, 3)
        pool = all_monomials(n, d)
        g = GeneratorSet.from_monomials(rng.sample(pool, rng.randint(1, len(pool))))
        for power in (1, 2):
            lifted = extend_variables(g, power)
            assert (lifted.n, lifted.d) == (n + 1, d + power)
            assert lifted.mu == g.mu
            assert analytic_spread(lifted) == analytic_spread(g)
            assert mu_square(lifted) == mu_square(g)
            assert is_sortable(lifted) == is_sortable(g)
            assert sorted_graph(lifted).rows == sorted_graph(g).rows


@st.composite
def seed_lists(draw):
    n = draw(st.integers(min_value=2, max_value=4))
    d = draw(st.integers(min_value=1, max_value=3))
    pool = all_monomials(n, d)
    picks = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3))
    extra = draw(st.lists(st.sampled_from(pool), max_size=2))
    return n, picks, extra


def _exchange_moves(v: Monomial):
    exps = v.exponents
    for j in range(len(exps)):
        if not exps[j]:
            continue
        for i in range(j):
            moved = list(exps)
            moved[j] -= 1
            moved[i] += 1
            yield Monomial(tuple(moved))


@given(seed_lists())
def test_borel_closure_is_strongly_stable_idempotent_and_monotone(case):
    n, seeds, extra = case
    g = borel_closure(seeds, n)
    assert all(u in g for u in seeds)
    for v in g:
        for w in _exchange_moves(v):
            assert w in g, (v, w)
    assert borel_closure(list(g), n) == g
    bigger = borel_closure(seeds + extra, n)
    assert set(g) <= set(bigger)


def _pair_products(g):
    return [multiply(u, v) for u, v in combinations_with_replacement(g, 2)]


def test_mu_square_meets_the_pair_count_exactly_when_products_are_distinct():
    squares = _set(["x1^2", "x2^2"], 2)
    assert mu_square(squares) == 3 == comb(squares.mu + 1, 2)
    full = _set(["x1^2", "x1*x2", "x2^2"], 2)
    assert mu_square(full) == 5 < comb(full.mu + 1, 2)


def test_mu_square_and_spread_bounds_on_random_sets():
    rng = random.Random(0xC0FFEE)
    for _ in range(200):
        n = rng.randint(1, 5)
        d = rng.randint(1, 4)
        pool = all_monomials(n, d)
        g = GeneratorSet.from_monomials(rng.sample(pool, rng.randint(1, min(len(pool), 8))))
        products = _pair_products(g)
        pairs = comb(g.mu + 1, 2)
        assert len(products) == pairs
        assert mu_square(g) <= pairs
        assert (mu_square(g) == pairs) == (len(set(products)) == len(products))
        assert analytic_spread(g) <= min(g.mu, n)
        augmented = [row + (1,) for row in g.exponent_vectors()]
        assert analytic_spread(g) == bareiss_rank(augmented)
