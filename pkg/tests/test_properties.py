"""Algebraic laws checked on hypothesis-drawn structures and subsets."""
import random

from hypothesis import given, settings, strategies as st

from gamma_hyperlab.carrier import intersection, leq, union
from gamma_hyperlab.cuts import verify_cut_equivalence
from gamma_hyperlab.hyperop import (
    compose_elem, compose_fuzzy, compose_left, compose_right, is_associative,
)
from gamma_hyperlab.sampling import random_any, random_associative, random_fuzzy_subset

seeds = st.integers(0, 2**32 - 1)
sizes = st.integers(1, 3)
sorts = st.integers(1, 2)
dens = st.integers(1, 4)


@settings(max_examples=80, deadline=None)
@given(seeds, sizes, sorts, dens)
def test_composition_forms_are_consistent_and_bounded(seed, m, k, d):
    rng = random.Random(seed)
    H = random_any(rng, m, k, d)
    c = H.carrier
    mu, nu = random_fuzzy_subset(rng, c, d), random_fuzzy_subset(rng, c, d)
    top = [compose_fuzzy(H, c.full(), g, c.full()) for g in range(k)]
    for g in range(k):
        for a in range(m):
            assert compose_left(H, a, g, mu) == compose_fuzzy(H, c.point(a), g, mu)
            assert compose_right(H, mu, g, a) == compose_fuzzy(H, mu, g, c.point(a))
        prod = compose_fuzzy(H, mu, g, nu)
        assert leq(prod, top[g]) and leq(top[g], c.full())


@settings(max_examples=80, deadline=None)
@given(seeds, sizes, sorts, dens)
def test_composition_is_monotone(seed, m, k, d):
    rng = random.Random(seed)
    H = random_any(rng, m, k, d)
    c = H.carrier
    mu, extra, nu = (random_fuzzy_subset(rng, c, d) for _ in range(3))
    bigger = union(mu, extra)
    smaller = intersection(mu, extra)
    for g in range(k):
        assert leq(compose_fuzzy(H, mu, g, nu), compose_fuzzy(H, bigger, g, nu))
        assert leq(compose_fuzzy(H, nu, g, smaller), compose_fuzzy(H, nu, g, mu))


@settings(max_examples=60, deadline=None)
@given(seeds, sizes, sorts, dens)
def test_associativity_through_point_subsets(seed, m, k, d):
    rng = random.Random(seed)
    H = random_any(rng, m, k, d)
    c = H.carrier
    via_points = all(
        compose_fuzzy(H, compose_elem(H, a, al, b), be, c.point(x))
        == compose_fuzzy(H, c.point(a), al, compose_elem(H, b, be, x))
        for a in range(m) for b in range(m) for x in range(m) for al in range(k) for be in range(k)
    )
    assert via_points == bool(is_associative(H))


@settings(max_examples=60, deadline=None)
@given(seeds, sizes, sorts, dens)
def test_cut_equivalence_holds(seed, m, k, d):
    H = random_any(random.Random(seed), m, k, d)
    report = verify_cut_equivalence(H)
    assert report


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 4), sorts, dens)
def test_associative_sampler(seed, m, k, d):
    assert is_associative(random_associative(random.Random(seed), m, k, d))
