import random
from itertools import product

import pytest

from gamma_hyperlab.bridge import (
    CarrierMap, crisp_from_labels, image_fuzzy, is_crisp_homomorphism, is_fuzzy_homomorphism, phi, psi,
)
from gamma_hyperlab.carrier import Carrier, CarrierMismatch, leq
from gamma_hyperlab.cuts import CrispGammaHyperop, crisp_is_associative
from gamma_hyperlab.families import cyclic_group, max_gamma_semigroup, max_structure
from gamma_hyperlab.hyperop import FuzzyGammaHyperop, StructureError, from_gamma_semigroup_and_fuzzy_sub, is_associative, is_hypergroup
from gamma_hyperlab.sampling import random_any, random_crisp, random_fuzzy_subset
from support import grades

MAX = max_structure(2)
C = MAX.carrier


def test_psi_of_max_is_the_max_table():
    K = psi(MAX)
    assert all(K.cells[a][0][b] == {max(a, b)} for a in range(3) for b in range(3))


def test_psi_of_gamma_semigroup_image_is_the_semigroup():
    carrier, op = max_gamma_semigroup(2)
    H = from_gamma_semigroup_and_fuzzy_sub(carrier, op, grades(carrier, "1/2", "1/3", 1))
    assert psi(H) == psi(MAX)
    assert psi(H).is_single_valued()


def test_phi_examples():
    G = psi(cyclic_group(3))
    assert phi(G) == cyclic_group(3)
    total = CrispGammaHyperop.from_function(Carrier.of_size(3), lambda a, g, b: range(3))
    T = phi(total)
    assert all(T.cell(a, 0, b) == T.carrier.full() for a in range(3) for b in range(3))
    assert is_hypergroup(T)


def test_psi_and_phi_reject_empty_cells():
    partial = CrispGammaHyperop.from_function(Carrier.of_size(2), lambda a, g, b: [] if a == b else [a])
    with pytest.raises(StructureError):
        phi(partial)
    improper = max_structure(1)
    zero_cell = FuzzyGammaHyperop.from_function(improper.carrier, lambda a, g, b: (0, 0) if a else (1, 0), proper=None)
    with pytest.raises(StructureError):
        psi(zero_cell)


def test_round_trips():
    rng = random.Random(21)
    for _ in range(100):
        K = random_crisp(rng, rng.randint(1, 3), rng.randint(1, 2))
        assert psi(phi(K)) == K
        assert bool(crisp_is_associative(K)) == bool(is_associative(phi(K)))
    for _ in range(100):
        H = random_any(rng, rng.randint(1, 3), 1, rng.randint(1, 3))
        assert (phi(psi(H)) == H) == H.is_crisp_valued()


def test_image_examples():
    f = CarrierMap(C, C, (0, 1, 0))
    for m in range(3):
        assert image_fuzzy(f, C.point(m)) == C.point(f(m))
    const = CarrierMap(C, C, (2, 2, 2))
    mu = grades(C, "1/4", "2/3", "1/2")
    assert image_fuzzy(const, mu) == grades(C, 0, 0, "2/3")
    assert image_fuzzy(CarrierMap.identity(C), mu) == mu


def test_image_is_functorial_and_monotone():
    rng = random.Random(4)
    c2 = Carrier.of_size(2)
    for _ in range(100):
        f = CarrierMap(C, C, tuple(rng.randrange(3) for _ in range(3)))
        g = CarrierMap(C, c2, tuple(rng.randrange(2) for _ in range(3)))
        mu, nu = random_fuzzy_subset(rng, C, 4), random_fuzzy_subset(rng, C, 4)
        assert image_fuzzy(f.then(g), mu) == image_fuzzy(g, image_fuzzy(f, mu))
        lo = type(mu)(C, tuple(min(x, y) for x, y in zip(mu.grades, nu.grades)))
        assert leq(image_fuzzy(f, lo), image_fuzzy(f, mu))


def test_homomorphism_examples():
    assert is_fuzzy_homomorphism(CarrierMap.identity(C), MAX, MAX)
    small = max_structure(1)
    inclusion = CarrierMap(small.carrier, C, (0, 1))
    assert is_fuzzy_homomorphism(inclusion, small, MAX)
    report = is_fuzzy_homomorphism(CarrierMap(C, C, (0, 1, 0)), MAX, MAX)
    assert not report
    w = report.witness
    assert (w.element("a"), w.element("b"), w.point) == (1, 2, 0)
    assert is_crisp_homomorphism(CarrierMap.identity(C), psi(MAX), psi(MAX))
    assert not is_crisp_homomorphism(CarrierMap(C, C, (0, 1, 0)), psi(MAX), psi(MAX))


def test_maps_validate():
    with pytest.raises(CarrierMismatch):
        CarrierMap(C, Carrier.of_size(3, 2), (0, 1, 2))
    with pytest.raises(ValueError):
        CarrierMap.from_labels(C, C, {"0": "0", "1": "1"})
    f = CarrierMap.from_labels(C, C, {"0": "2", "1": "2", "2": "2"})
    assert f.assignment == (2, 2, 2)


def test_crisp_from_labels():
    c = Carrier(("x", "y"))
    K = crisp_from_labels(c, {(a, "g", b): [a, b] for a, b in product("xy", repeat=2)})
    assert K.cell(0, 0, 1).members == {0, 1}
    assert psi(phi(K)) == K
