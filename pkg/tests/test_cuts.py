import random
from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from gamma_hyperlab.carrier import CrispSubset, characteristic
from gamma_hyperlab.cuts import (
    CrispGammaHyperop, crisp_is_associative, crisp_product, cut_structure, cut_subset, distinct_grades,
    verify_cut_equivalence, verify_cut_membership, verify_reproduction_cut,
)
from gamma_hyperlab.families import cyclic_group, max_structure, pair_union, truncated_sum
from gamma_hyperlab.hyperop import FuzzyGammaHyperop
from gamma_hyperlab.carrier import Carrier
from gamma_hyperlab.sampling import random_any
from support import grades, table_structure

TS = truncated_sum(2)
MAX = max_structure(2)


def test_cut_subset_examples():
    c = Carrier.of_size(3)
    mu = grades(c, "1/2", "1/3", 0)
    assert cut_subset(mu, F(1, 3)).members == {0, 1}
    assert cut_subset(mu, 0).members == {0, 1, 2}
    S = CrispSubset(c, frozenset({0, 2}))
    assert cut_subset(characteristic(S), 1) == S


def test_cut_structure_examples():
    K = cut_structure(TS, F(1, 2))
    for a in range(3):
        for b in range(3):
            assert K.cells[a][0][b] == {min(a + b, 2)}
    high = cut_structure(TS, F(3, 4))
    assert high.partial
    assert all(not cell for row in high.cells for per in row for cell in per)
    full = cut_structure(TS, 0)
    assert all(cell == {0, 1, 2} for row in full.cells for per in row for cell in per)


def test_crisp_product_examples():
    K = cut_structure(MAX, 1)
    c = K.carrier
    assert crisp_product(K, CrispSubset(c, frozenset({0})), 0, CrispSubset(c, frozenset({2}))) == K.cell(0, 0, 2)
    assert not crisp_product(K, CrispSubset(c, frozenset()), 0, CrispSubset(c, frozenset({1}))).members
    assert crisp_product(K, CrispSubset(c, frozenset({0, 1})), 0, CrispSubset(c, frozenset({1, 2}))).members == {1, 2}


def _broken():
    return table_structure("01", "g", lambda a, g, b: {"1": 1} if (a, b) == ("0", "0") else {"0": 1})


def test_crisp_associativity_examples():
    for p in distinct_grades(TS):
        assert crisp_is_associative(cut_structure(TS, p))
    semigroup = CrispGammaHyperop.from_function(Carrier.of_size(3), lambda a, g, b: [max(a, b)])
    assert semigroup.is_single_valued() and crisp_is_associative(semigroup)
    report = crisp_is_associative(cut_structure(_broken(), 1))
    assert not report and report.witness is not None


def test_distinct_grades_examples():
    assert distinct_grades(TS) == (F(1, 2), 1)
    assert distinct_grades(MAX) == (1,)
    H = table_structure("01", "g", lambda a, g, b: {"0": "1/3", "1": "1/2"})
    assert distinct_grades(H) == (F(1, 3), F(1, 2), 1)


def test_cut_equivalence_examples():
    report = verify_cut_equivalence(pair_union(3))
    assert report and report.detail("fuzzy") and report.detail("crisp")
    report = verify_cut_equivalence(_broken())
    assert report and not report.detail("fuzzy") and not report.detail("crisp")


def test_reproduction_cut_examples():
    G = cyclic_group(3)
    assert all(verify_reproduction_cut(G, x, 0) for x in range(3))
    report = verify_reproduction_cut(MAX, 1, 0)
    assert report
    one = FuzzyGammaHyperop(Carrier.of_size(1), (((((1,),),),)))
    assert verify_reproduction_cut(one, 0, 0)


def test_cut_membership_on_fixtures():
    for H in (TS, MAX, pair_union(3), _broken()):
        assert verify_cut_membership(H)


grade = st.fractions(min_value=0, max_value=1, max_denominator=6)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), grade, grade)
def test_cut_monotonicity_and_grid_sufficiency(seed, p, q):
    H = random_any(random.Random(seed), 3, 1, 4)
    lo, hi = min(p, q), max(p, q)
    a, b = cut_structure(H, lo), cut_structure(H, hi)
    for row_a, row_b in zip(a.cells, b.cells):
        for per_a, per_b in zip(row_a, row_b):
            for ca, cb in zip(per_a, per_b):
                assert cb <= ca
    # the cut at lo keeps exactly the extra grades in [lo, hi)
    occurring = [g for g in H.grades() if lo <= g < hi]
    if not occurring:
        assert a == b


@given(st.frozensets(st.integers(0, 3)), grade.filter(lambda p: p > 0))
def test_characteristic_round_trip_through_cut(members, p):
    c = Carrier.of_size(4)
    S = CrispSubset(c, members)
    assert cut_subset(characteristic(S), p) == S
