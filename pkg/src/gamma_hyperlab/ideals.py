"""Sub-hypersemigroups and fuzzy hyperideals.

Every predicate takes the structure explicitly, so one fuzzy subset can be
tested against several structures.  Inclusion ``μ ⊆ ν`` always means the
pointwise order ``μ <= ν``.
"""
from __future__ import annotations

from .carrier import FuzzySubset, union
from .grades import ONE, ZERO
from .hyperop import PASS, CheckReport, FuzzyGammaHyperop, StructureError, _both, _left, _own, _right, fail


def _exceeds(vec: tuple, mu: tuple):
    """Index of the first point where ``vec`` exceeds ``mu``, else None."""
    for r, (x, y) in enumerate(zip(vec, mu)):
        if x > y:
            return r
    return None


def is_sub_hypersemigroup(H: FuzzyGammaHyperop, mu: FuzzySubset) -> CheckReport:
    """``μ∘γ∘μ <= μ`` for every γ."""
    vec = _own(H, mu)
    m = H.carrier.size
    for g in range(H.carrier.n_sorts):
        prod = _both(H.cells, m, vec, g, vec)
        r = _exceeds(prod, vec)
        if r is not None:
            return fail((), (("gamma", g),), r, prod[r], vec[r])
    return PASS


def is_left_ideal(H: FuzzyGammaHyperop, mu: FuzzySubset) -> CheckReport:
    """``a∘γ∘μ <= μ`` for every a and γ."""
    vec = _own(H, mu)
    if mu.is_zero():
        return PASS
    m = H.carrier.size
    for a in range(m):
        for g in range(H.carrier.n_sorts):
            prod = _left(H.cells, m, a, g, vec)
            r = _exceeds(prod, vec)
            if r is not None:
                return fail((("a", a),), (("gamma", g),), r, prod[r], vec[r])
    return PASS


def is_right_ideal(H: FuzzyGammaHyperop, mu: FuzzySubset) -> CheckReport:
    """``μ∘γ∘a <= μ`` for every a and γ."""
    vec = _own(H, mu)
    if mu.is_zero():
        return PASS
    m = H.carrier.size
    for a in range(m):
        for g in range(H.carrier.n_sorts):
            prod = _right(H.cells, m, vec, g, a)
            r = _exceeds(prod, vec)
            if r is not None:
                return fail((("a", a),), (("gamma", g),), r, prod[r], vec[r])
    return PASS


def left_ideal_via_M(H: FuzzyGammaHyperop, mu: FuzzySubset) -> CheckReport:
    """``M∘γ∘μ <= μ`` for every γ, with ``M`` read as ``χ_M``."""
    vec = _own(H, mu)
    m = H.carrier.size
    ones = (ONE,) * m
    for g in range(H.carrier.n_sorts):
        prod = _both(H.cells, m, ones, g, vec)
        r = _exceeds(prod, vec)
        if r is not None:
            return fail((), (("gamma", g),), r, prod[r], vec[r])
    return PASS


def right_ideal_via_M(H: FuzzyGammaHyperop, mu: FuzzySubset) -> CheckReport:
    vec = _own(H, mu)
    m = H.carrier.size
    ones = (ONE,) * m
    for g in range(H.carrier.n_sorts):
        prod = _both(H.cells, m, vec, g, ones)
        r = _exceeds(prod, vec)
        if r is not None:
            return fail((), (("gamma", g),), r, prod[r], vec[r])
    return PASS


def _require_nonzero(mu: FuzzySubset):
    if mu.is_zero():
        raise StructureError("the generating fuzzy subset must be nonzero")


def generate_left_ideal(H: FuzzyGammaHyperop, mu: FuzzySubset) -> FuzzySubset:
    """Smallest left ideal containing ``μ``: ``μ ∪ ⋃_γ (χ_M∘γ∘μ)``.

    The join runs over every sort; with a single fixed sort the result need
    not be closed under the others (see :func:`generate_left_ideal_single_sort`).
    """
    _require_nonzero(mu)
    vec = _own(H, mu)
    m = H.carrier.size
    ones = (ONE,) * m
    out = list(vec)
    for g in range(H.carrier.n_sorts):
        prod = _both(H.cells, m, ones, g, vec)
        out = [x if x >= y else y for x, y in zip(out, prod)]
    return FuzzySubset._trusted(H.carrier, tuple(out))


def generate_left_ideal_single_sort(H: FuzzyGammaHyperop, mu: FuzzySubset, g: int) -> FuzzySubset:
    """``μ ∪ (χ_M∘γ∘μ)`` for one fixed sort.  Matches the all-sort closure when |Γ| = 1."""
    _require_nonzero(mu)
    H.carrier.check_sort(g)
    vec = _own(H, mu)
    m = H.carrier.size
    prod = _both(H.cells, m, (ONE,) * m, g, vec)
    return union(mu, FuzzySubset._trusted(H.carrier, prod))


def generate_right_ideal(H: FuzzyGammaHyperop, mu: FuzzySubset) -> FuzzySubset:
    _require_nonzero(mu)
    vec = _own(H, mu)
    m = H.carrier.size
    ones = (ONE,) * m
    out = list(vec)
    for g in range(H.carrier.n_sorts):
        prod = _both(H.cells, m, vec, g, ones)
        out = [x if x >= y else y for x, y in zip(out, prod)]
    return FuzzySubset._trusted(H.carrier, tuple(out))


def _sandwich(H: FuzzyGammaHyperop, left: tuple, alpha: int, middle: tuple, beta: int, right: tuple) -> tuple:
    m = H.carrier.size
    return _both(H.cells, m, _both(H.cells, m, left, alpha, middle), beta, right)


def is_bi_ideal(H: FuzzyGammaHyperop, mu: FuzzySubset) -> CheckReport:
    """Sub-hypersemigroup with ``μ∘α∘y∘β∘μ <= μ`` for all y, α, β."""
    report = is_sub_hypersemigroup(H, mu)
    if not report:
        w = report.witness
        return fail(w.elements, w.sorts, w.point, w.left, w.right, "not a sub-hypersemigroup")
    vec = mu.grades
    m, k = H.carrier.size, H.carrier.n_sorts
    for y in range(m):
        point = tuple(ONE if t == y else ZERO for t in range(m))
        for alpha in range(k):
            for beta in range(k):
                prod = _sandwich(H, vec, alpha, point, beta, vec)
                r = _exceeds(prod, vec)
                if r is not None:
                    return fail((("y", y),), (("alpha", alpha), ("beta", beta)), r, prod[r], vec[r])
    return PASS


def bi_ideal_via_M(H: FuzzyGammaHyperop, mu: FuzzySubset) -> CheckReport:
    """``μ∘α∘χ_M∘β∘μ <= μ`` for all α, β (sub-hypersemigroup assumed)."""
    vec = _own(H, mu)
    m, k = H.carrier.size, H.carrier.n_sorts
    ones = (ONE,) * m
    for alpha in range(k):
        for beta in range(k):
            prod = _sandwich(H, vec, alpha, ones, beta, vec)
            r = _exceeds(prod, vec)
            if r is not None:
                return fail((), (("alpha", alpha), ("beta", beta)), r, prod[r], vec[r])
    return PASS


def is_interior_ideal(H: FuzzyGammaHyperop, mu: FuzzySubset) -> CheckReport:
    """``χ_x∘α∘μ∘β∘χ_y <= μ`` for all x, y, α, β."""
    vec = _own(H, mu)
    m, k = H.carrier.size, H.carrier.n_sorts
    points = [tuple(ONE if t == x else ZERO for t in range(m)) for x in range(m)]
    for x in range(m):
        for y in range(m):
            for alpha in range(k):
                for beta in range(k):
                    prod = _sandwich(H, points[x], alpha, vec, beta, points[y])
                    r = _exceeds(prod, vec)
                    if r is not None:
                        return fail((("x", x), ("y", y)), (("alpha", alpha), ("beta", beta)), r, prod[r], vec[r])
    return PASS


def interior_ideal_via_M(H: FuzzyGammaHyperop, mu: FuzzySubset) -> CheckReport:
    """``χ_M∘α∘μ∘β∘χ_M <= μ`` for all α, β."""
    vec = _own(H, mu)
    m, k = H.carrier.size, H.carrier.n_sorts
    ones = (ONE,) * m
    for alpha in range(k):
        for beta in range(k):
            prod = _sandwich(H, ones, alpha, vec, beta, ones)
            r = _exceeds(prod, vec)
            if r is not None:
                return fail((), (("alpha", alpha), ("beta", beta)), r, prod[r], vec[r])
    return PASS


def ideal_products_are_bi_ideals(H: FuzzyGammaHyperop, mu: FuzzySubset, nu: FuzzySubset) -> CheckReport:
    """For a bi-ideal ``ν``, both ``μ∘γ∘ν`` and ``ν∘γ∘μ`` are bi-ideals for every γ.

    A negative verdict points at an implementation bug, not at the inputs.
    """
    a, b = _own(H, mu), _own(H, nu)
    m = H.carrier.size
    for g in range(H.carrier.n_sorts):
        for side, vec in (("μγν", _both(H.cells, m, a, g, b)), ("νγμ", _both(H.cells, m, b, g, a))):
            report = is_bi_ideal(H, FuzzySubset._trusted(H.carrier, vec))
            if not report:
                w = report.witness
                return fail(w.elements, (("gamma", g),) + w.sorts, w.point, w.left, w.right, f"{side} is not a bi-ideal")
    return PASS
