"""Named structure families used as fixtures and worked examples."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .carrier import Carrier, CrispSubset, characteristic
from .grades import ZERO, as_grade
from .hyperop import FuzzyGammaHyperop

BOTTOM = "-inf"


def _sorts(sorts) -> tuple[str, ...]:
    if isinstance(sorts, int):
        return ("g",) if sorts == 1 else tuple(f"g{i}" for i in range(sorts))
    return tuple(sorts)


def pair_union(m: int = 3, sorts=1) -> FuzzyGammaHyperop:
    """``a∘γ∘b = χ_{a,b}`` on ``{0..m-1}``."""
    carrier = Carrier(tuple(str(i) for i in range(m)), _sorts(sorts))
    return FuzzyGammaHyperop.from_function(
        carrier, lambda a, g, b: characteristic(CrispSubset(carrier, frozenset((a, b))))
    )


def max_structure(n: int = 2, sorts=1, bottom: str | None = None) -> FuzzyGammaHyperop:
    """``a∘γ∘b = χ_{max(a,b)}`` on ``{0..n}``.

    ``bottom`` adds a least element ``-inf``: ``"least"`` lets it act as an
    identity under max, ``"absorbing"`` makes ``-inf∘γ∘a = a∘γ∘-inf = χ_{-inf}``.
    """
    if bottom not in (None, "least", "absorbing"):
        raise ValueError(f"bottom must be None, 'least' or 'absorbing', not {bottom!r}")
    values: list[float] = ([float("-inf")] if bottom else []) + list(range(n + 1))
    labels = [BOTTOM if v == float("-inf") else str(v) for v in values]
    carrier = Carrier(tuple(labels), _sorts(sorts))
    index = {v: i for i, v in enumerate(values)}

    def cell(a, g, b):
        x, y = values[a], values[b]
        if bottom == "absorbing" and float("-inf") in (x, y):
            t = index[float("-inf")]
        else:
            t = index[max(x, y)]
        return carrier.point(t)

    return FuzzyGammaHyperop.from_function(carrier, cell)


def truncated_sum(n: int = 2, sorts=1, grade=Fraction(1, 2), bottom: bool = False) -> FuzzyGammaHyperop:
    """Grade ``grade`` at ``min(a+b, n)`` and 0 elsewhere, on ``{0..n}``.

    With ``bottom=True`` a ``-inf`` element is added; it absorbs under ``+``.
    """
    w = as_grade(grade)
    values: list[float] = ([float("-inf")] if bottom else []) + list(range(n + 1))
    labels = [BOTTOM if v == float("-inf") else str(v) for v in values]
    carrier = Carrier(tuple(labels), _sorts(sorts))
    index = {v: i for i, v in enumerate(values)}

    def cell(a, g, b):
        t = index[min(values[a] + values[b], n)]
        return tuple(w if r == t else ZERO for r in range(len(values)))

    return FuzzyGammaHyperop.from_function(carrier, cell)


def subset_union(base: int = 2, sorts=1, grade=Fraction(1, 3)) -> FuzzyGammaHyperop:
    """Carrier: nonempty subsets of ``{0..base-1}``; ``(A∘γ∘B)(C) = grade`` iff ``C ⊆ A ∪ B``.

    Subsets are labelled by their digits, e.g. ``"01"``.
    """
    w = as_grade(grade)
    subsets = [frozenset(c) for k in range(1, base + 1) for c in combinations(range(base), k)]
    labels = ["".join(str(x) for x in sorted(s)) for s in subsets]
    carrier = Carrier(tuple(labels), _sorts(sorts))

    def cell(a, g, b):
        u = subsets[a] | subsets[b]
        return tuple(w if c <= u else ZERO for c in subsets)

    return FuzzyGammaHyperop.from_function(carrier, cell)


def cyclic_group(n: int = 3, shifts=(0,)) -> FuzzyGammaHyperop:
    """Characteristic image of the Γ-group ``aγb = a + s_γ + b (mod n)``."""
    sorts = tuple(f"s{s}" for s in shifts)
    carrier = Carrier(tuple(str(i) for i in range(n)), sorts)
    return FuzzyGammaHyperop.from_function(
        carrier, lambda a, g, b: carrier.point((a + shifts[g] + b) % n)
    )


def gamma_semigroup_table(carrier: Carrier, fn) -> list:
    """Tabulate ``fn(a, g, b) -> index`` as ``op[a][g][b]``."""
    m, k = carrier.size, carrier.n_sorts
    return [[[fn(a, g, b) for b in range(m)] for g in range(k)] for a in range(m)]


def max_gamma_semigroup(n: int = 2, sorts=1) -> tuple[Carrier, list]:
    carrier = Carrier(tuple(str(i) for i in range(n + 1)), _sorts(sorts))
    return carrier, gamma_semigroup_table(carrier, lambda a, g, b: max(a, b))


FIXTURES = {
    "pair_union": lambda: pair_union(3),
    "max": lambda: max_structure(2),
    "max_least": lambda: max_structure(2, bottom="least"),
    "max_absorbing": lambda: max_structure(2, bottom="absorbing"),
    "truncated_sum": lambda: truncated_sum(2),
    "subset_union": lambda: subset_union(2),
    "cyclic_group": lambda: cyclic_group(3),
}

__all__ = [
    "BOTTOM", "FIXTURES", "cyclic_group", "gamma_semigroup_table",
    "max_gamma_semigroup", "max_structure", "pair_union", "subset_union", "truncated_sum",
]
