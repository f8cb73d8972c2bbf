"""Passing between crisp and fuzzy Γ-hyperoperations, and homomorphisms.

``psi`` takes supports cellwise and ``phi`` takes characteristic functions
cellwise.  Homomorphisms share the sort set between source and target.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .carrier import Carrier, CarrierMismatch, FuzzySubset
from .cuts import CrispGammaHyperop
from .grades import ONE, ZERO
from .hyperop import PASS, CheckReport, FuzzyGammaHyperop, StructureError, fail


@dataclass(frozen=True)
class CarrierMap:
    source: Carrier
    target: Carrier
    assignment: tuple[int, ...]

    def __post_init__(self):
        if self.source.sorts != self.target.sorts:
            raise CarrierMismatch("source and target must share the sort set")
        assignment = tuple(self.assignment)
        if len(assignment) != self.source.size:
            raise ValueError(f"map must assign all {self.source.size} source elements")
        for x in assignment:
            self.target.check_element(x)
        object.__setattr__(self, "assignment", assignment)

    @classmethod
    def from_labels(cls, source: Carrier, target: Carrier, mapping: Mapping[str, str]) -> "CarrierMap":
        missing = [e for e in source.elements if e not in mapping]
        if missing:
            raise ValueError(f"map is not total: no image for {missing}")
        extra = [k for k in mapping if k not in source.elements]
        if extra:
            raise ValueError(f"map mentions unknown source elements {extra}")
        return cls(source, target, tuple(target.index(mapping[e]) for e in source.elements))

    @classmethod
    def identity(cls, carrier: Carrier) -> "CarrierMap":
        return cls(carrier, carrier, tuple(range(carrier.size)))

    def __call__(self, a: int) -> int:
        return self.assignment[a]

    def then(self, other: "CarrierMap") -> "CarrierMap":
        """``other ∘ self``."""
        if other.source != self.target:
            raise CarrierMismatch("maps are not composable")
        return CarrierMap(self.source, other.target, tuple(other.assignment[x] for x in self.assignment))


def psi(H: FuzzyGammaHyperop) -> CrispGammaHyperop:
    """Cellwise support: ``a∗γ∗b = {x : (a∘γ∘b)(x) > 0}``."""
    m = H.carrier.size
    cells = tuple(
        tuple(tuple(frozenset(x for x in range(m) if cell[x] > 0) for cell in per_sort) for per_sort in row)
        for row in H.cells
    )
    for a, row in enumerate(cells):
        for g, per_sort in enumerate(row):
            for b, cell in enumerate(per_sort):
                if not cell:
                    c = H.carrier
                    raise StructureError(
                        f"cell ({c.elements[a]},{c.sorts[g]},{c.elements[b]}) has empty support"
                    )
    return CrispGammaHyperop(H.carrier, cells)


def phi(K: CrispGammaHyperop) -> FuzzyGammaHyperop:
    """Cellwise characteristic function: ``a∘γ∘b = χ_{a∗γ∗b}``."""
    if K.partial:
        raise StructureError("phi needs a crisp structure without empty cells")
    m = K.carrier.size
    return FuzzyGammaHyperop.from_function(
        K.carrier, lambda a, g, b: tuple(ONE if x in K.cells[a][g][b] else ZERO for x in range(m))
    )


def image_fuzzy(f: CarrierMap, mu: FuzzySubset) -> FuzzySubset:
    """``f(μ)(t) = sup {μ(r) : f(r) = t}``, and 0 off the image."""
    if mu.carrier != f.source:
        raise CarrierMismatch("fuzzy subset is not over the map's source")
    out = [ZERO] * f.target.size
    for r, grade in enumerate(mu.grades):
        t = f.assignment[r]
        if grade > out[t]:
            out[t] = grade
    return FuzzySubset._trusted(f.target, tuple(out))


def _check_ends(f: CarrierMap, first, second):
    if first.carrier != f.source or second.carrier != f.target:
        raise CarrierMismatch("structures do not sit over the map's source and target")


def is_fuzzy_homomorphism(f: CarrierMap, H1: FuzzyGammaHyperop, H2: FuzzyGammaHyperop) -> CheckReport:
    """``f(a∘γ∘b) <= f(a)∘γ∘f(b)`` for all a, b, γ."""
    _check_ends(f, H1, H2)
    m1 = f.source.size
    for a in range(m1):
        for g in range(f.source.n_sorts):
            for b in range(m1):
                image = image_fuzzy(f, H1.cell(a, g, b)).grades
                target = H2.cells[f(a)][g][f(b)]
                for t, (x, y) in enumerate(zip(image, target)):
                    if x > y:
                        return fail((("a", a), ("b", b)), (("gamma", g),), t, x, y)
    return PASS


def is_crisp_homomorphism(f: CarrierMap, K1: CrispGammaHyperop, K2: CrispGammaHyperop) -> CheckReport:
    """``f(a∗γ∗b) ⊆ f(a)∗γ∗f(b)`` for all a, b, γ."""
    _check_ends(f, K1, K2)
    m1 = f.source.size
    for a in range(m1):
        for g in range(f.source.n_sorts):
            for b in range(m1):
                target = K2.cells[f(a)][g][f(b)]
                for x in sorted(K1.cells[a][g][b]):
                    if f(x) not in target:
                        return fail((("a", a), ("b", b)), (("gamma", g),), None, note=f"image of {f.source.elements[x]} missing")
    return PASS


def crisp_from_labels(carrier: Carrier, table: Mapping[tuple[str, str, str], Sequence[str]]) -> CrispGammaHyperop:
    """Build a crisp structure from ``{(a, γ, b): [labels]}``."""
    def cell(a, g, b):
        key = (carrier.elements[a], carrier.sorts[g], carrier.elements[b])
        return (carrier.index(x) for x in table[key])

    return CrispGammaHyperop.from_function(carrier, cell)
