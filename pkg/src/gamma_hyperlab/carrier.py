"""Finite carriers ``M`` and ``Γ`` with fuzzy and crisp subsets of ``M``."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .grades import ONE, ZERO, Grade, GradeLike, as_grade


class CarrierMismatch(ValueError):
    """Raised when two objects that must share a carrier do not."""


@dataclass(frozen=True)
class Carrier:
    """The element set ``M`` and the sort set ``Γ``, each with stable indices."""

    elements: tuple[str, ...]
    sorts: tuple[str, ...] = ("g",)
    _element_index: dict = field(init=False, repr=False, compare=False, hash=False)
    _sort_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        sorts = tuple(str(s) for s in self.sorts)
        if not elements:
            raise ValueError("carrier needs at least one element")
        if not sorts:
            raise ValueError("carrier needs at least one sort")
        if len(set(elements)) != len(elements):
            raise ValueError(f"duplicate element label in {elements}")
        if len(set(sorts)) != len(sorts):
            raise ValueError(f"duplicate sort label in {sorts}")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "sorts", sorts)
        object.__setattr__(self, "_element_index", {e: i for i, e in enumerate(elements)})
        object.__setattr__(self, "_sort_index", {s: i for i, s in enumerate(sorts)})

    @classmethod
    def of_size(cls, m: int, g: int = 1) -> "Carrier":
        """Elements ``"0".."m-1"``; sorts ``"g"`` for one sort, else ``"g0".."g{g-1}"``."""
        sorts = ("g",) if g == 1 else tuple(f"g{i}" for i in range(g))
        return cls(tuple(str(i) for i in range(m)), sorts)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def n_sorts(self) -> int:
        return len(self.sorts)

    def index(self, label) -> int:
        try:
            return self._element_index[str(label)]
        except KeyError:
            raise ValueError(f"unknown element {label!r}") from None

    def sort_index(self, label) -> int:
        try:
            return self._sort_index[str(label)]
        except KeyError:
            raise ValueError(f"unknown sort {label!r}") from None

    def check_element(self, a: int) -> int:
        if not 0 <= a < len(self.elements):
            raise IndexError(f"element index {a} out of range for |M|={len(self.elements)}")
        return a

    def check_sort(self, g: int) -> int:
        if not 0 <= g < len(self.sorts):
            raise IndexError(f"sort index {g} out of range for |Γ|={len(self.sorts)}")
        return g

    def zero(self) -> "FuzzySubset":
        return FuzzySubset(self, (ZERO,) * self.size)

    def full(self) -> "FuzzySubset":
        """The characteristic function of the whole carrier."""
        return FuzzySubset(self, (ONE,) * self.size)

    def point(self, a: int) -> "FuzzySubset":
        """The characteristic function of a single element."""
        return characteristic(CrispSubset(self, frozenset((self.check_element(a),))))


@dataclass(frozen=True)
class FuzzySubset:
    carrier: Carrier
    grades: tuple[Grade, ...]

    def __post_init__(self):
        grades = tuple(as_grade(g) for g in self.grades)
        if len(grades) != self.carrier.size:
            raise ValueError(f"expected {self.carrier.size} grades, got {len(grades)}")
        object.__setattr__(self, "grades", grades)

    @classmethod
    def from_mapping(cls, carrier: Carrier, grades: Mapping[str, GradeLike]) -> "FuzzySubset":
        """Build from ``{label: grade}``; missing labels get grade 0."""
        values = [ZERO] * carrier.size
        for label, g in grades.items():
            values[carrier.index(label)] = as_grade(g)
        return cls(carrier, tuple(values))

    @classmethod
    def _trusted(cls, carrier: Carrier, grades: tuple) -> "FuzzySubset":
        # skips validation; grades must already be a tuple of Grade
        obj = object.__new__(cls)
        object.__setattr__(obj, "carrier", carrier)
        object.__setattr__(obj, "grades", grades)
        return obj

    def __getitem__(self, a: int) -> Grade:
        return self.grades[a]

    def __iter__(self):
        return iter(self.grades)

    def __len__(self):
        return len(self.grades)

    def is_zero(self) -> bool:
        return not any(self.grades)

    def height(self) -> Grade:
        return max(self.grades)

    def __str__(self):
        parts = [f"{e}:{g}" for e, g in zip(self.carrier.elements, self.grades) if g]
        return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class CrispSubset:
    carrier: Carrier
    members: frozenset[int] = frozenset()

    def __post_init__(self):
        members = frozenset(self.members)
        for a in members:
            self.carrier.check_element(a)
        object.__setattr__(self, "members", members)

    @classmethod
    def of_labels(cls, carrier: Carrier, labels: Iterable) -> "CrispSubset":
        return cls(carrier, frozenset(carrier.index(x) for x in labels))

    def __contains__(self, a) -> bool:
        return a in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def labels(self) -> list[str]:
        return [self.carrier.elements[a] for a in sorted(self.members)]

    def __str__(self):
        return "{" + ",".join(self.labels()) + "}"


def _same_carrier(x, y) -> Carrier:
    if x.carrier is not y.carrier and x.carrier != y.carrier:
        raise CarrierMismatch(f"carriers differ: {x.carrier.elements} vs {y.carrier.elements}")
    return x.carrier


def characteristic(s: CrispSubset) -> FuzzySubset:
    members = s.members
    return FuzzySubset._trusted(s.carrier, tuple(ONE if a in members else ZERO for a in range(s.carrier.size)))


def support(mu: FuzzySubset) -> CrispSubset:
    return CrispSubset(mu.carrier, frozenset(a for a, g in enumerate(mu.grades) if g > 0))


def leq(mu: FuzzySubset, nu: FuzzySubset) -> bool:
    _same_carrier(mu, nu)
    return all(x <= y for x, y in zip(mu.grades, nu.grades))


def union(mu: FuzzySubset, nu: FuzzySubset) -> FuzzySubset:
    c = _same_carrier(mu, nu)
    return FuzzySubset._trusted(c, tuple(max(x, y) for x, y in zip(mu.grades, nu.grades)))


def intersection(mu: FuzzySubset, nu: FuzzySubset) -> FuzzySubset:
    c = _same_carrier(mu, nu)
    return FuzzySubset._trusted(c, tuple(min(x, y) for x, y in zip(mu.grades, nu.grades)))


def fuzzy(carrier: Carrier, grades: Sequence[GradeLike]) -> FuzzySubset:
    """Shorthand: ``fuzzy(c, ["1/2", 0, 1])``."""
    return FuzzySubset(carrier, tuple(as_grade(g) for g in grades))
