"""Crisp Γ-hyperoperations and p-cuts of fuzzy ones.

The statement "for every p in [0, 1]" is decided on the finite grid
``distinct_grades(H)``: a cut only changes when ``p`` crosses a grade that
actually occurs in the table, and ``p = 0`` always yields the total
hyperoperation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .carrier import Carrier, CarrierMismatch, CrispSubset, FuzzySubset
from .grades import ONE, ZERO, Grade, GradeLike, as_grade
from .hyperop import PASS, CheckReport, FuzzyGammaHyperop, StructureError, _left, fail, is_associative


@dataclass(frozen=True, eq=False)
class CrispGammaHyperop:
    """A map ``M × Γ × M -> P(M)`` stored as ``cells[a][g][b] -> frozenset``.

    Empty cells are allowed; ``partial`` reports whether any occur.
    """

    carrier: Carrier
    cells: tuple

    def __post_init__(self):
        c = self.carrier
        m, k = c.size, c.n_sorts
        try:
            if len(self.cells) != m or any(len(row) != k for row in self.cells):
                raise StructureError("crisp table does not match the carrier shape")
            cells = []
            for a in range(m):
                per_sort = []
                for g in range(k):
                    if len(self.cells[a][g]) != m:
                        raise StructureError(f"row ({a},{g}) has wrong length")
                    per_b = []
                    for b in range(m):
                        cell = self.cells[a][g][b]
                        if isinstance(cell, CrispSubset):
                            cell = cell.members
                        cell = frozenset(cell)
                        if any(not (isinstance(x, int) and 0 <= x < m) for x in cell):
                            raise StructureError(f"cell ({a},{g},{b}) has members outside the carrier")
                        per_b.append(cell)
                    per_sort.append(tuple(per_b))
                cells.append(tuple(per_sort))
        except TypeError as exc:
            raise StructureError(f"malformed crisp table: {exc}") from None
        object.__setattr__(self, "cells", tuple(cells))

    @classmethod
    def from_function(cls, carrier: Carrier, fn: Callable[[int, int, int], Iterable[int]]):
        m, k = carrier.size, carrier.n_sorts
        return cls(carrier, tuple(
            tuple(tuple(frozenset(fn(a, g, b)) for b in range(m)) for g in range(k)) for a in range(m)
        ))

    @property
    def partial(self) -> bool:
        return any(not cell for row in self.cells for per_sort in row for cell in per_sort)

    def is_single_valued(self) -> bool:
        return all(len(cell) == 1 for row in self.cells for per_sort in row for cell in per_sort)

    def cell(self, a: int, g: int, b: int) -> CrispSubset:
        return CrispSubset(self.carrier, self.cells[a][g][b])

    def __eq__(self, other):
        if not isinstance(other, CrispGammaHyperop):
            return NotImplemented
        return self.carrier == other.carrier and self.cells == other.cells

    def __hash__(self):
        return hash((self.carrier, self.cells))

    def __repr__(self):
        return f"CrispGammaHyperop(M={list(self.carrier.elements)}, Γ={list(self.carrier.sorts)})"


def cut_subset(mu: FuzzySubset, p: GradeLike) -> CrispSubset:
    p = as_grade(p)
    return CrispSubset(mu.carrier, frozenset(t for t, g in enumerate(mu.grades) if g >= p))


def cut_structure(H: FuzzyGammaHyperop, p: GradeLike) -> CrispGammaHyperop:
    p = as_grade(p)
    return CrispGammaHyperop.from_function(
        H.carrier, lambda a, g, b: (t for t, x in enumerate(H.cells[a][g][b]) if x >= p)
    )


def crisp_product(K: CrispGammaHyperop, A: CrispSubset, g: int, B: CrispSubset) -> CrispSubset:
    """``AγB``: the union of ``aγb`` over ``a ∈ A, b ∈ B``."""
    if A.carrier != K.carrier or B.carrier != K.carrier:
        raise CarrierMismatch("subsets and structure have different carriers")
    K.carrier.check_sort(g)
    out: set[int] = set()
    for a in A.members:
        row = K.cells[a][g]
        for b in B.members:
            out |= row[b]
    return CrispSubset(K.carrier, frozenset(out))


def crisp_is_associative(K: CrispGammaHyperop) -> CheckReport:
    """``∪_{u ∈ xαy} uβz = ∪_{v ∈ yβz} xαv`` for all x, α, y, β, z."""
    cells, m, k = K.cells, K.carrier.size, K.carrier.n_sorts
    for x in range(m):
        for alpha in range(k):
            for y in range(m):
                xy = cells[x][alpha][y]
                for beta in range(k):
                    for z in range(m):
                        lhs = set()
                        for u in xy:
                            lhs |= cells[u][beta][z]
                        rhs = set()
                        for v in cells[y][beta][z]:
                            rhs |= cells[x][alpha][v]
                        if lhs != rhs:
                            r = min(lhs ^ rhs)
                            return fail(
                                (("a", x), ("b", y), ("c", z)),
                                (("alpha", alpha), ("beta", beta)),
                                r, ONE if r in lhs else ZERO, ONE if r in rhs else ZERO,
                            )
    return PASS


def distinct_grades(H: FuzzyGammaHyperop) -> tuple[Grade, ...]:
    """Sorted nonzero grades occurring in the table, with 1 always included."""
    return tuple(sorted((H.grades() - {ZERO}) | {ONE}))


def verify_cut_equivalence(H: FuzzyGammaHyperop) -> CheckReport:
    """Fuzzy associativity agrees with associativity of every cut.

    A negative verdict means one of the two checks is wrong.
    """
    fuzzy_side = bool(is_associative(H))
    failing = [p for p in distinct_grades(H) if not crisp_is_associative(cut_structure(H, p))]
    crisp_side = not failing
    details = (("fuzzy", fuzzy_side), ("crisp", crisp_side), ("failing_cuts", tuple(failing)))
    if fuzzy_side == crisp_side:
        return CheckReport(True, None, details)
    return fail(note=f"fuzzy associative={fuzzy_side}, all cuts associative={crisp_side}", details=details)


def verify_cut_membership(H: FuzzyGammaHyperop) -> CheckReport:
    """``(a∘α∘(b∘β∘c))(u) >= p`` iff ``u ∈ a ∘p α ∘p (b ∘p β ∘p c)``, exhaustively."""
    cells, m, k = H.cells, H.carrier.size, H.carrier.n_sorts
    grid = distinct_grades(H)
    cuts = {p: cut_structure(H, p) for p in grid}
    for a in range(m):
        for alpha in range(k):
            for b in range(m):
                for beta in range(k):
                    for c in range(m):
                        grade = _left(cells, m, a, alpha, cells[b][beta][c])
                        for p in grid:
                            K = cuts[p].cells
                            inner = K[b][beta][c]
                            crisp = set()
                            for v in inner:
                                crisp |= K[a][alpha][v]
                            for u in range(m):
                                if (grade[u] >= p) != (u in crisp):
                                    return fail(
                                        (("a", a), ("b", b), ("c", c)),
                                        (("alpha", alpha), ("beta", beta)),
                                        u, grade[u], p, note="membership mismatch",
                                    )
    return PASS


def verify_reproduction_cut(H: FuzzyGammaHyperop, x: int, g: int) -> CheckReport:
    """``x∘γ∘M = χ_M`` iff ``x ∘p γ ∘p M = M`` for every p."""
    H.carrier.check_element(x)
    H.carrier.check_sort(g)
    m = H.carrier.size
    ones = (ONE,) * m
    fuzzy_side = _left(H.cells, m, x, g, ones) == ones
    everything = frozenset(range(m))
    crisp_side = True
    for p in distinct_grades(H):
        K = cut_structure(H, p)
        covered = frozenset().union(*(K.cells[x][g][u] for u in range(m)))
        if covered != everything:
            crisp_side = False
            break
    details = (("fuzzy", fuzzy_side), ("crisp", crisp_side))
    if fuzzy_side == crisp_side:
        return CheckReport(True, None, details)
    return fail((("x", x),), (("gamma", g),), note="reproduction sides disagree", details=details)
