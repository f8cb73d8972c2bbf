"""Fuzzy Γ-hyperoperations and the sup-min composition calculus.

A structure is stored as a dense table ``cells[a][g][b]`` whose entries are
grade tuples indexed by the carrier.  The public composition functions take
and return :class:`FuzzySubset`; the ``_left``/``_right``/``_both`` helpers
work on raw grade tuples and are shared with the other modules.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence, Union

from .carrier import Carrier, CarrierMismatch, FuzzySubset, _same_carrier
from .grades import ONE, ZERO, Grade, as_grade


class StructureError(ValueError):
    """A table or construction input violates its contract."""


@dataclass(frozen=True)
class Witness:
    """The first violating instance found by a check.

    ``elements`` and ``sorts`` are ordered ``(name, index)`` pairs; ``point``
    is the evaluation point ``r`` and ``left``/``right`` the two grades that
    should have been equal (or ordered).
    """

    elements: tuple[tuple[str, int], ...] = ()
    sorts: tuple[tuple[str, int], ...] = ()
    point: int | None = None
    left: Grade | None = None
    right: Grade | None = None
    note: str = ""

    def element(self, name: str) -> int:
        return dict(self.elements)[name]

    def sort(self, name: str) -> int:
        return dict(self.sorts)[name]

    def describe(self, carrier: Carrier | None = None) -> str:
        def el(i):
            return carrier.elements[i] if carrier is not None else str(i)

        def so(i):
            return carrier.sorts[i] if carrier is not None else str(i)

        parts = [f"{n}={el(i)}" for n, i in self.elements]
        parts += [f"{n}={so(i)}" for n, i in self.sorts]
        text = " ".join(parts)
        if self.point is not None:
            text += f" at r={el(self.point)}"
        if self.left is not None or self.right is not None:
            text += f": {self.left} vs {self.right}"
        if self.note:
            text = f"{text} ({self.note})" if text else self.note
        return text


@dataclass(frozen=True)
class CheckReport:
    verdict: bool
    witness: Witness | None = None
    details: tuple[tuple[str, object], ...] = ()

    def __post_init__(self):
        if self.verdict == (self.witness is not None):
            raise ValueError("a failed check carries a witness and a passed one does not")

    def __bool__(self):
        return self.verdict

    def detail(self, key: str):
        return dict(self.details)[key]


PASS = CheckReport(True)


def fail(elements=(), sorts=(), point=None, left=None, right=None, note="", details=()) -> CheckReport:
    return CheckReport(False, Witness(tuple(elements), tuple(sorts), point, left, right, note), tuple(details))


CellValue = Union[FuzzySubset, Sequence]


@dataclass(frozen=True, eq=False)
class FuzzyGammaHyperop:
    """A total map ``M × Γ × M -> F(M)``.

    ``proper=True`` (the default) rejects zero cells; ``proper=None`` infers
    the flag from the table.
    """

    carrier: Carrier
    cells: tuple
    proper: bool | None = True

    def __post_init__(self):
        c = self.carrier
        m, k = c.size, c.n_sorts
        rows = []
        try:
            if len(self.cells) != m:
                raise StructureError(f"table has {len(self.cells)} rows, expected {m}")
            for a in range(m):
                if len(self.cells[a]) != k:
                    raise StructureError(f"row {a} has {len(self.cells[a])} sorts, expected {k}")
                per_sort = []
                for g in range(k):
                    if len(self.cells[a][g]) != m:
                        raise StructureError(f"row ({a},{g}) has wrong length")
                    per_b = []
                    for b in range(m):
                        per_b.append(_grade_tuple(c, self.cells[a][g][b], (a, g, b)))
                    per_sort.append(tuple(per_b))
                rows.append(tuple(per_sort))
        except TypeError as exc:
            raise StructureError(f"malformed table: {exc}") from None
        cells = tuple(rows)
        object.__setattr__(self, "cells", cells)
        has_zero = any(not any(cell) for row in cells for per_sort in row for cell in per_sort)
        if self.proper is None:
            object.__setattr__(self, "proper", not has_zero)
        elif self.proper and has_zero:
            a, g, b = next(
                (a, g, b)
                for a in range(m) for g in range(k) for b in range(m)
                if not any(cells[a][g][b])
            )
            raise StructureError(
                f"cell ({c.elements[a]},{c.sorts[g]},{c.elements[b]}) is the zero fuzzy subset"
            )

    @classmethod
    def from_function(cls, carrier: Carrier, fn: Callable[[int, int, int], CellValue], proper=True):
        m, k = carrier.size, carrier.n_sorts
        cells = tuple(
            tuple(tuple(fn(a, g, b) for b in range(m)) for g in range(k)) for a in range(m)
        )
        return cls(carrier, cells, proper)

    @classmethod
    def from_mapping(cls, carrier: Carrier, table: Mapping[tuple[int, int, int], CellValue], proper=True):
        def lookup(a, g, b):
            try:
                return table[(a, g, b)]
            except KeyError:
                raise StructureError(f"missing cell ({a},{g},{b})") from None

        return cls.from_function(carrier, lookup, proper)

    def cell(self, a: int, g: int, b: int) -> FuzzySubset:
        return FuzzySubset._trusted(self.carrier, self.cells[a][g][b])

    def grades(self) -> set[Grade]:
        return {x for row in self.cells for per_sort in row for cell in per_sort for x in cell}

    def is_crisp_valued(self) -> bool:
        return self.grades() <= {ZERO, ONE}

    def flat(self) -> tuple:
        """All grades in (a, g, b, t) lexicographic order."""
        return tuple(x for row in self.cells for per_sort in row for cell in per_sort for x in cell)

    def __eq__(self, other):
        if not isinstance(other, FuzzyGammaHyperop):
            return NotImplemented
        return self.carrier == other.carrier and self.cells == other.cells

    def __hash__(self):
        return hash((self.carrier, self.cells))

    def __repr__(self):
        return f"FuzzyGammaHyperop(M={list(self.carrier.elements)}, Γ={list(self.carrier.sorts)})"


def _grade_tuple(carrier: Carrier, value, where) -> tuple:
    if isinstance(value, FuzzySubset):
        if value.carrier != carrier:
            raise CarrierMismatch(f"cell {where} lives on a different carrier")
        return value.grades
    grades = tuple(as_grade(x) for x in value)
    if len(grades) != carrier.size:
        raise StructureError(f"cell {where} has {len(grades)} grades, expected {carrier.size}")
    return grades


# raw sup-min kernels over grade tuples


def _left(cells, m: int, a: int, g: int, vec: tuple) -> tuple:
    out = [ZERO] * m
    row = cells[a][g]
    for t in range(m):
        w = vec[t]
        if not w:
            continue
        cell = row[t]
        for r in range(m):
            v = cell[r]
            if v > w:
                v = w
            if v > out[r]:
                out[r] = v
    return tuple(out)


def _right(cells, m: int, vec: tuple, g: int, a: int) -> tuple:
    out = [ZERO] * m
    for t in range(m):
        w = vec[t]
        if not w:
            continue
        cell = cells[t][g][a]
        for r in range(m):
            v = cell[r]
            if v > w:
                v = w
            if v > out[r]:
                out[r] = v
    return tuple(out)


def _both(cells, m: int, mu: tuple, g: int, nu: tuple) -> tuple:
    out = [ZERO] * m
    qs = [(q, w) for q, w in enumerate(nu) if w]
    for p in range(m):
        wp = mu[p]
        if not wp:
            continue
        row = cells[p][g]
        for q, wq in qs:
            w = wp if wp <= wq else wq
            cell = row[q]
            for r in range(m):
                v = cell[r]
                if v > w:
                    v = w
                if v > out[r]:
                    out[r] = v
    return tuple(out)


def _check_indices(H: FuzzyGammaHyperop, *, elements=(), sorts=()):
    for a in elements:
        H.carrier.check_element(a)
    for g in sorts:
        H.carrier.check_sort(g)


def _own(H: FuzzyGammaHyperop, mu: FuzzySubset) -> tuple:
    if mu.carrier is not H.carrier and mu.carrier != H.carrier:
        raise CarrierMismatch("fuzzy subset and structure have different carriers")
    return mu.grades


def compose_elem(H: FuzzyGammaHyperop, a: int, g: int, b: int) -> FuzzySubset:
    _check_indices(H, elements=(a, b), sorts=(g,))
    return H.cell(a, g, b)


def compose_left(H: FuzzyGammaHyperop, a: int, g: int, mu: FuzzySubset) -> FuzzySubset:
    """``(a∘g∘μ)(r) = sup_t (a∘g∘t)(r) ∧ μ(t)``; zero when ``μ`` is zero."""
    _check_indices(H, elements=(a,), sorts=(g,))
    vec = _own(H, mu)
    if mu.is_zero():
        return H.carrier.zero()
    return FuzzySubset._trusted(H.carrier, _left(H.cells, H.carrier.size, a, g, vec))


def compose_right(H: FuzzyGammaHyperop, mu: FuzzySubset, g: int, a: int) -> FuzzySubset:
    """``(μ∘g∘a)(r) = sup_t μ(t) ∧ (t∘g∘a)(r)``; zero when ``μ`` is zero."""
    _check_indices(H, elements=(a,), sorts=(g,))
    vec = _own(H, mu)
    if mu.is_zero():
        return H.carrier.zero()
    return FuzzySubset._trusted(H.carrier, _right(H.cells, H.carrier.size, vec, g, a))


def compose_fuzzy(H: FuzzyGammaHyperop, mu: FuzzySubset, g: int, nu: FuzzySubset) -> FuzzySubset:
    """``(μ∘g∘ν)(t) = sup_{p,q} μ(p) ∧ (p∘g∘q)(t) ∧ ν(q)``."""
    _check_indices(H, sorts=(g,))
    _same_carrier(mu, nu)
    return FuzzySubset._trusted(H.carrier, _both(H.cells, H.carrier.size, _own(H, mu), g, _own(H, nu)))


def compose_many(H: FuzzyGammaHyperop, factors: Sequence) -> FuzzySubset:
    """Left fold of :func:`compose_fuzzy` over ``μ1, g1, μ2, g2, ..., μn``.

    Integers in fuzzy positions are taken as elements (their characteristic
    function).  Bracketing only matters when ``H`` is not associative.
    """
    if len(factors) < 3 or len(factors) % 2 == 0:
        raise ValueError("expected an alternating sequence subset, sort, subset, ... of odd length >= 3")

    def operand(x):
        if isinstance(x, FuzzySubset):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return H.carrier.point(x)
        raise ValueError(f"expected a fuzzy subset or element index, got {x!r}")

    acc = operand(factors[0])
    for i in range(1, len(factors), 2):
        g = factors[i]
        if not isinstance(g, int) or isinstance(g, bool):
            raise ValueError(f"expected a sort index at position {i}, got {g!r}")
        acc = compose_fuzzy(H, acc, g, operand(factors[i + 1]))
    return acc


def compose_many_right(H: FuzzyGammaHyperop, factors: Sequence) -> FuzzySubset:
    """Right fold counterpart of :func:`compose_many`."""
    if len(factors) < 3 or len(factors) % 2 == 0:
        raise ValueError("expected an alternating sequence subset, sort, subset, ... of odd length >= 3")
    acc = factors[-1]
    acc = acc if isinstance(acc, FuzzySubset) else H.carrier.point(acc)
    for i in range(len(factors) - 2, 0, -2):
        left = factors[i - 1]
        left = left if isinstance(left, FuzzySubset) else H.carrier.point(left)
        acc = compose_fuzzy(H, left, factors[i], acc)
    return acc


def _first_diff(x: tuple, y: tuple) -> int:
    return next(i for i, (u, v) in enumerate(zip(x, y)) if u != v)


def is_associative(H: FuzzyGammaHyperop) -> CheckReport:
    """``(a∘α∘b)∘β∘c = a∘α∘(b∘β∘c)`` pointwise, for all a, α, b, β, c."""
    cells, m, k = H.cells, H.carrier.size, H.carrier.n_sorts
    for a in range(m):
        for alpha in range(k):
            for b in range(m):
                ab = cells[a][alpha][b]
                for beta in range(k):
                    for c in range(m):
                        lhs = _right(cells, m, ab, beta, c)
                        rhs = _left(cells, m, a, alpha, cells[b][beta][c])
                        if lhs != rhs:
                            r = _first_diff(lhs, rhs)
                            return fail(
                                (("a", a), ("b", b), ("c", c)),
                                (("alpha", alpha), ("beta", beta)),
                                r, lhs[r], rhs[r],
                            )
    return PASS


def is_hypergroup(H: FuzzyGammaHyperop) -> CheckReport:
    """Associative and ``x∘γ∘M = M∘γ∘x = χ_M`` for every x and γ."""
    report = is_associative(H)
    if not report:
        return CheckReport(False, report.witness, (("associative", False),))
    cells, m, k = H.cells, H.carrier.size, H.carrier.n_sorts
    ones = (ONE,) * m
    for x in range(m):
        for g in range(k):
            left = _left(cells, m, x, g, ones)
            if left != ones:
                r = _first_diff(left, ones)
                return fail((("x", x),), (("gamma", g),), r, left[r], ONE, "x∘γ∘M", (("associative", True),))
            right = _right(cells, m, ones, g, x)
            if right != ones:
                r = _first_diff(right, ones)
                return fail((("x", x),), (("gamma", g),), r, right[r], ONE, "M∘γ∘x", (("associative", True),))
    return CheckReport(True, None, (("associative", True),))


def gamma_semigroup_report(op: Sequence) -> CheckReport:
    """Check that ``op[a][g][b]`` is a total, associative Γ-operation on ``range(len(op))``."""
    m = len(op)
    k = len(op[0]) if m else 0
    for a in range(m):
        for g in range(k):
            for b in range(m):
                if not 0 <= op[a][g][b] < m:
                    return fail((("a", a), ("b", b)), (("gamma", g),), note="product out of range")
    for a in range(m):
        for alpha in range(k):
            for b in range(m):
                ab = op[a][alpha][b]
                for beta in range(k):
                    for c in range(m):
                        if op[ab][beta][c] != op[a][alpha][op[b][beta][c]]:
                            return fail(
                                (("a", a), ("b", b), ("c", c)),
                                (("alpha", alpha), ("beta", beta)),
                                note="(aαb)βc != aα(bβc)",
                            )
    return PASS


def from_gamma_semigroup_and_fuzzy_sub(carrier: Carrier, op: Sequence, mu: FuzzySubset) -> FuzzyGammaHyperop:
    """Grade ``μ(a) ∧ μ(b)`` at ``aγb`` and 0 elsewhere.

    ``op`` must be an associative Γ-operation and ``μ`` a nonzero fuzzy
    Γ-subsemigroup (``μ(aγb) >= μ(a) ∧ μ(b)``).  Cells where ``μ(a) ∧ μ(b) = 0``
    are zero, so the result is proper only when ``μ`` is strictly positive.
    """
    m, k = carrier.size, carrier.n_sorts
    if len(op) != m or any(len(row) != k or any(len(r) != m for r in row) for row in op):
        raise StructureError("operation table does not match the carrier shape")
    if mu.carrier != carrier:
        raise CarrierMismatch("μ lives on a different carrier")
    if mu.is_zero():
        raise StructureError("μ must not be the zero fuzzy subset")
    report = gamma_semigroup_report(op)
    if not report:
        raise StructureError(f"operation is not a Γ-semigroup: {report.witness.describe(carrier)}")
    for a in range(m):
        for g in range(k):
            for b in range(m):
                if mu[op[a][g][b]] < min(mu[a], mu[b]):
                    raise StructureError(
                        f"μ is not a fuzzy Γ-subsemigroup at "
                        f"({carrier.elements[a]},{carrier.sorts[g]},{carrier.elements[b]})"
                    )

    def cell(a, g, b):
        w = min(mu[a], mu[b])
        t = op[a][g][b]
        return tuple(w if r == t else ZERO for r in range(m))

    return FuzzyGammaHyperop.from_function(carrier, cell, proper=None)
