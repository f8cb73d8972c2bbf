"""Equivalence relations, (strongly) regular relations and quotients.

Two fuzzy subsets are related through ``ρ`` when every support point of
each is ρ-related to some support point of the other, i.e. both supports
meet the same ρ-classes.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .carrier import Carrier, CarrierMismatch, CrispSubset, FuzzySubset, _same_carrier
from .cuts import CrispGammaHyperop, crisp_is_associative
from .grades import ZERO
from .hyperop import PASS, CheckReport, FuzzyGammaHyperop, fail
from .bridge import psi


class QuotientError(ValueError):
    """The relation does not induce a well-defined quotient hyperoperation."""

    def __init__(self, message: str, report: CheckReport):
        super().__init__(message)
        self.report = report


class NotStronglyRegularWarning(UserWarning):
    """A fuzzy quotient was built from a relation that is not strongly regular."""


@dataclass(frozen=True)
class EquivRelation:
    """A partition of the carrier.

    ``class_of[a]`` is the index of a's block; blocks are numbered in order
    of their smallest element.
    """

    carrier: Carrier
    class_of: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.class_of)
        if len(labels) != self.carrier.size:
            raise ValueError(f"class_of must have {self.carrier.size} entries")
        renumber: dict[int, int] = {}
        canonical = tuple(renumber.setdefault(x, len(renumber)) for x in labels)
        object.__setattr__(self, "class_of", canonical)

    @classmethod
    def from_blocks(cls, carrier: Carrier, blocks: Iterable[Iterable[int]]) -> "EquivRelation":
        class_of = [None] * carrier.size
        for i, block in enumerate(blocks):
            block = list(block)
            if not block:
                raise ValueError("blocks must be nonempty")
            for a in block:
                carrier.check_element(a)
                if class_of[a] is not None:
                    raise ValueError(f"element {carrier.elements[a]} appears in two blocks")
                class_of[a] = i
        missing = [carrier.elements[a] for a, c in enumerate(class_of) if c is None]
        if missing:
            raise ValueError(f"blocks do not cover {missing}")
        return cls(carrier, tuple(class_of))

    @classmethod
    def parse(cls, carrier: Carrier, text: str) -> "EquivRelation":
        """Parse block syntax over labels, e.g. ``"0,1|2"``."""
        blocks = []
        for chunk in text.split("|"):
            names = [x.strip() for x in chunk.split(",") if x.strip()]
            if not names:
                raise ValueError(f"empty block in relation {text!r}")
            blocks.append([carrier.index(x) for x in names])
        return cls.from_blocks(carrier, blocks)

    @classmethod
    def discrete(cls, carrier: Carrier) -> "EquivRelation":
        return cls(carrier, tuple(range(carrier.size)))

    @classmethod
    def universal(cls, carrier: Carrier) -> "EquivRelation":
        return cls(carrier, (0,) * carrier.size)

    @property
    def classes(self) -> tuple[CrispSubset, ...]:
        blocks: list[set[int]] = [set() for _ in range(max(self.class_of) + 1)]
        for a, c in enumerate(self.class_of):
            blocks[c].add(a)
        return tuple(CrispSubset(self.carrier, frozenset(b)) for b in blocks)

    @property
    def n_classes(self) -> int:
        return max(self.class_of) + 1

    def relates(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def class_labels(self) -> tuple[str, ...]:
        return tuple("~".join(block.labels()) for block in self.classes)

    def __str__(self):
        return "|".join(",".join(block.labels()) for block in self.classes)


def _check(H, rho: EquivRelation):
    if H.carrier != rho.carrier:
        raise CarrierMismatch("relation and structure have different carriers")


def _classes_met(rho: EquivRelation, vec: Sequence) -> frozenset[int]:
    return frozenset(rho.class_of[x] for x, g in enumerate(vec) if g > 0)


def rel_extends(rho: EquivRelation, mu: FuzzySubset, nu: FuzzySubset) -> bool:
    """``μ ρ ν``: both supports meet exactly the same ρ-classes."""
    _same_carrier(mu, nu)
    if mu.carrier != rho.carrier:
        raise CarrierMismatch("relation and fuzzy subsets have different carriers")
    return _classes_met(rho, mu.grades) == _classes_met(rho, nu.grades)


def _related_pairs(rho: EquivRelation):
    m = rho.carrier.size
    for a in range(m):
        for b in range(m):
            if a != b and rho.class_of[a] == rho.class_of[b]:
                yield a, b


def is_fuzzy_regular(H: FuzzyGammaHyperop, rho: EquivRelation) -> CheckReport:
    """``aρb`` implies ``(a∘γ∘c) ρ (b∘γ∘c)`` and ``(c∘γ∘a) ρ (c∘γ∘b)``."""
    _check(H, rho)
    cells, m, k = H.cells, H.carrier.size, H.carrier.n_sorts
    for a, b in _related_pairs(rho):
        for c in range(m):
            for g in range(k):
                if _classes_met(rho, cells[a][g][c]) != _classes_met(rho, cells[b][g][c]):
                    return fail((("a", a), ("b", b), ("c", c)), (("gamma", g),), note="a∘γ∘c vs b∘γ∘c")
                if _classes_met(rho, cells[c][g][a]) != _classes_met(rho, cells[c][g][b]):
                    return fail((("a", a), ("b", b), ("c", c)), (("gamma", g),), note="c∘γ∘a vs c∘γ∘b")
    return PASS


def is_fuzzy_regular_pairs(H: FuzzyGammaHyperop, rho: EquivRelation) -> CheckReport:
    """Two-sided form: ``aρa'`` and ``bρb'`` imply ``(a∘γ∘b) ρ (a'∘γ∘b')``."""
    _check(H, rho)
    cells, m, k = H.cells, H.carrier.size, H.carrier.n_sorts
    for a in range(m):
        for a2 in range(m):
            if not rho.relates(a, a2):
                continue
            for b in range(m):
                for b2 in range(m):
                    if not rho.relates(b, b2):
                        continue
                    for g in range(k):
                        if _classes_met(rho, cells[a][g][b]) != _classes_met(rho, cells[a2][g][b2]):
                            return fail(
                                (("a", a), ("a'", a2), ("b", b), ("b'", b2)), (("gamma", g),),
                                note="a∘γ∘b vs a'∘γ∘b'",
                            )
    return PASS


def is_fuzzy_strongly_regular(H: FuzzyGammaHyperop, rho: EquivRelation) -> CheckReport:
    """``aρb`` and ``cρd`` imply every support point of ``a∘γ∘c`` is
    ρ-related to every support point of ``b∘γ∘d``."""
    _check(H, rho)
    cells, m, k = H.cells, H.carrier.size, H.carrier.n_sorts
    supports = [[[tuple(x for x in range(m) if cells[a][g][b][x] > 0) for b in range(m)]
                 for g in range(k)] for a in range(m)]
    cls = rho.class_of
    for a in range(m):
        for b in range(m):
            if cls[a] != cls[b]:
                continue
            for c in range(m):
                for d in range(m):
                    if cls[c] != cls[d]:
                        continue
                    for g in range(k):
                        for x in supports[a][g][c]:
                            for y in supports[b][g][d]:
                                if cls[x] != cls[y]:
                                    return fail(
                                        (("a", a), ("b", b), ("c", c), ("d", d)), (("gamma", g),),
                                        note=f"{H.carrier.elements[x]} and {H.carrier.elements[y]} unrelated",
                                    )
    return PASS


def crisp_is_regular(K: CrispGammaHyperop, rho: EquivRelation) -> CheckReport:
    """``aρb`` implies ``aγc`` and ``bγc`` (likewise ``cγa``, ``cγb``) are
    related: each element of one has a ρ-mate in the other."""
    _check(K, rho)
    m, k = K.carrier.size, K.carrier.n_sorts

    def mates(X, Y):
        return all(any(rho.relates(x, y) for y in Y) for x in X) and all(
            any(rho.relates(y, x) for x in X) for y in Y
        )

    for a in range(m):
        for b in range(m):
            if not rho.relates(a, b):
                continue
            for c in range(m):
                for g in range(k):
                    if not mates(K.cells[a][g][c], K.cells[b][g][c]):
                        return fail((("a", a), ("b", b), ("c", c)), (("gamma", g),), note="aγc vs bγc")
                    if not mates(K.cells[c][g][a], K.cells[c][g][b]):
                        return fail((("a", a), ("b", b), ("c", c)), (("gamma", g),), note="cγa vs cγb")
    return PASS


def crisp_is_strongly_regular(K: CrispGammaHyperop, rho: EquivRelation) -> CheckReport:
    """``aρb`` implies ``xρy`` for all ``x ∈ aγc, y ∈ bγc`` and all ``x ∈ cγa, y ∈ cγb``."""
    _check(K, rho)
    m, k = K.carrier.size, K.carrier.n_sorts
    for a in range(m):
        for b in range(m):
            if not rho.relates(a, b):
                continue
            for c in range(m):
                for g in range(k):
                    for X, Y, side in ((K.cells[a][g][c], K.cells[b][g][c], "aγc vs bγc"),
                                       (K.cells[c][g][a], K.cells[c][g][b], "cγa vs cγb")):
                        for x in X:
                            for y in Y:
                                if not rho.relates(x, y):
                                    return fail((("a", a), ("b", b), ("c", c)), (("gamma", g),), note=side)
    return PASS


def _quotient_carrier(rho: EquivRelation) -> Carrier:
    return Carrier(rho.class_labels(), rho.carrier.sorts)


def quotient_crisp(H: FuzzyGammaHyperop, rho: EquivRelation) -> CrispGammaHyperop:
    """``Aγ⊗B = {classes meeting supp(a∘γ∘b)}``, checked to be independent of
    the representatives ``a ∈ A, b ∈ B``."""
    _check(H, rho)
    blocks = [sorted(block.members) for block in rho.classes]
    n, k = len(blocks), H.carrier.n_sorts
    table = []
    for A in range(n):
        per_sort = []
        for g in range(k):
            per_b = []
            for B in range(n):
                a0, b0 = blocks[A][0], blocks[B][0]
                met = _classes_met(rho, H.cells[a0][g][b0])
                for a in blocks[A]:
                    for b in blocks[B]:
                        other = _classes_met(rho, H.cells[a][g][b])
                        if other != met:
                            report = fail(
                                (("a", a0), ("b", b0), ("a'", a), ("b'", b)), (("gamma", g),),
                                note="quotient product depends on representatives",
                            )
                            raise QuotientError(
                                f"relation {rho} is not regular: {report.witness.describe(H.carrier)}", report
                            )
                per_b.append(met)
            per_sort.append(tuple(per_b))
        table.append(tuple(per_sort))
    return CrispGammaHyperop(_quotient_carrier(rho), tuple(table))


def quotient_fuzzy(H: FuzzyGammaHyperop, rho: EquivRelation, *, check: bool = True) -> FuzzyGammaHyperop:
    """``(A∗γ∗B)(C) = sup_{a∈A, b∈B, c∈C} (a∘γ∘b)(c)``.

    The formula is computed for any relation; with ``check`` a
    :class:`NotStronglyRegularWarning` is issued when ``ρ`` is not strongly
    regular, in which case the result need not be associative.
    """
    _check(H, rho)
    if check and not is_fuzzy_strongly_regular(H, rho):
        warnings.warn(f"relation {rho} is not strongly regular", NotStronglyRegularWarning, stacklevel=2)
    blocks = [sorted(block.members) for block in rho.classes]
    n, k = len(blocks), H.carrier.n_sorts
    cls = rho.class_of

    def cell(A, g, B):
        out = [ZERO] * n
        for a in blocks[A]:
            for b in blocks[B]:
                for c, grade in enumerate(H.cells[a][g][b]):
                    if grade > out[cls[c]]:
                        out[cls[c]] = grade
        return tuple(out)

    return FuzzyGammaHyperop.from_function(_quotient_carrier(rho), cell, proper=None)


def verify_regular_transfer(H: FuzzyGammaHyperop, rho: EquivRelation) -> CheckReport:
    """Regularity and strong regularity agree between ``H`` and ``psi(H)``."""
    K = psi(H)
    fr = bool(is_fuzzy_regular(H, rho))
    cr = bool(crisp_is_regular(K, rho))
    fs = bool(is_fuzzy_strongly_regular(H, rho))
    cs = bool(crisp_is_strongly_regular(K, rho))
    details = (("fuzzy_regular", fr), ("crisp_regular", cr), ("fuzzy_strong", fs), ("crisp_strong", cs))
    if fr == cr and fs == cs:
        return CheckReport(True, None, details)
    return fail(note="fuzzy and crisp predicates disagree", details=details)


def verify_strong_quotient_is_semigroup(H: FuzzyGammaHyperop, rho: EquivRelation) -> CheckReport:
    """Strong regularity agrees with the crisp quotient being a Γ-semigroup.

    A relation without a well-defined quotient counts as "not a Γ-semigroup".
    """
    strong = bool(is_fuzzy_strongly_regular(H, rho))
    try:
        Q = quotient_crisp(H, rho)
    except QuotientError:
        semigroup = False
    else:
        semigroup = Q.is_single_valued() and bool(crisp_is_associative(Q))
    details = (("strongly_regular", strong), ("quotient_semigroup", semigroup))
    if strong == semigroup:
        return CheckReport(True, None, details)
    return fail(note="strong regularity and quotient shape disagree", details=details)
