"""Exhaustive enumeration and brute-force oracles.

Structures are enumerated in lexicographic order of their flattened table
``(a, γ, b, t)``, each grade being a numerator on a fixed grid ``k/d``.  The
position in that order is the cursor: enumeration can be resumed from any
decimal index.  Budgets are counts of raw candidates, never wall-clock.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from .carrier import Carrier, FuzzySubset, leq
from .grades import Grade
from .hyperop import FuzzyGammaHyperop, is_associative, is_hypergroup
from .ideals import is_left_ideal, is_right_ideal
from .relations import EquivRelation

DEFAULT_BUDGET = 1_000_000
MAX_PARTITION_SIZE = 10
FILTERS = ("all", "proper", "associative", "hypergroup")


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GradeGrid:
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("grid denominator must be positive")

    @property
    def grades(self) -> tuple[Grade, ...]:
        return tuple(Grade(i, self.denominator) for i in range(self.denominator + 1))

    def __contains__(self, grade) -> bool:
        return (grade * self.denominator).denominator == 1


@dataclass(frozen=True)
class EnumSpec:
    m_size: int
    gamma_size: int = 1
    grid: GradeGrid = GradeGrid(1)
    filter: str = "all"

    def __post_init__(self):
        if self.m_size < 1 or self.gamma_size < 1:
            raise ValueError("m_size and gamma_size must be at least 1")
        if self.filter not in FILTERS:
            raise ValueError(f"filter must be one of {FILTERS}")

    @property
    def carrier(self) -> Carrier:
        return Carrier.of_size(self.m_size, self.gamma_size)

    @property
    def n_grades(self) -> int:
        return self.m_size * self.gamma_size * self.m_size * self.m_size

    @property
    def raw_count(self) -> int:
        return (self.grid.denominator + 1) ** self.n_grades


def thread_count() -> int:
    """Worker count from ``GAMMA_HYPERLAB_THREADS`` (unset: 1, ``0``: all cores)."""
    raw = os.environ.get("GAMMA_HYPERLAB_THREADS", "1").strip() or "1"
    n = int(raw)
    if n < 0:
        raise ValueError("GAMMA_HYPERLAB_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def decode(spec: EnumSpec, index: int) -> FuzzyGammaHyperop:
    """The structure at lexicographic position ``index``."""
    base = spec.grid.denominator + 1
    n = spec.n_grades
    if not 0 <= index < base ** n:
        raise IndexError(f"cursor {index} out of range")
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        index, digits[i] = divmod(index, base)
    grades = spec.grid.grades
    m, k = spec.m_size, spec.gamma_size
    it = iter(digits)
    cells = tuple(
        tuple(tuple(tuple(grades[next(it)] for _ in range(m)) for _ in range(m)) for _ in range(k))
        for _ in range(m)
    )
    return FuzzyGammaHyperop(spec.carrier, cells, proper=None)


def encode(spec: EnumSpec, H: FuzzyGammaHyperop) -> int:
    base = spec.grid.denominator + 1
    index = 0
    for g in H.flat():
        scaled = g * spec.grid.denominator
        if scaled.denominator != 1:
            raise ValueError(f"grade {g} is not on the grid")
        index = index * base + int(scaled)
    return index


def _accepts(spec: EnumSpec, H: FuzzyGammaHyperop) -> bool:
    if spec.filter == "all":
        return True
    if not H.proper:
        return False
    if spec.filter == "proper":
        return True
    if spec.filter == "associative":
        return bool(is_associative(H))
    return bool(is_hypergroup(H))


def _scan(args) -> list[int]:
    spec, start, stop = args
    return [i for i in range(start, stop) if _accepts(spec, decode(spec, i))]


def enumerate_indexed(spec: EnumSpec, *, budget: int = DEFAULT_BUDGET, cursor: int = 0,
                      limit: int | None = None, workers: int | None = None) -> Iterator[tuple[int, FuzzyGammaHyperop]]:
    """Yield ``(cursor, structure)`` for accepted structures in lexicographic order.

    ``budget`` bounds the number of raw candidates scanned from ``cursor``;
    ``limit`` stops after that many accepted structures.
    """
    total = spec.raw_count
    if total - cursor > budget:
        raise BudgetExceeded(f"{total - cursor} candidates from cursor {cursor} exceed budget {budget}")
    workers = thread_count() if workers is None else workers
    emitted = 0
    if workers <= 1:
        for i in range(cursor, total):
            H = decode(spec, i)
            if _accepts(spec, H):
                yield i, H
                emitted += 1
                if limit is not None and emitted >= limit:
                    return
        return
    chunk = max(1, (total - cursor) // (workers * 8))
    ranges = [(spec, s, min(s + chunk, total)) for s in range(cursor, total, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for hits in pool.map(_scan, ranges):
            for i in hits:
                yield i, decode(spec, i)
                emitted += 1
                if limit is not None and emitted >= limit:
                    return


def enumerate_structures(spec: EnumSpec, **kwargs) -> Iterator[FuzzyGammaHyperop]:
    for _, H in enumerate_indexed(spec, **kwargs):
        yield H


def count_structures(spec: EnumSpec, **kwargs) -> int:
    return sum(1 for _ in enumerate_indexed(spec, **kwargs))


def enumerate_fuzzy_subsets(carrier: Carrier, grid: GradeGrid, *, budget: int = DEFAULT_BUDGET) -> Iterator[FuzzySubset]:
    """All grid-valued fuzzy subsets, lexicographic: zero first, ``χ_M`` last."""
    total = (grid.denominator + 1) ** carrier.size
    if total > budget:
        raise BudgetExceeded(f"{total} fuzzy subsets exceed budget {budget}")
    for grades in product(grid.grades, repeat=carrier.size):
        yield FuzzySubset._trusted(carrier, grades)


def _restricted_growth(n: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(top + 2):
            yield from rec(prefix + [c], max(top, c))

    yield from rec([], -1)


def enumerate_equiv_relations(carrier: Carrier, *, bound: int = MAX_PARTITION_SIZE) -> Iterator[EquivRelation]:
    """All partitions of the carrier, discrete first and universal last.

    The order is reverse lexicographic on restricted growth strings.
    """
    if carrier.size > bound:
        raise BudgetExceeded(f"|M|={carrier.size} exceeds the partition bound {bound}")
    for rgs in reversed(list(_restricted_growth(carrier.size))):
        yield EquivRelation(carrier, rgs)


def _oracle_min(H: FuzzyGammaHyperop, mu: FuzzySubset, grid: GradeGrid, predicate, budget: int) -> FuzzySubset:
    if any(g not in grid for g in H.grades()) or any(g not in grid for g in mu.grades):
        raise ValueError("structure and subset must take values on the grid")
    best = list(H.carrier.full().grades)
    for nu in enumerate_fuzzy_subsets(H.carrier, grid, budget=budget):
        if leq(mu, nu) and predicate(H, nu):
            best = [min(x, y) for x, y in zip(best, nu.grades)]
    result = FuzzySubset._trusted(H.carrier, tuple(best))
    if not predicate(H, result):
        raise AssertionError("meet of the containing ideals is not an ideal")
    return result


def oracle_min_left_ideal(H: FuzzyGammaHyperop, mu: FuzzySubset, grid: GradeGrid, *,
                          budget: int = DEFAULT_BUDGET) -> FuzzySubset:
    """Pointwise meet of every grid fuzzy subset that contains ``μ`` and is a left ideal.

    ``χ_M`` is always among them, so the meet is taken over a nonempty family.
    """
    return _oracle_min(H, mu, grid, is_left_ideal, budget)


def oracle_min_right_ideal(H: FuzzyGammaHyperop, mu: FuzzySubset, grid: GradeGrid, *,
                           budget: int = DEFAULT_BUDGET) -> FuzzySubset:
    return _oracle_min(H, mu, grid, is_right_ideal, budget)


def canonical_key(H: FuzzyGammaHyperop) -> tuple:
    """Least flattened table over all relabellings of ``M`` (sorts stay fixed)."""
    m, k = H.carrier.size, H.carrier.n_sorts
    best = None
    for perm in permutations(range(m)):
        inv = [0] * m
        for i, p in enumerate(perm):
            inv[p] = i
        key = tuple(
            H.cells[inv[a]][g][inv[b]][inv[t]]
            for a in range(m) for g in range(k) for b in range(m) for t in range(m)
        )
        if best is None or key < best:
            best = key
    return best


def count_isomorphism_classes(structures) -> int:
    return len({canonical_key(H) for H in structures})
