"""Seeded random structures for property checks.

Uniformly random tables are almost never associative, so associative
structures come from a construction that is associative by design.  Start
from a semigroup ``S`` on the carrier and its monoid ``S¹``.  Then

    (a∘γ∘b)(t) = max( μ(a) ∧ μ(b) ∧ sup{W_γ(x) : a·x·b = t},  Λ(t) )

where ``W_γ`` is a nonzero fuzzy subset of ``S¹``, ``μ`` satisfies
``μ(a·x·b) >= μ(a) ∧ μ(b)`` and ``Λ`` satisfies ``Λ(st) >= Λ(s) ∨ Λ(t)``.
Both bracketings reduce to the same sup over ``a·x·b·y·c``, so the table
is associative.  Special cases include the characteristic images of
Γ-semigroups (``W_γ`` a point, ``μ = χ_M``, ``Λ = 0``) and the
``μ(a) ∧ μ(b)`` construction.

The second family is a weighted null semigroup: every product is the
point ``z`` with grade ``w(a,γ,b)``, where ``w(z,γ,c) = w(a,γ,z) = f`` and
all other weights are at least ``f``.  Both bracketings then have grade
``f``.  Its weights do not factor through the elements, which the first
family cannot produce.
"""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import product

from .carrier import Carrier, FuzzySubset
from .cuts import CrispGammaHyperop
from .grades import ONE, ZERO, Grade
from .hyperop import FuzzyGammaHyperop


def random_grade(rng: random.Random, d: int, positive: bool = False) -> Grade:
    return Grade(rng.randint(1 if positive else 0, d), d)


def random_fuzzy_subset(rng: random.Random, carrier: Carrier, d: int, nonzero: bool = False) -> FuzzySubset:
    while True:
        grades = tuple(random_grade(rng, d) for _ in range(carrier.size))
        if not nonzero or any(grades):
            return FuzzySubset(carrier, grades)


def random_structure(rng: random.Random, m: int, k: int = 1, d: int = 2, proper: bool = True,
                     density: float = 0.5) -> FuzzyGammaHyperop:
    """Independent cells; each grade is nonzero with probability ``density``."""
    carrier = Carrier.of_size(m, k)

    def cell(a, g, b):
        while True:
            grades = tuple(random_grade(rng, d, True) if rng.random() < density else ZERO for _ in range(m))
            if any(grades) or not proper:
                return grades

    return FuzzyGammaHyperop.from_function(carrier, cell, proper=proper or None)


def random_crisp(rng: random.Random, m: int, k: int = 1, density: float = 0.5) -> CrispGammaHyperop:
    """Independent nonempty cells."""
    carrier = Carrier.of_size(m, k)

    def cell(a, g, b):
        while True:
            members = [x for x in range(m) if rng.random() < density]
            if members:
                return members

    return CrispGammaHyperop.from_function(carrier, cell)


# semigroups


def _is_associative_table(t, m):
    return all(t[t[a * m + b] * m + c] == t[a * m + t[b * m + c]] for a in range(m) for b in range(m) for c in range(m))


@lru_cache(maxsize=None)
def all_semigroups(m: int) -> tuple[tuple[int, ...], ...]:
    """Every associative table on ``range(m)`` as a flat row-major tuple (m <= 3)."""
    if m > 3:
        raise ValueError("brute-force semigroup catalogue is limited to m <= 3")
    return tuple(t for t in product(range(m), repeat=m * m) if _is_associative_table(t, m))


def _adjoin(table: tuple[int, ...], m: int, kind: str) -> tuple[int, ...]:
    """Add a new element ``m`` acting as identity or zero."""
    n = m + 1
    out = []
    for a in range(n):
        for b in range(n):
            if a < m and b < m:
                out.append(table[a * m + b])
            elif kind == "identity":
                out.append(b if a == m else a)
            else:
                out.append(m)
    return tuple(out)


def _relabel(table: tuple[int, ...], m: int, perm: list[int]) -> tuple[int, ...]:
    inv = [0] * m
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(perm[table[inv[a] * m + inv[b]]] for a in range(m) for b in range(m))


def random_semigroup(rng: random.Random, m: int) -> tuple[int, ...]:
    """A random associative table on ``range(m)``, randomly relabelled."""
    if m <= 3:
        return rng.choice(all_semigroups(m))
    kind = rng.choice(["adjoin", "adjoin", "cyclic", "chain", "left", "right", "null", "truncated"])
    if kind == "adjoin":
        table = _adjoin(random_semigroup(rng, m - 1), m - 1, rng.choice(["identity", "zero"]))
    elif kind == "cyclic":
        table = tuple((a + b) % m for a in range(m) for b in range(m))
    elif kind == "chain":
        table = tuple(max(a, b) for a in range(m) for b in range(m))
    elif kind == "left":
        table = tuple(a for a in range(m) for b in range(m))
    elif kind == "right":
        table = tuple(b for a in range(m) for b in range(m))
    elif kind == "null":
        table = tuple(0 for a in range(m) for b in range(m))
    else:
        table = tuple(min(a + b, m - 1) for a in range(m) for b in range(m))
    perm = list(range(m))
    rng.shuffle(perm)
    return _relabel(table, m, perm)


def random_gamma_semigroup(rng: random.Random, m: int, k: int = 1) -> list:
    """``aγb = a·s_γ·b`` for a random semigroup and random ``s_γ`` in ``S¹``."""
    table = random_semigroup(rng, m)

    def mul(a, b):
        if a == m:
            return b
        if b == m:
            return a
        return table[a * m + b]

    shifts = [rng.randrange(m + 1) for _ in range(k)]
    return [[[mul(mul(a, s), b) for b in range(m)] for s in shifts] for a in range(m)]


def _close_subsemigroup(mu: list, m: int, mul) -> list:
    changed = True
    while changed:
        changed = False
        for a in range(m):
            for b in range(m):
                w = min(mu[a], mu[b])
                if not w:
                    continue
                for x in range(m + 1):
                    t = mul(mul(a, x), b)
                    if mu[t] < w:
                        mu[t] = w
                        changed = True
    return mu


def _close_ideal(lam: list, m: int, mul) -> list:
    changed = True
    while changed:
        changed = False
        for s in range(m):
            for t in range(m):
                w = max(lam[s], lam[t])
                u = mul(s, t)
                if lam[u] < w:
                    lam[u] = w
                    changed = True
    return lam


def random_associative_structure(rng: random.Random, m: int, k: int = 1, d: int = 2,
                                 proper: bool = True) -> FuzzyGammaHyperop:
    """A random associative fuzzy Γ-hyperoperation on ``m`` elements with grades on ``1/d``."""
    carrier = Carrier.of_size(m, k)
    while True:
        table = random_semigroup(rng, m)

        def mul(a, b, table=table):
            if a == m:
                return b
            if b == m:
                return a
            return table[a * m + b]

        weights = []
        for _ in range(k):
            style = rng.random()
            if style < 0.4:
                w = [ZERO] * (m + 1)
                w[rng.randrange(m + 1)] = random_grade(rng, d, True) if rng.random() < 0.5 else ONE
            else:
                w = [random_grade(rng, d) if rng.random() < 0.6 else ZERO for _ in range(m + 1)]
                if not any(w):
                    w[rng.randrange(m + 1)] = random_grade(rng, d, True)
            weights.append(w)

        if rng.random() < 0.5:
            mu = [ONE] * m
        else:
            mu = _close_subsemigroup([random_grade(rng, d, proper) for _ in range(m)], m, mul)
        if rng.random() < 0.5:
            lam = [ZERO] * m
        else:
            lam = _close_ideal([random_grade(rng, d) if rng.random() < 0.3 else ZERO for _ in range(m)], m, mul)

        def cell(a, g, b, weights=weights, mu=mu, lam=lam, mul=mul):
            cap = min(mu[a], mu[b])
            out = list(lam)
            w = weights[g]
            for x in range(m + 1):
                if w[x]:
                    t = mul(mul(a, x), b)
                    v = min(cap, w[x])
                    if v > out[t]:
                        out[t] = v
            return tuple(out)

        H = FuzzyGammaHyperop.from_function(carrier, cell, proper=None)
        if H.proper or not proper:
            return H


def random_weighted_null(rng: random.Random, m: int, k: int = 1, d: int = 2) -> FuzzyGammaHyperop:
    """Weighted null semigroup on a random zero ``z`` (see module docstring)."""
    carrier = Carrier.of_size(m, k)
    z = rng.randrange(m)
    floor = random_grade(rng, d, True)
    above = [g for g in (Grade(i, d) for i in range(d + 1)) if g >= floor]
    weights = {
        (a, g, b): floor if z in (a, b) else rng.choice(above)
        for a in range(m) for g in range(k) for b in range(m)
    }
    return FuzzyGammaHyperop.from_function(
        carrier, lambda a, g, b: tuple(weights[a, g, b] if t == z else ZERO for t in range(m))
    )


def random_associative(rng: random.Random, m: int, k: int = 1, d: int = 2) -> FuzzyGammaHyperop:
    """Proper associative structure drawn from both families (weighted null with probability 1/4)."""
    if rng.random() < 0.25:
        return random_weighted_null(rng, m, k, d)
    return random_associative_structure(rng, m, k, d)


def random_associative_crisp(rng: random.Random, m: int, k: int = 1) -> CrispGammaHyperop:
    """Support of a random associative fuzzy structure (associative by the support theorem)."""
    H = random_associative_structure(rng, m, k, d=2, proper=True)
    return CrispGammaHyperop.from_function(
        H.carrier, lambda a, g, b: (x for x in range(m) if H.cells[a][g][b][x] > 0)
    )


def random_any(rng: random.Random, m: int, k: int = 1, d: int = 2) -> FuzzyGammaHyperop:
    """Half associative by construction, half independent cells."""
    if rng.random() < 0.5:
        return random_associative(rng, m, k, d)
    return random_structure(rng, m, k, d, density=rng.choice([0.2, 0.4, 0.7]))
