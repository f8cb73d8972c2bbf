"""Shared builders for the test suite."""
from __future__ import annotations

import io
import random
from fractions import Fraction as F
from pathlib import Path

import gamma_hyperlab
from gamma_hyperlab.cli import run_command

from gamma_hyperlab.carrier import Carrier, FuzzySubset
from gamma_hyperlab.hyperop import FuzzyGammaHyperop, compose_elem, compose_fuzzy, compose_left, compose_right
from gamma_hyperlab.sampling import random_fuzzy_subset


def chi(carrier: Carrier, *labels) -> FuzzySubset:
    return FuzzySubset.from_mapping(carrier, {str(x): 1 for x in labels})


def grades(carrier: Carrier, *values) -> FuzzySubset:
    return FuzzySubset(carrier, tuple(F(v) for v in values))


def table_structure(elements, sorts, rule) -> FuzzyGammaHyperop:
    """``rule(a_label, g_label, b_label)`` returns ``{label: grade}``."""
    carrier = Carrier(tuple(elements), tuple(sorts))

    def cell(a, g, b):
        out = rule(carrier.elements[a], carrier.sorts[g], carrier.elements[b])
        return FuzzySubset.from_mapping(carrier, out).grades

    return FuzzyGammaHyperop.from_function(carrier, cell, proper=None)


def two_sort_zero_semilattice() -> FuzzyGammaHyperop:
    """``g0`` sends everything to 0; ``g1`` is max for the order 1 < 2 < 0."""
    rank = {"1": 0, "2": 1, "0": 2}
    return table_structure(
        "012", ("g0", "g1"),
        lambda a, g, b: {"0": 1} if g == "g0" else {max(a, b, key=rank.get): 1},
    )


def mixed_associativity_failures(H, rng: random.Random, d: int, trials: int) -> list[str]:
    """The seven mixed bracketing identities on random instances; returns failures."""
    c = H.carrier
    m, k = c.size, c.n_sorts
    failures = []
    for _ in range(trials):
        a, b = rng.randrange(m), rng.randrange(m)
        al, be = rng.randrange(k), rng.randrange(k)
        mu, nu, de = (random_fuzzy_subset(rng, c, d) for _ in range(3))
        pairs = {
            "i": (compose_left(H, a, al, compose_left(H, b, be, mu)), compose_fuzzy(H, compose_elem(H, a, al, b), be, mu)),
            "ii": (compose_left(H, a, al, compose_right(H, mu, be, b)), compose_right(H, compose_left(H, a, al, mu), be, b)),
            "iii": (compose_fuzzy(H, mu, al, compose_elem(H, a, be, b)), compose_right(H, compose_right(H, mu, al, a), be, b)),
            "iv": (compose_fuzzy(H, mu, al, compose_left(H, a, be, nu)), compose_fuzzy(H, compose_right(H, mu, al, a), be, nu)),
            "v": (compose_left(H, a, al, compose_fuzzy(H, mu, be, nu)), compose_fuzzy(H, compose_left(H, a, al, mu), be, nu)),
            "vi": (compose_fuzzy(H, mu, al, compose_right(H, nu, be, a)), compose_right(H, compose_fuzzy(H, mu, al, nu), be, a)),
            "vii": (compose_fuzzy(H, mu, al, compose_fuzzy(H, nu, be, de)), compose_fuzzy(H, compose_fuzzy(H, mu, al, nu), be, de)),
        }
        for name, (x, y) in pairs.items():
            if x != y:
                failures.append(f"({name}) a={a} b={b} alpha={al} beta={be}")
    return failures


FIXTURES = Path(gamma_hyperlab.__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

# name -> (argv, expected exit code); paths are relative to the fixtures directory
CASES = {
    "check_max": (["check", "--axioms", "max.json"], 0),
    "check_max_json": (["--json", "check", "max.json"], 0),
    "check_max_hypergroup": (["check", "--hypergroup", "max.json"], 1),
    "ideal_left_chi0": (["ideal", "--left", "--subset", "chi0.json", "max.json"], 1),
    "ideal_all_chi2": (["ideal", "--subset", "2", "max.json"], 0),
    "ideal_left_chi0_json": (["ideal", "--left", "--subset", "chi0.json", "max.json", "--json"], 1),
    "compose_left": (["compose", "max.json", "1", "g", "0=1/2,2=1/3"], 0),
    "compose_fuzzy": (["compose", "truncated_sum.json", "0=1,1=1", "g", "1=1/2,2=1"], 0),
    "cut_truncated": (["cut", "--p", "1/2", "truncated_sum.json"], 0),
    "cut_truncated_high": (["cut", "--p", "3/4", "truncated_sum.json"], 0),
    "convert_crisp": (["convert", "--to", "crisp", "truncated_sum.json"], 0),
    "convert_fuzzy": (["convert", "--to", "fuzzy", "pair_union.json"], 0),
    "generate_oracle": (["generate", "--oracle", "--subset", "1", "max.json"], 0),
    "generate_right": (["generate", "--side", "right", "--subset", "0=1/2", "truncated_sum.json"], 0),
    "hom_collapse": (["hom", "max.json", "max2.json", "--map", "collapse.json"], 0),
    "hom_collapse_crisp": (["hom", "--crisp", "max.json", "max2.json", "--map", "collapse.json"], 0),
    "relation_max": (["relation", "--relation", "0,1|2", "max.json"], 0),
    "relation_pair_union": (["relation", "--relation", "0,1|2", "pair_union.json"], 1),
    "quotient_strong": (["quotient", "--relation", "{0,1}|{2}", "--strong", "max.json"], 0),
    "quotient_crisp_json": (["--json", "quotient", "--crisp", "--relation", "0,1|2", "max.json"], 0),
    "quotient_strong_fails": (["quotient", "--strong", "--relation", "0,1|2", "pair_union.json"], 1),
    "quotient_crisp_irregular": (["quotient", "--crisp", "--relation", "0,2|1", "max.json"], 1),
    "enumerate_census": (["enumerate", "--size", "2", "--filter", "associative", "--iso"], 0),
    "enumerate_page": (["enumerate", "--size", "2", "--filter", "hypergroup", "--limit", "2", "--list"], 0),
}



def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out, err)
    return code, out.getvalue(), err.getvalue()
