"""Exact toolkit for finite fuzzy Γ-hypersemigroups."""
from .grades import ONE, ZERO, Grade, as_grade, join, join_all, meet, meet_all
from .carrier import (
    Carrier, CarrierMismatch, CrispSubset, FuzzySubset, characteristic, fuzzy, intersection, leq, support, union,
)
from .hyperop import (
    CheckReport, FuzzyGammaHyperop, StructureError, Witness, compose_elem, compose_fuzzy, compose_left,
    compose_many, compose_right, from_gamma_semigroup_and_fuzzy_sub, is_associative, is_hypergroup,
)
from .cuts import (
    CrispGammaHyperop, crisp_is_associative, crisp_product, cut_structure, cut_subset, distinct_grades,
    verify_cut_equivalence, verify_cut_membership, verify_reproduction_cut,
)
from .bridge import CarrierMap, image_fuzzy, is_crisp_homomorphism, is_fuzzy_homomorphism, phi, psi
from .ideals import (
    bi_ideal_via_M, generate_left_ideal, generate_right_ideal, interior_ideal_via_M, is_bi_ideal, is_interior_ideal,
    is_left_ideal, is_right_ideal, is_sub_hypersemigroup, left_ideal_via_M, right_ideal_via_M,
)
from .relations import (
    EquivRelation, QuotientError, crisp_is_regular, crisp_is_strongly_regular, is_fuzzy_regular,
    is_fuzzy_strongly_regular, quotient_crisp, quotient_fuzzy, rel_extends,
)
from .search import (
    BudgetExceeded, EnumSpec, GradeGrid, canonical_key, enumerate_equiv_relations, enumerate_fuzzy_subsets,
    enumerate_indexed, enumerate_structures, oracle_min_left_ideal,
)
from .families import cyclic_group, max_structure, pair_union, subset_union, truncated_sum
from .formats import FormatError, emit_structure, parse_structure

__version__ = "0.1.0"
