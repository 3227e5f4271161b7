"""Descent polynomials of multiset permutations.

Exact computation by three independent routes (brute-force enumeration, the
classical generating-function identity, and Eulerian differential operators),
gamma-expansion and symmetric-decomposition extraction, and mechanical
verification of structural positivity claims.
"""

__version__ = "0.1.0"

from .enumeration import (
    BudgetExceeded,
    EmptySpec,
    MultisetSpec,
    StatTriple,
    bivariate_brute,
    descent_polynomial_brute,
    iterate_words,
    statistics,
)
from .gamma import (
    ExpansionType,
    GammaVector,
    PositivityReport,
    SymmetricDecomposition,
    bivariate_gamma_expansion,
    classify_expansion_type,
    gamma_expansion,
    is_alternatingly_increasing,
    is_bi_gamma_positive,
    positivity_report,
    recurrence_tilde_a,
    recurrence_tilde_b,
    symmetric_decomposition,
    unimodality,
)
from .macmahon import binomial, macmahon_polynomial, polynomiality_check
from .operators import (
    GammaBasisTerm,
    UnsupportedMultiplicity,
    apply_G,
    apply_G_part,
    apply_T,
    apply_TG_closed,
    commutator_is_zero,
    g_on_type1_basis,
    g_on_type2_basis,
    polynomial_via_operators,
    t_on_type1_basis,
)
from .polys import BiPoly, DegreeExceedsN, UniPoly
from .verify import canonical_specs, check_spec, run_verify

__all__ = [
    "BiPoly",
    "BudgetExceeded",
    "DegreeExceedsN",
    "EmptySpec",
    "ExpansionType",
    "GammaBasisTerm",
    "GammaVector",
    "MultisetSpec",
    "PositivityReport",
    "StatTriple",
    "SymmetricDecomposition",
    "UniPoly",
    "UnsupportedMultiplicity",
    "apply_G",
    "apply_G_part",
    "apply_T",
    "apply_TG_closed",
    "binomial",
    "bivariate_brute",
    "bivariate_gamma_expansion",
    "canonical_specs",
    "check_spec",
    "classify_expansion_type",
    "commutator_is_zero",
    "descent_polynomial_brute",
    "g_on_type1_basis",
    "g_on_type2_basis",
    "gamma_expansion",
    "is_alternatingly_increasing",
    "is_bi_gamma_positive",
    "iterate_words",
    "macmahon_polynomial",
    "polynomial_via_operators",
    "polynomiality_check",
    "positivity_report",
    "recurrence_tilde_a",
    "recurrence_tilde_b",
    "run_verify",
    "statistics",
    "symmetric_decomposition",
    "unimodality",
]
