"""Exact computations around the Schensted correspondence, shadow lines, the
standard monomial basis of the permutation-matrix quotient ring, local
permutation statistics, and symmetric group characters.

Permutations are lists of 1-based values in one-line notation; grid cells are
(i, j) pairs with 1-based coordinates.  All arithmetic is exact: values that
may not fit a machine integer are returned as strings like "3/2".
"""

from viennot._core import (
    ResourceLimitError,
    alpha,
    ballot_check,
    builtin_statistic,
    character_table,
    check_equivariant,
    check_novak_rhoades,
    decompose_statistic,
    evaluate,
    evaluation_matrix_determinant,
    hilbert_series,
    ideal_generators,
    insertion_rsk,
    inverse_rsk,
    iterated_shadow_sets,
    junta_basis,
    kronecker_coefficient,
    lis,
    lis_histogram,
    minimal_locality,
    normal_form,
    rsk,
    shadow_set,
    shadow_set_to_permutation,
    standard_monomial_basis,
)

__all__ = [
    "ResourceLimitError",
    "alpha",
    "ballot_check",
    "builtin_statistic",
    "character_table",
    "check_equivariant",
    "check_novak_rhoades",
    "decompose_statistic",
    "evaluate",
    "evaluation_matrix_determinant",
    "hilbert_series",
    "ideal_generators",
    "insertion_rsk",
    "inverse_rsk",
    "iterated_shadow_sets",
    "junta_basis",
    "kronecker_coefficient",
    "lis",
    "lis_histogram",
    "minimal_locality",
    "normal_form",
    "rsk",
    "shadow_set",
    "shadow_set_to_permutation",
    "standard_monomial_basis",
]
