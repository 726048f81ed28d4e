"""Multigraded Hilbert functions of reduced points in (P^1)^r.

Hilbert values are ranks of exact evaluation matrices; line multiplicities
are read back off the Hilbert function and checked against a direct count.
"""

from .exact_linalg import BadPrimeError, ExactMatrix, rank, rank_mod_p
from .hilbert import (
    DifferenceSequence,
    HilbertTable,
    collinear_closed_form,
    difference_sequence,
    evaluation_matrix,
    hilbert_table,
    hilbert_value,
    monomial_exponents,
    ring_dimension,
    stabilization_corner,
)
from .lines import (
    RProfile,
    geometric_r_profile,
    glue_additivity_check,
    hilbert_r_profile,
    sum_formula_check,
    verify_theorem,
)
from .points import (
    InputError,
    LineKey,
    Point,
    PointSet,
    ProjCoordinate,
    canonicalize,
    format_point_set,
    group_by_line,
    parse_point_set,
    projection_count,
)

__all__ = [
    "BadPrimeError",
    "DifferenceSequence",
    "ExactMatrix",
    "HilbertTable",
    "InputError",
    "LineKey",
    "Point",
    "PointSet",
    "ProjCoordinate",
    "RProfile",
    "canonicalize",
    "collinear_closed_form",
    "difference_sequence",
    "evaluation_matrix",
    "format_point_set",
    "geometric_r_profile",
    "glue_additivity_check",
    "group_by_line",
    "hilbert_r_profile",
    "hilbert_table",
    "hilbert_value",
    "monomial_exponents",
    "parse_point_set",
    "projection_count",
    "rank",
    "rank_mod_p",
    "ring_dimension",
    "stabilization_corner",
    "sum_formula_check",
    "verify_theorem",
]
