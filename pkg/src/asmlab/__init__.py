"""Exact enumeration, polynomial identities, and closed forms for refined
alternating-sign-matrix counts."""

from .closed_forms import (
    a_nij,
    a_nij_direct,
    a_nk,
    asm_total,
    check_near_symmetry,
    check_relation,
    stroganov_b,
)
from .coefficients import (
    CoefficientTable,
    IndexTuplePair,
    check_circuit,
    check_cyclic,
    check_gamma_formula,
    check_reflection_translation,
    check_remark_symmetry,
    check_system,
    coefficient_table,
    extract_coefficient,
    gamma_formula_value,
    reconstruct_expansion,
    verify_theorem7,
)
from .enumeration import (
    BottomRowSpec,
    GammaSpec,
    RefinedCounts,
    count_trapezoids,
    count_triangles,
    enumerate_triangles,
    gamma_count,
    refined_counts,
    special_point,
)
from .objects import (
    Asm,
    MonotoneTrapezoid,
    MonotoneTriangle,
    PartialAsm,
    Verdict,
    asm_reflect_antidiagonal,
    asm_reflect_horizontal,
    asm_rotate_90,
    asm_to_triangle,
    partial_asm_to_trapezoid,
    reflect_antidiagonal,
    reflect_horizontal,
    rotate_90,
    trapezoid_to_partial_asm,
    triangle_to_asm,
    validate,
)
from .polynomials import (
    ALPHA_VARIANTS,
    PRODUCTION_ALPHA_VARIANT,
    MultiPoly,
    TermCapExceeded,
    alpha_via_operator,
    alpha_via_recursion,
    apply_sigma,
    binomial_in_var,
    select_operator_variants,
    summation_operator,
    vandermonde,
)
from .reports import VerificationReport

__all__ = [
    "ALPHA_VARIANTS",
    "Asm",
    "BottomRowSpec",
    "CoefficientTable",
    "GammaSpec",
    "IndexTuplePair",
    "MonotoneTrapezoid",
    "MonotoneTriangle",
    "MultiPoly",
    "PRODUCTION_ALPHA_VARIANT",
    "PartialAsm",
    "RefinedCounts",
    "TermCapExceeded",
    "Verdict",
    "VerificationReport",
    "a_nij",
    "a_nij_direct",
    "a_nk",
    "alpha_via_operator",
    "alpha_via_recursion",
    "apply_sigma",
    "asm_reflect_antidiagonal",
    "asm_reflect_horizontal",
    "asm_rotate_90",
    "asm_to_triangle",
    "asm_total",
    "binomial_in_var",
    "check_circuit",
    "check_cyclic",
    "check_gamma_formula",
    "check_near_symmetry",
    "check_reflection_translation",
    "check_relation",
    "check_remark_symmetry",
    "check_system",
    "coefficient_table",
    "count_trapezoids",
    "count_triangles",
    "enumerate_triangles",
    "extract_coefficient",
    "gamma_count",
    "gamma_formula_value",
    "partial_asm_to_trapezoid",
    "reconstruct_expansion",
    "refined_counts",
    "reflect_antidiagonal",
    "reflect_horizontal",
    "rotate_90",
    "select_operator_variants",
    "special_point",
    "stroganov_b",
    "summation_operator",
    "trapezoid_to_partial_asm",
    "triangle_to_asm",
    "validate",
    "vandermonde",
    "verify_theorem7",
]
