"""Exact tools for generalized Rascal triangles.

A generalized Rascal triangle is the number triangle
``T(r, k) = c + k*d1 + r*d2 + r*k*d`` for integers ``(c, d, d1, d2)``.
This package generates such triangles three ways (closed form, addition
rule, multiplication rule), classifies raw triangles, and verifies the
structural identities they satisfy, all in exact integer arithmetic.
"""

from .analyze import (
    VERDICT_ADDITION_ONLY,
    VERDICT_GRT,
    VERDICT_MULTIPLICATION_ONLY,
    VERDICT_NEITHER,
    Classification,
    DiagonalReport,
    NotGrtError,
    RuleReport,
    RuleWitness,
    TooSmallError,
    UnderDeterminedError,
    classify,
    detect_addition_rule,
    detect_multiplication_rule,
    diagonal_reports,
    fit_grt,
)
from .core import (
    Diamond,
    GrtParams,
    TriangleGrid,
    closed_form_entry,
    major_diagonal,
    minor_diagonal,
)
from .generate import (
    Boundary,
    InexactDivisionError,
    MultiplicationRuleError,
    ZeroNorthError,
    boundary_from_params,
    generate_by_addition,
    generate_by_multiplication,
    generate_closed_form,
    mult_constant,
)
from .identities import (
    IdentityCheck,
    InapplicableCheckError,
    ashley_check,
    ashley_mod_check,
    column_diff_check,
    embed_in_rascal,
    even_diamond_check,
    multiple_of_rascal,
    odd_diamond_check,
    row_sum_formula,
    t_meg_check,
)
from .triangle_io import (
    TriangleParseError,
    parse_json,
    parse_plain_rows,
    parse_triangle,
    render_csv,
    render_json,
    render_text,
)

__version__ = "0.1.0"

__all__ = [
    "Boundary",
    "Classification",
    "Diamond",
    "DiagonalReport",
    "GrtParams",
    "IdentityCheck",
    "InapplicableCheckError",
    "InexactDivisionError",
    "MultiplicationRuleError",
    "NotGrtError",
    "RuleReport",
    "RuleWitness",
    "TooSmallError",
    "TriangleGrid",
    "TriangleParseError",
    "UnderDeterminedError",
    "VERDICT_ADDITION_ONLY",
    "VERDICT_GRT",
    "VERDICT_MULTIPLICATION_ONLY",
    "VERDICT_NEITHER",
    "ZeroNorthError",
    "ashley_check",
    "ashley_mod_check",
    "boundary_from_params",
    "classify",
    "closed_form_entry",
    "column_diff_check",
    "detect_addition_rule",
    "detect_multiplication_rule",
    "diagonal_reports",
    "embed_in_rascal",
    "even_diamond_check",
    "fit_grt",
    "generate_by_addition",
    "generate_by_multiplication",
    "generate_closed_form",
    "major_diagonal",
    "minor_diagonal",
    "mult_constant",
    "multiple_of_rascal",
    "odd_diamond_check",
    "parse_json",
    "parse_plain_rows",
    "parse_triangle",
    "render_csv",
    "render_json",
    "render_text",
    "row_sum_formula",
    "t_meg_check",
]
