"""
afsa - argumentation frameworks with set attackers.

Complete semantics, logical encodings and equational semantics for DAF, HLAF, BHAF,
SETAF and HSAF frameworks.
"""

__version__ = "0.1.0"
__author__ = "Developer"

from .encoder import EncodedFrame, encode
from .equational import (
    EquationSystem,
    SolveConfig,
    SolveResult,
    build_cfne_system,
    build_system,
    enumerate_3valued_solutions,
    residual,
    solve_fixed_point,
    ternarize,
    validate_tuple_axioms,
)
from .frame_io import parse_frame, serialize_frame, write_labellings
from .framework import Attack, Framework, FrameworkKind, ValidationReport, compute_level, validate
from .fuzzy import GODEL, LUKASIEWICZ, PRODUCT, Algebra, eval_fuzzy, implication_value, luk_nary_closed_form
from .logic3 import Truth3, enumerate_models3, eval3, is_model3
from .semantics import check_complete, enumerate_complete
from .transforms import to_setaf

__all__ = [
    "Algebra", "Attack", "EncodedFrame", "EquationSystem", "Framework", "FrameworkKind",
    "GODEL", "LUKASIEWICZ", "PRODUCT", "SolveConfig", "SolveResult", "Truth3",
    "ValidationReport", "build_cfne_system", "build_system", "check_complete",
    "compute_level", "encode", "enumerate_3valued_solutions", "enumerate_complete",
    "enumerate_models3", "eval3", "eval_fuzzy", "implication_value", "is_model3",
    "luk_nary_closed_form", "parse_frame", "residual", "serialize_frame",
    "solve_fixed_point", "ternarize", "to_setaf", "validate", "validate_tuple_axioms",
    "write_labellings",
]
