"""Exact Seshadri constants of plane curve arrangements."""

from .arrangement import (CombinatorialArrangement, GeometricArrangement, IncidencePoint, epsilon_config,
                          f_numbers, hirzebruch_check, per_curve_check, prsz_check, theorem_lower_bound,
                          validate_combinatorics, verify_geometry)
from .field import QQ, FieldContext, FieldElement, NumberFieldSpec, make_field_context
from .geometry import HomogeneousPolynomial, ProjectivePoint, evaluate, multiplicity_at
from .io import load_arrangement, save_arrangement
from .linsys import MultiplicityAssignment, interpolate, unique_member_check
from .seshadri import compute_seshadri, search_conics, search_lines, verify_certificate

__all__ = [
    "CombinatorialArrangement", "GeometricArrangement", "IncidencePoint", "epsilon_config", "f_numbers",
    "hirzebruch_check", "per_curve_check", "prsz_check", "theorem_lower_bound", "validate_combinatorics",
    "verify_geometry", "QQ", "FieldContext", "FieldElement", "NumberFieldSpec", "make_field_context",
    "HomogeneousPolynomial", "ProjectivePoint", "evaluate", "multiplicity_at", "load_arrangement",
    "save_arrangement", "MultiplicityAssignment", "interpolate", "unique_member_check", "compute_seshadri",
    "search_conics", "search_lines", "verify_certificate",
]
