"""Exact computations of stable invariants of finite-dimensional algebras."""

from .algebra import (
    Algebra,
    Quiver,
    Relation,
    algebra_from_quiver,
    algebra_from_structure_constants,
    centralizer_algebra,
    find_algebra_isomorphism,
    lower_triangular_matrix_algebra,
)
from .invariants import (
    Caps,
    IndecRegistry,
    compare_profiles,
    delooping_level,
    dominant_dimensions,
    enumerate_indecomposables,
    frobenius_part,
    nu_stably_projectives,
    phi_psi,
    phi_psi_dim,
    stable_profile,
)
from .io import parse_algebra, parse_algebra_file
from .linalg import QQ, Field
from .modules import Module, decompose, is_isomorphic
from .surgery import find_nodes, remove_nodes, verify_surgery

__all__ = [
    "Algebra", "Quiver", "Relation", "algebra_from_quiver", "algebra_from_structure_constants",
    "centralizer_algebra", "find_algebra_isomorphism", "lower_triangular_matrix_algebra",
    "Caps", "IndecRegistry", "compare_profiles", "delooping_level", "dominant_dimensions",
    "enumerate_indecomposables", "frobenius_part", "nu_stably_projectives", "phi_psi", "phi_psi_dim",
    "stable_profile", "parse_algebra", "parse_algebra_file", "QQ", "Field", "Module", "decompose",
    "is_isomorphic", "find_nodes", "remove_nodes", "verify_surgery",
]
__version__ = "0.1.0"
