"""Cohomology rings of products of complex projective spaces and their graded
automorphisms.

``R = Z[x_1..x_m] / (x_i^(n_i+1))`` is :class:`RingSpec` + :class:`RingElement`;
substitutions of generators are :class:`LinearSubstitution`.
"""
from .classify import (
    DegreeProfile,
    SignedPermutation,
    StructureReport,
    as_signed_permutation,
    automorphism_group_order,
    block_triangular_witness,
    degree_profile,
    enumerate_automorphisms,
    verify_structure_theorem,
)
from .errors import RigidityError
from .expr import parse_element
from .factor import DiffeoRecipe, Factorization, factor_isomorphism, realize
from .kernels import BACKEND
from .morphism import (
    LinearSubstitution,
    apply,
    compose,
    determinant,
    is_graded_automorphism,
    is_well_defined_endomorphism,
)
from .ring import (
    RingElement,
    RingSpec,
    add,
    degree_one_element,
    mul,
    nilpotency_order,
    power,
    reduce,
    verify_nonvanishing_powers,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DegreeProfile",
    "DiffeoRecipe",
    "Factorization",
    "LinearSubstitution",
    "RigidityError",
    "RingElement",
    "RingSpec",
    "SignedPermutation",
    "StructureReport",
    "add",
    "apply",
    "as_signed_permutation",
    "automorphism_group_order",
    "block_triangular_witness",
    "compose",
    "degree_one_element",
    "degree_profile",
    "determinant",
    "enumerate_automorphisms",
    "factor_isomorphism",
    "is_graded_automorphism",
    "is_well_defined_endomorphism",
    "mul",
    "nilpotency_order",
    "parse_element",
    "power",
    "realize",
    "reduce",
    "verify_nonvanishing_powers",
    "verify_structure_theorem",
]
