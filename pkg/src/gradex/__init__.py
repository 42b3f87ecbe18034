"""Quantum-commutative G-graded extension algebras: normal forms, Hopf-module
and Galois checks, and the realization/degeneracy classification."""
from .algebra import AlgebraSpec, BaseAlgebraSpec, Element, ExtensionAlgebra, Letter, Monomial, multiply, normal_form
from .bicharacter import CommutationFactor, eval_factor, from_flux, validate
from .kernel import GroupElement, QSpec, Scalar, StructureError, generator, group_compose, group_identity, group_inverse
from .realization import classify_flux, consistency_check

__all__ = [
    "AlgebraSpec", "BaseAlgebraSpec", "CommutationFactor", "Element", "ExtensionAlgebra", "GroupElement",
    "Letter", "Monomial", "QSpec", "Scalar", "StructureError", "classify_flux", "consistency_check",
    "eval_factor", "from_flux", "generator", "group_compose", "group_identity", "group_inverse",
    "multiply", "normal_form", "validate",
]
