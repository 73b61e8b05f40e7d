"""Quadratic triples over the local model of a regular pair."""

from charclass.quadbundle.boundary import DegenerationBoundary, degeneration_boundary
from charclass.quadbundle.field import CoefficientField
from charclass.quadbundle.io import TripleFile, load_triple, triple_from_data, triple_from_json, triple_to_data, triple_to_json
from charclass.quadbundle.reduce import (
    Diagonalization,
    FormInvariants,
    ReducedTriple,
    diagonalize,
    diagonalize_with_transform,
    model_triple,
    reduced_triple,
)
from charclass.quadbundle.triple import (
    TVAR,
    LocalTriple,
    MildDegeneration,
    base_change,
    congruence,
    discriminant,
    is_mildly_degenerating,
    multiplicity,
    orthogonal_sum,
    poly_constant,
    poly_from_coefficients,
    rank_profile,
    twist_by_unit,
)

__all__ = [
    "TVAR",
    "CoefficientField",
    "DegenerationBoundary",
    "Diagonalization",
    "FormInvariants",
    "LocalTriple",
    "MildDegeneration",
    "ReducedTriple",
    "TripleFile",
    "base_change",
    "congruence",
    "degeneration_boundary",
    "diagonalize",
    "diagonalize_with_transform",
    "discriminant",
    "is_mildly_degenerating",
    "load_triple",
    "model_triple",
    "multiplicity",
    "orthogonal_sum",
    "poly_constant",
    "poly_from_coefficients",
    "rank_profile",
    "reduced_triple",
    "triple_from_data",
    "triple_from_json",
    "triple_to_data",
    "triple_to_json",
    "twist_by_unit",
]
