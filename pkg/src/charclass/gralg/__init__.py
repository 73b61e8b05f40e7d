"""Graded-commutative algebra presentations over F2."""

from charclass.gralg.morphism import (
    AlgebraMorphism,
    compose,
    evaluate_at_zero,
    identity,
    inclusion,
    tensor_with_identity,
)
from charclass.gralg.polynomial import Monomial, PolyF2, format_poly, parse_poly
from charclass.gralg.presentation import (
    GradedAlgebraPresentation,
    Generator,
    disjoint_renaming,
    ground_field,
    tensor,
)


def basis(a: GradedAlgebraPresentation, d: int) -> list[Monomial]:
    return a.basis(d)


def normal_form(a: GradedAlgebraPresentation, p: PolyF2) -> PolyF2:
    return a.normal_form(p)


def multiply(a: GradedAlgebraPresentation, p: PolyF2, q: PolyF2) -> PolyF2:
    return a.multiply(p, q)


def poincare_series(a: GradedAlgebraPresentation, cap: int) -> list[int]:
    return a.poincare_series(cap)


def apply_morphism(f: AlgebraMorphism, p: PolyF2) -> PolyF2:
    return f.apply(p)


def check_well_defined(f: AlgebraMorphism) -> list[str]:
    return f.check_well_defined()


__all__ = [
    "AlgebraMorphism",
    "Generator",
    "GradedAlgebraPresentation",
    "Monomial",
    "PolyF2",
    "apply_morphism",
    "basis",
    "check_well_defined",
    "compose",
    "disjoint_renaming",
    "evaluate_at_zero",
    "format_poly",
    "ground_field",
    "identity",
    "inclusion",
    "multiply",
    "normal_form",
    "parse_poly",
    "poincare_series",
    "tensor",
    "tensor_with_identity",
]
