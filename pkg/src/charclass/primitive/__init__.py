"""Twist coproducts and primitive cohomology classes."""

from charclass.primitive.twist import (
    TwistStructure,
    builtin_mu_odd,
    check_counit,
    check_subring,
    is_primitive,
    primitive_basis,
    primitive_poincare,
    twist_for_even,
    twist_residue,
)

__all__ = [
    "TwistStructure",
    "builtin_mu_odd",
    "check_counit",
    "check_subring",
    "is_primitive",
    "primitive_basis",
    "primitive_poincare",
    "twist_for_even",
    "twist_residue",
]
