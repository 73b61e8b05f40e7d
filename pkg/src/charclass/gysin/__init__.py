"""Gysin sequences, boundary maps, B(v)* and the degeneration map delta."""

from charclass.gysin.classes import bv_star, even_gysin_datum, odd_gysin_datum, tensor_by_line
from charclass.gysin.completion import CompletionResult, DimensionCheck, complete_relations
from charclass.gysin.delta import DeltaContext, bV_commutation_check, delta, delta_context
from charclass.gysin.sequence import BoundaryResult, GysinDatum, check_exactness, gysin_d

__all__ = [
    "BoundaryResult",
    "CompletionResult",
    "DeltaContext",
    "DimensionCheck",
    "GysinDatum",
    "bV_commutation_check",
    "bv_star",
    "check_exactness",
    "complete_relations",
    "delta",
    "delta_context",
    "even_gysin_datum",
    "gysin_d",
    "odd_gysin_datum",
    "tensor_by_line",
]
