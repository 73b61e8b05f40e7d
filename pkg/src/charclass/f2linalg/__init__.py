"""Exact linear algebra over F2 with bit-packed rows."""

from charclass.f2linalg.echelon import EchelonForm, kernel_basis, rank, row_echelon, solve
from charclass.f2linalg.matrix import F2Matrix, pack_vector, unpack_vector

__all__ = [
    "EchelonForm",
    "F2Matrix",
    "kernel_basis",
    "pack_vector",
    "rank",
    "row_echelon",
    "solve",
    "unpack_vector",
]
