"""Reduced row-echelon form over F2 and the rank / kernel / solve kernel.

Pivot convention: scan columns left to right; the pivot of a column is the
topmost remaining row with a 1 there. Every other row is then cleared in
that column, giving the unique reduced row-echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from charclass.errors import ContractViolation
from charclass.f2linalg.matrix import WORD_BITS, F2Matrix, pack_vector, unpack_vector

_ONE = np.uint64(1)


@dataclass(frozen=True)
class EchelonForm:
    """Reduced row-echelon form: nonzero rows of ``matrix`` with their pivots."""

    matrix: F2Matrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def cols(self) -> int:
        return self.matrix.cols

    def free_columns(self) -> list[int]:
        pivot_set = set(self.pivots)
        return [c for c in range(self.cols) if c not in pivot_set]

    def reduce_packed(self, packed: np.ndarray) -> np.ndarray:
        """Residue of a packed vector modulo the row space (pivot bits cleared)."""
        out = packed.copy()
        for i, col in enumerate(self.pivots):
            w, b = divmod(col, WORD_BITS)
            if (out[w] >> np.uint64(b)) & _ONE:
                out[w:] ^= self.matrix.words[i, w:]
        return out

    def reduce(self, v: Sequence[int] | np.ndarray) -> np.ndarray:
        """Residue of ``v`` modulo the row space; zero iff ``v`` lies in it."""
        return unpack_vector(self.reduce_packed(pack_vector(v, self.cols)), self.cols)

    def contains(self, v: Sequence[int] | np.ndarray) -> bool:
        return not self.reduce_packed(pack_vector(v, self.cols)).any()


def _eliminate(words: np.ndarray, cols: int) -> tuple[np.ndarray, list[int]]:
    m = words.copy()
    n_rows = m.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == n_rows:
            break
        w, b = divmod(c, WORD_BITS)
        bit = _ONE << np.uint64(b)
        below = np.flatnonzero(m[r:, w] & bit)
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        hits = np.flatnonzero(m[:, w] & bit)
        hits = hits[hits != r]
        if hits.size:
            m[hits, w:] ^= m[r, w:]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def row_echelon(m: F2Matrix) -> EchelonForm:
    """Canonical reduced row-echelon form of ``m`` (zero rows dropped)."""
    reduced, pivots = _eliminate(np.asarray(m.words), m.cols)
    return EchelonForm(F2Matrix(reduced.shape[0], m.cols, reduced), tuple(pivots))


def rank(m: F2Matrix) -> int:
    """F2-rank of ``m``; 0 for an empty matrix."""
    return row_echelon(m).rank


def kernel_basis(m: F2Matrix) -> list[np.ndarray]:
    """
    Basis of ``{v : m v = 0}``, one vector per free column in increasing order.

    The vector for free column ``f`` has a 1 at ``f``, zeros at the other
    free columns, and the pivot coordinates read off the echelon form.
    """
    ech = row_echelon(m)
    dense = ech.matrix.to_dense()
    basis: list[np.ndarray] = []
    for f in ech.free_columns():
        v = np.zeros(m.cols, dtype=np.uint8)
        v[f] = 1
        for i, col in enumerate(ech.pivots):
            if dense[i, f]:
                v[col] = 1
        basis.append(v)
    return basis


def solve(m: F2Matrix, b: Sequence[int] | np.ndarray) -> Optional[np.ndarray]:
    """
    Some ``x`` with ``m x = b``, or None when the system is inconsistent.

    Free variables are set to 0, so the answer is a function of ``(m, b)``.
    """
    rhs = np.asarray(b, dtype=np.uint8).reshape(-1) & 1
    if rhs.size != m.rows:
        raise ContractViolation(f"right-hand side has length {rhs.size}, expected {m.rows}")
    augmented = m.hstack(F2Matrix.from_columns([rhs], rows=m.rows))
    ech = row_echelon(augmented)
    if ech.pivots and ech.pivots[-1] == m.cols:
        return None
    x = np.zeros(m.cols, dtype=np.uint8)
    for i, col in enumerate(ech.pivots):
        x[col] = ech.matrix[i, m.cols]
    return x
