"""Bit-packed matrices over the two-element field.

Rows are stored as numpy ``uint64`` words; column ``j`` lives in word
``j // 64`` at bit ``j % 64``. Elimination XORs whole word slices, so the
cost of a row operation is ``cols / 64`` machine words.

Vectors at the public boundary are 1-D numpy ``uint8`` arrays of 0/1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from charclass.errors import ContractViolation

WORD_BITS = 64
_ONE = np.uint64(1)


def _n_words(cols: int) -> int:
    return (cols + WORD_BITS - 1) // WORD_BITS


def pack_vector(bits: Sequence[int] | np.ndarray, cols: int) -> np.ndarray:
    """Pack a 0/1 vector of length ``cols`` into words."""
    dense = np.asarray(bits, dtype=np.uint8).reshape(-1) & 1
    if dense.size != cols:
        raise ContractViolation(f"vector length {dense.size} does not match {cols} columns")
    if cols == 0:
        return np.zeros(0, dtype=np.uint64)
    padded = np.zeros(_n_words(cols) * WORD_BITS, dtype=np.uint8)
    padded[:cols] = dense
    as_bytes = np.packbits(padded.reshape(-1, 8), axis=1, bitorder="little").reshape(-1)
    return as_bytes.view("<u8").astype(np.uint64)


def unpack_vector(words: np.ndarray, cols: int) -> np.ndarray:
    """Inverse of :func:`pack_vector`."""
    if cols == 0:
        return np.zeros(0, dtype=np.uint8)
    as_bytes = np.ascontiguousarray(words, dtype="<u8").view(np.uint8)
    bits = np.unpackbits(as_bytes, bitorder="little")
    return bits[:cols].astype(np.uint8)


def _bit(words: np.ndarray, col: int) -> bool:
    w, b = divmod(col, WORD_BITS)
    return bool((words[w] >> np.uint64(b)) & _ONE)


@dataclass(frozen=True, eq=False)
class F2Matrix:
    """Immutable ``rows x cols`` matrix over F2 with bit-packed rows."""

    rows: int
    cols: int
    words: np.ndarray

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ContractViolation("matrix dimensions must be nonnegative")
        expected = (self.rows, _n_words(self.cols))
        if self.words.shape != expected or self.words.dtype != np.uint64:
            raise ContractViolation(f"packed storage must be uint64 of shape {expected}")
        self.words.setflags(write=False)

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> F2Matrix:
        return cls(rows, cols, np.zeros((rows, _n_words(cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls.from_supports(([i] for i in range(n)), rows=n, cols=n)

    @classmethod
    def from_rows(cls, dense: Sequence[Sequence[int]] | np.ndarray, cols: Optional[int] = None) -> F2Matrix:
        """Build from a dense 0/1 array; entries are reduced mod 2."""
        arr = np.asarray(dense, dtype=np.int64)
        if arr.size == 0:
            n_rows = arr.shape[0] if arr.ndim >= 1 else 0
            return cls.zeros(n_rows, cols or (arr.shape[1] if arr.ndim == 2 else 0))
        if arr.ndim != 2:
            raise ContractViolation("dense input must be two-dimensional")
        n_rows, n_cols = arr.shape
        words = np.zeros((n_rows, _n_words(n_cols)), dtype=np.uint64)
        for i in range(n_rows):
            words[i] = pack_vector(arr[i] & 1, n_cols)
        return cls(n_rows, n_cols, words)

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], rows: int, cols: int) -> F2Matrix:
        """Build from per-row column indices; repeated indices cancel mod 2."""
        words = np.zeros((rows, _n_words(cols)), dtype=np.uint64)
        for i, support in enumerate(supports):
            if i >= rows:
                raise ContractViolation(f"more than {rows} rows supplied")
            for j in support:
                if not 0 <= j < cols:
                    raise ContractViolation(f"column index {j} out of range for {cols} columns")
                w, b = divmod(j, WORD_BITS)
                words[i, w] ^= _ONE << np.uint64(b)
        return cls(rows, cols, words)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int] | np.ndarray], rows: int) -> F2Matrix:
        """Build from dense 0/1 column vectors of length ``rows``."""
        if not columns:
            return cls.zeros(rows, 0)
        dense = np.stack([np.asarray(c, dtype=np.int64).reshape(-1) for c in columns], axis=1)
        if dense.shape[0] != rows:
            raise ContractViolation(f"columns must have length {rows}")
        return cls.from_rows(dense, cols=len(columns))

    # -- access -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i in range(self.rows):
            out[i] = unpack_vector(self.words[i], self.cols)
        return out

    def row(self, i: int) -> np.ndarray:
        return unpack_vector(self.words[i], self.cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(index)
        return int(_bit(self.words[i], j))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"F2Matrix({self.rows}x{self.cols})"

    def is_zero(self) -> bool:
        return not self.words.any()

    # -- arithmetic ---------------------------------------------------

    def transpose(self) -> F2Matrix:
        return F2Matrix.from_rows(self.to_dense().T, cols=self.rows)

    def matvec(self, v: Sequence[int] | np.ndarray) -> np.ndarray:
        """Return ``self @ v`` over F2."""
        packed = pack_vector(v, self.cols)
        if self.rows == 0:
            return np.zeros(0, dtype=np.uint8)
        anded = self.words & packed
        parity = np.zeros(self.rows, dtype=np.uint8)
        for w in range(anded.shape[1]):
            parity ^= _popcount_parity(anded[:, w])
        return parity

    def __matmul__(self, other: F2Matrix) -> F2Matrix:
        if self.cols != other.rows:
            raise ContractViolation(f"cannot multiply {self.shape} by {other.shape}")
        out = np.zeros((self.rows, _n_words(other.cols)), dtype=np.uint64)
        for i in range(self.rows):
            acc = np.zeros(_n_words(other.cols), dtype=np.uint64)
            for k in np.flatnonzero(unpack_vector(self.words[i], self.cols)):
                acc ^= other.words[k]
            out[i] = acc
        return F2Matrix(self.rows, other.cols, out)

    def __add__(self, other: F2Matrix) -> F2Matrix:
        if self.shape != other.shape:
            raise ContractViolation(f"cannot add {self.shape} and {other.shape}")
        return F2Matrix(self.rows, self.cols, self.words ^ other.words)

    def hstack(self, other: F2Matrix) -> F2Matrix:
        if self.rows != other.rows:
            raise ContractViolation("hstack needs equal row counts")
        dense = np.hstack([self.to_dense(), other.to_dense()])
        return F2Matrix.from_rows(dense, cols=self.cols + other.cols)


def _popcount_parity(words: np.ndarray) -> np.ndarray:
    """Parity of the population count of each uint64 word."""
    x = words.copy()
    for shift in (32, 16, 8, 4, 2, 1):
        x ^= x >> np.uint64(shift)
    return (x & _ONE).astype(np.uint8)
