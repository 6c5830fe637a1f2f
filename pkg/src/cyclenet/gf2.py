"""Dense linear algebra over GF(2).

Rows and vectors are packed into Python integers: bit ``j`` of a row holds
column ``j``.  Row addition is a single xor on arbitrary-width ints, which is
the word-parallel speedup the homology code relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BitVector",
    "BitMatrix",
    "EchelonBasis",
    "rank",
    "rref",
    "null_space_basis",
    "column_space_basis",
    "multiply",
    "reduce_mod_subspace",
]


def _lowbit_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def _bits_of(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


@dataclass(frozen=True)
class BitVector:
    """Fixed-length vector over GF(2); ``+`` and ``^`` are both xor."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits outside vector length")

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise IndexError(f"index {i} out of range for length {length}")
            bits ^= 1 << i
        return cls(length, bits)

    @classmethod
    def from_array(cls, values: Sequence[int]) -> "BitVector":
        return cls.from_support(len(values), (i for i, x in enumerate(values) if int(x) & 1))

    def support(self) -> list[int]:
        return _bits_of(self.bits)

    def to_array(self) -> np.ndarray:
        out = np.zeros(self.length, dtype=np.uint8)
        out[self.support()] = 1
        return out

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def _check(self, other: "BitVector") -> None:
        if not isinstance(other, BitVector):
            raise TypeError("expected BitVector")
        if other.length != self.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.length))


@dataclass(frozen=True)
class BitMatrix:
    """Dense ``n_rows x n_cols`` matrix over GF(2), stored as packed rows."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n_rows:
            raise ValueError("row count does not match n_rows")
        limit = 1 << self.n_cols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits outside n_cols")

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_dense(cls, array) -> "BitMatrix":
        a = np.asarray(array)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        n_rows, n_cols = a.shape
        rows = []
        for i in range(n_rows):
            rows.append(BitVector.from_array(a[i]).bits)
        return cls(n_rows, n_cols, tuple(rows))

    @classmethod
    def from_columns(cls, n_rows: int, columns: Sequence[BitVector]) -> "BitMatrix":
        rows = [0] * n_rows
        for j, col in enumerate(columns):
            if col.length != n_rows:
                raise ValueError("column length does not match n_rows")
            for i in col.support():
                rows[i] |= 1 << j
        return cls(n_rows, len(columns), tuple(rows))

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def row(self, i: int) -> BitVector:
        return BitVector(self.n_cols, self.rows[i])

    def column(self, j: int) -> BitVector:
        if not 0 <= j < self.n_cols:
            raise IndexError(j)
        bits = 0
        for i, r in enumerate(self.rows):
            if (r >> j) & 1:
                bits |= 1 << i
        return BitVector(self.n_rows, bits)

    def columns(self) -> list[BitVector]:
        return self.transpose().row_vectors()

    def row_vectors(self) -> list[BitVector]:
        return [BitVector(self.n_cols, r) for r in self.rows]

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.n_cols
        for i, r in enumerate(self.rows):
            for j in _bits_of(r):
                cols[j] |= 1 << i
        return BitMatrix(self.n_cols, self.n_rows, tuple(cols))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            out[i, _bits_of(r)] = 1
        return out

    def apply(self, v: BitVector) -> BitVector:
        """Matrix-vector product ``M v``."""
        if v.length != self.n_cols:
            raise ValueError(f"vector length {v.length} != n_cols {self.n_cols}")
        bits = 0
        for i, r in enumerate(self.rows):
            if (r & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(self.n_rows, bits)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return multiply(self, other)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(key)
        return (self.rows[i] >> j) & 1

    def __str__(self) -> str:
        # debug dump: one line of 0/1 characters per row
        return "\n".join(str(BitVector(self.n_cols, r)) for r in self.rows)


class EchelonBasis:
    """Fully reduced echelon basis of a subspace, keyed by pivot column.

    The pivot of a stored vector is its lowest set bit (leftmost column), and
    no stored vector has a bit at another vector's pivot.  Because reduced
    row-echelon form is unique for a given span, :meth:`reduce` returns a
    canonical coset representative independent of how the span was supplied.
    """

    def __init__(self, length: int, vectors: Iterable[BitVector | int] = ()):
        self.length = length
        self._pivots: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def _raw(self, v: BitVector | int) -> int:
        if isinstance(v, BitVector):
            if v.length != self.length:
                raise ValueError(f"length mismatch: {v.length} != {self.length}")
            return v.bits
        return int(v)

    def _reduce_raw(self, x: int) -> int:
        # rows are mutually reduced, so the order of application is irrelevant
        for p in self._pivots:
            if (x >> p) & 1:
                x ^= self._pivots[p]
        return x

    def add(self, v: BitVector | int) -> bool:
        """Insert ``v``; return True iff it enlarged the span."""
        x = self._reduce_raw(self._raw(v))
        if not x:
            return False
        p = _lowbit_index(x)
        for q, row in self._pivots.items():
            if (row >> p) & 1:
                self._pivots[q] = row ^ x
        self._pivots[p] = x
        return True

    def reduce(self, v: BitVector) -> BitVector:
        return BitVector(self.length, self._reduce_raw(self._raw(v)))

    def contains(self, v: BitVector) -> bool:
        return self._reduce_raw(self._raw(v)) == 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def pivots(self) -> list[int]:
        return sorted(self._pivots)

    def vectors(self) -> list[BitVector]:
        return [BitVector(self.length, self._pivots[p]) for p in sorted(self._pivots)]


def rank(m: BitMatrix) -> int:
    """Rank over GF(2)."""
    pivots: dict[int, int] = {}
    for r in m.rows:
        while r:
            low = r & -r
            hit = pivots.get(low)
            if hit is None:
                pivots[low] = r
                break
            r ^= hit
    return len(pivots)


def rref(m: BitMatrix) -> tuple[list[int], list[int]]:
    """Reduced row-echelon form of ``m``.

    Returns ``(rows, pivot_columns)`` with nonzero rows ordered by pivot
    column, ascending.
    """
    basis = EchelonBasis(m.n_cols, m.rows)
    piv = basis.pivots()
    return [basis._pivots[p] for p in piv], piv


def null_space_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of ``{v : m v = 0}``, one vector per free column in column order."""
    rows, piv = rref(m)
    pivot_set = set(piv)
    out = []
    for f in range(m.n_cols):
        if f in pivot_set:
            continue
        bits = 1 << f
        for p, row in zip(piv, rows):
            if (row >> f) & 1:
                bits |= 1 << p
        out.append(BitVector(m.n_cols, bits))
    return out


def column_space_basis(m: BitMatrix) -> list[BitVector]:
    """The columns of ``m`` sitting at pivot positions of its echelon form."""
    _, piv = rref(m)
    return [m.column(j) for j in piv]


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.n_cols != b.n_rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    out = []
    for r in a.rows:
        acc = 0
        for j in _bits_of(r):
            acc ^= b.rows[j]
        out.append(acc)
    return BitMatrix(a.n_rows, b.n_cols, tuple(out))


def reduce_mod_subspace(v: BitVector, basis: Sequence[BitVector]) -> BitVector:
    """Canonical representative of ``v + span(basis)``; zero iff ``v`` is in the span."""
    for b in basis:
        if b.length != v.length:
            raise ValueError(f"length mismatch: {b.length} != {v.length}")
    return EchelonBasis(v.length, basis).reduce(v)
