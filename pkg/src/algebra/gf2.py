"""
Dense linear algebra over GF(2).

Rows are bit-packed into Python integers: bit ``k - 1`` of a row holds column
``k``. Every index in the public interface is 1-based so that lattice labels
``i, j in {1..L}`` carry over without shifting.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.errors import LatticeIndexError, NotInvertibleError, ShapeError


def _popcount(value: int) -> int:
    return bin(value).count('1')


def _pack(values: Iterable[int]) -> int:
    packed = 0
    for k in np.flatnonzero(np.asarray(list(values), dtype=np.int64) % 2):
        packed |= 1 << int(k)
    return packed


def _set_bits(value: int) -> List[int]:
    """0-based positions of the set bits of ``value``, ascending."""
    positions = []
    while value:
        low = value & -value
        positions.append(low.bit_length() - 1)
        value ^= low
    return positions


@dataclass(frozen=True)
class BitVec:
    """A vector over GF(2); addition is XOR."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ShapeError(f"BitVec length must be non-negative, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ShapeError(f"bits {self.bits:b} do not fit in length {self.length}")

    @classmethod
    def zeros(cls, length: int) -> 'BitVec':
        return cls(length, 0)

    @classmethod
    def from_bits(cls, values: Sequence[int]) -> 'BitVec':
        """Build from an ordered sequence of 0/1 values (first value is index 1)."""
        values = list(values)
        return cls(len(values), _pack(values))

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> 'BitVec':
        """Build the vector that is 1 exactly on the given 1-based indices."""
        packed = 0
        for index in support:
            if not 1 <= index <= length:
                raise LatticeIndexError(f"index {index} outside 1..{length}")
            packed |= 1 << (index - 1)
        return cls(length, packed)

    @classmethod
    def from_string(cls, text: str) -> 'BitVec':
        text = text.strip()
        if any(ch not in '01' for ch in text):
            raise ShapeError(f"not a bit string: {text!r}")
        return cls.from_bits([int(ch) for ch in text])

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, index: int) -> int:
        if not 1 <= index <= self.length:
            raise LatticeIndexError(f"index {index} outside 1..{self.length}")
        return (self.bits >> (index - 1)) & 1

    def _check(self, other: 'BitVec') -> None:
        if self.length != other.length:
            raise ShapeError(f"length mismatch: {self.length} vs {other.length}")

    def __add__(self, other: 'BitVec') -> 'BitVec':
        self._check(other)
        return BitVec(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def __and__(self, other: 'BitVec') -> 'BitVec':
        self._check(other)
        return BitVec(self.length, self.bits & other.bits)

    def dot(self, other: 'BitVec') -> int:
        """Inner product mod 2."""
        self._check(other)
        return _popcount(self.bits & other.bits) & 1

    @property
    def weight(self) -> int:
        return _popcount(self.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> Tuple[int, ...]:
        """1-based indices of the nonzero entries, ascending."""
        return tuple(k + 1 for k in _set_bits(self.bits))

    def to_list(self) -> List[int]:
        return [(self.bits >> k) & 1 for k in range(self.length)]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_list(), dtype=np.uint8)

    def dump(self) -> str:
        return ''.join(str(b) for b in self.to_list())


@dataclass(frozen=True)
class BitMat:
    """A dense rows x cols matrix over GF(2), one packed integer per row."""

    rows: int
    cols: int
    data: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"invalid shape {self.rows}x{self.cols}")
        if len(self.data) != self.rows:
            raise ShapeError(f"expected {self.rows} rows, got {len(self.data)}")
        for row in self.data:
            if row < 0 or row >> self.cols:
                raise ShapeError(f"row {row:b} does not fit in {self.cols} columns")

    # -- construction -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'BitMat':
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> 'BitMat':
        return cls(n, n, tuple(1 << k for k in range(n)))

    @classmethod
    def from_array(cls, values) -> 'BitMat':
        arr = np.asarray(values, dtype=np.int64) % 2
        if arr.ndim != 2:
            raise ShapeError(f"expected a 2-D array, got {arr.ndim} dimensions")
        rows, cols = arr.shape
        return cls(rows, cols, tuple(_pack(arr[r]) for r in range(rows)))

    @classmethod
    def from_rows(cls, rows: Sequence[BitVec], cols: int = None) -> 'BitMat':
        if cols is None:
            if not rows:
                raise ShapeError('column count required for an empty row list')
            cols = rows[0].length
        for vec in rows:
            if vec.length != cols:
                raise ShapeError(f"row length {vec.length} != {cols}")
        return cls(len(rows), cols, tuple(vec.bits for vec in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[BitVec], rows: int = None) -> 'BitMat':
        if rows is None:
            if not columns:
                raise ShapeError('row count required for an empty column list')
            rows = columns[0].length
        data = [0] * rows
        for c, vec in enumerate(columns):
            if vec.length != rows:
                raise ShapeError(f"column length {vec.length} != {rows}")
            for r in _set_bits(vec.bits):
                data[r] |= 1 << c
        return cls(rows, len(columns), tuple(data))

    @classmethod
    def from_text(cls, text: str) -> 'BitMat':
        """Parse the plain-text dump format: one row of '0'/'1' characters per line."""
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if not lines:
            return cls.zeros(0, 0)
        return cls.from_rows([BitVec.from_string(line) for line in lines])

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def _check_index(self, i: int, j: int) -> None:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise LatticeIndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")

    def get(self, i: int, j: int) -> int:
        self._check_index(i, j)
        return (self.data[i - 1] >> (j - 1)) & 1

    def row(self, i: int) -> BitVec:
        if not 1 <= i <= self.rows:
            raise LatticeIndexError(f"row {i} outside 1..{self.rows}")
        return BitVec(self.cols, self.data[i - 1])

    def col(self, j: int) -> BitVec:
        if not 1 <= j <= self.cols:
            raise LatticeIndexError(f"column {j} outside 1..{self.cols}")
        mask = 1 << (j - 1)
        packed = 0
        for r, row in enumerate(self.data):
            if row & mask:
                packed |= 1 << r
        return BitVec(self.rows, packed)

    def columns(self) -> List[BitVec]:
        return [self.col(j) for j in range(1, self.cols + 1)]

    def to_array(self) -> np.ndarray:
        arr = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for r, row in enumerate(self.data):
            for c in _set_bits(row):
                arr[r, c] = 1
        return arr

    def nonzero_count(self) -> int:
        return sum(_popcount(row) for row in self.data)

    # -- algebra ------------------------------------------------------------

    def transpose(self) -> 'BitMat':
        return BitMat.from_array(self.to_array().T.reshape(self.cols, self.rows))

    @property
    def T(self) -> 'BitMat':
        return self.transpose()

    def __add__(self, other: 'BitMat') -> 'BitMat':
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")
        return BitMat(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    def __and__(self, other: 'BitMat') -> 'BitMat':
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")
        return BitMat(self.rows, self.cols, tuple(a & b for a, b in zip(self.data, other.data)))

    def __matmul__(self, other: 'BitMat') -> 'BitMat':
        return gf2_matmul(self, other)

    def is_zero(self) -> bool:
        return not any(self.data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()

    def has_zero_diagonal(self) -> bool:
        return all(not (row >> k) & 1 for k, row in enumerate(self.data[: min(self.rows, self.cols)]))

    def rank(self) -> int:
        return gf2_rank(self)

    def inverse(self) -> 'BitMat':
        return gf2_invert(self)

    def is_invertible(self) -> bool:
        return self.is_square() and gf2_rank(self) == self.rows

    def dump(self) -> str:
        """Plain-text dump, one row of '0'/'1' characters per line."""
        return '\n'.join(BitVec(self.cols, row).dump() for row in self.data)


def gf2_matmul(a: BitMat, b: BitMat) -> BitMat:
    """Product over GF(2): row r of the result is the XOR of the rows of b selected by row r of a."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for row in a.data:
        acc = 0
        for k in _set_bits(row):
            acc ^= b.data[k]
        out.append(acc)
    return BitMat(a.rows, b.cols, tuple(out))


def gf2_rank(m: BitMat) -> int:
    """Rank over GF(2) by Gaussian elimination on the packed rows."""
    work = list(m.data)
    rank = 0
    for col in range(m.cols):
        bit = 1 << col
        pivot = next((r for r in range(rank, len(work)) if work[r] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r] & bit:
                work[r] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def gf2_invert(m: BitMat) -> BitMat:
    """Gauss-Jordan inverse; raises NotInvertibleError for singular input."""
    if not m.is_square():
        raise ShapeError(f"only square matrices are invertible, got {m.rows}x{m.cols}")
    n = m.rows
    left = list(m.data)
    right = [1 << k for k in range(n)]
    for col in range(n):
        bit = 1 << col
        pivot = next((r for r in range(col, n) if left[r] & bit), None)
        if pivot is None:
            raise NotInvertibleError(f"matrix is singular (rank {gf2_rank(m)} < {n})")
        left[col], left[pivot] = left[pivot], left[col]
        right[col], right[pivot] = right[pivot], right[col]
        for r in range(n):
            if r != col and left[r] & bit:
                left[r] ^= left[col]
                right[r] ^= right[col]
    return BitMat(n, n, tuple(right))


def block_diag(a: BitMat, b: BitMat) -> BitMat:
    """The block-diagonal matrix diag(a, b)."""
    rows = [row for row in a.data] + [row << a.cols for row in b.data]
    return BitMat(a.rows + b.rows, a.cols + b.cols, tuple(rows))
