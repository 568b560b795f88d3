"""
F_2-linear maps between bit-vector spaces, stored column-wise as int masks
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import galois
import numpy as np


def parity(v: int) -> int:
    return bin(v).count("1") & 1


@dataclass(frozen=True)
class BitMatrix:
    """rows x len(columns) matrix; column j is the image of basis vector e_j"""

    rows: int
    columns: Tuple[int, ...]

    def __post_init__(self):
        for col in self.columns:
            if col >> self.rows:
                raise ValueError(f"Column {col:#x} does not fit in {self.rows} rows")

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[int]) -> "BitMatrix":
        return cls(rows, tuple(columns))

    @property
    def cols(self) -> int:
        return len(self.columns)

    def apply(self, v: int) -> int:
        """M @ v"""
        out = 0
        j = 0
        while v:
            if v & 1:
                out ^= self.columns[j]
            v >>= 1
            j += 1
        return out

    def pull_back(self, form: int) -> int:
        """The linear form v -> form(M @ v), i.e. form @ M"""
        out = 0
        for j, col in enumerate(self.columns):
            if parity(form & col):
                out |= 1 << j
        return out

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError("Inner dimensions do not match")
        return BitMatrix(self.rows, tuple(self.apply(c) for c in other.columns))

    def to_galois(self) -> galois.FieldArray:
        dense = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for j, col in enumerate(self.columns):
            for i in range(self.rows):
                dense[i, j] = (col >> i) & 1
        return galois.GF2(dense)

    @classmethod
    def from_galois(cls, matrix) -> "BitMatrix":
        dense = np.asarray(matrix, dtype=np.int64)
        rows, cols = dense.shape
        columns = []
        for j in range(cols):
            col = 0
            for i in range(rows):
                if dense[i, j]:
                    col |= 1 << i
            columns.append(col)
        return cls(rows, tuple(columns))

    def inverse(self) -> "BitMatrix":
        if self.rows != self.cols:
            raise ValueError("Only square matrices are invertible")
        try:
            inv = np.linalg.inv(self.to_galois())
        except np.linalg.LinAlgError:
            raise ValueError("Linear map is singular over F_2")
        return BitMatrix.from_galois(inv)
