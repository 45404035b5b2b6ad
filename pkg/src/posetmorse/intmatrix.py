"""Dense exact integer matrices.

Python ints are arbitrary precision, so every computation here is exact by
construction; no floating point is used anywhere in the library.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class IntMatrix:
    """An immutable dense matrix with integer entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Iterable[Sequence[int]]):
        table = tuple(tuple(int(v) for v in row) for row in data)
        if len(table) != rows or any(len(r) != cols for r in table):
            raise ValueError(f"shape mismatch: expected {rows}x{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", table)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        return cls(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        cols = len(columns)
        return cls(rows, cols, [[columns[j][i] for j in range(cols)] for i in range(rows)])

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        ot = other.data
        out = []
        for row in self.data:
            out.append([
                sum(row[k] * ot[k][j] for k in range(self.cols))
                for j in range(other.cols)
            ])
        return IntMatrix(self.rows, other.cols, out)

    def mul_vec(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum(row[k] * vec[k] for k in range(self.cols)) for row in self.data]

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.data]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.data for v in row)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.data]

    def scaled(self, factor: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         [[factor * v for v in row] for row in self.data])

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shapes differ")
        return IntMatrix(self.rows, self.cols,
                         [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + other.scaled(-1)


def determinant(matrix: IntMatrix) -> int:
    """Exact determinant via the fraction-free Bareiss elimination."""
    if matrix.rows != matrix.cols:
        raise ValueError("determinant needs a square matrix")
    n = matrix.rows
    if n == 0:
        return 1
    a = matrix.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
