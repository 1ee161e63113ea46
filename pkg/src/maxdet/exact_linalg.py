"""Exact integer determinants and adjugates for small dense matrices.

Every routine works on plain Python integers. By default intermediate values
are checked against a signed 64-bit range and an ``ArithmeticOverflowError``
is raised instead of wrapping; pass ``width=None`` for unbounded integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ArithmeticOverflowError, DimensionMismatchError, SizeGuardError

DEFAULT_WIDTH = 64
COFACTOR_MAX_N = 8


def check_int(value: int, width: int | None = DEFAULT_WIDTH) -> int:
    """Return ``value`` unchanged, raising if it does not fit a signed ``width``-bit word."""
    if width is not None:
        limit = 1 << (width - 1)
        if not -limit <= value < limit:
            raise ArithmeticOverflowError(
                f"integer {value} does not fit in {width}-bit signed arithmetic"
            )
    return value


def _as_rows(m) -> list[list[int]]:
    if isinstance(m, IntMatrix):
        return [list(r) for r in m.rows]
    rows = [[int(v) for v in r] for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatchError(f"matrix is not square: row lengths {[len(r) for r in rows]}")
    return rows


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix of exact signed integers, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatchError("matrix is not square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]):
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def transpose(self):
        return type(self)(tuple(zip(*self.rows)) if self.rows else ())

    def to_array(self, dtype=np.int64) -> np.ndarray:
        return np.array(self.rows, dtype=dtype).reshape(self.n, self.n)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if other.n != self.n:
            raise DimensionMismatchError("dimension mismatch in matrix product")
        cols = list(zip(*other.rows))
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows)
        )

    def scaled_identity(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(k * int(i == j) for j in range(self.n)) for i in range(self.n)))


@dataclass(frozen=True)
class BinaryMatrix(IntMatrix):
    """Square matrix with entries in {0, 1} and dimension at least 1."""

    def __post_init__(self):
        super().__post_init__()
        if self.n < 1:
            raise DimensionMismatchError("a BinaryMatrix needs n >= 1")
        for r in self.rows:
            for v in r:
                if v not in (0, 1):
                    raise ValueError(f"entry {v} is not 0 or 1")

    @classmethod
    def from_strings(cls, lines: Sequence[str]):
        return cls(tuple(tuple(int(c) for c in line) for line in lines))

    def to_strings(self) -> list[str]:
        return ["".join(str(v) for v in r) for r in self.rows]

    def leading_block(self, k: int) -> "BinaryMatrix":
        """Upper-left ``k x k`` block."""
        return BinaryMatrix(tuple(r[:k] for r in self.rows[:k]))

    def bordered(self, x: Sequence[int], y: Sequence[int], z: int = 1) -> "BinaryMatrix":
        """Append the column ``y`` on the right and the row ``(x, z)`` at the bottom."""
        if len(x) != self.n or len(y) != self.n:
            raise DimensionMismatchError(
                f"border vectors of length {len(x)}, {len(y)} for a {self.n}x{self.n} matrix"
            )
        rows = [r + (int(yi),) for r, yi in zip(self.rows, y)]
        rows.append(tuple(int(v) for v in x) + (int(z),))
        return BinaryMatrix(tuple(rows))

    def __str__(self):
        return "\n".join(self.to_strings())


def det_bareiss(m, width: int | None = DEFAULT_WIDTH) -> int:
    """Determinant by fraction-free (Bareiss) elimination.

    The pivot is the first nonzero entry at or below the diagonal; each row
    swap flips the sign. Every division is exact. With ``width`` set, both the
    cross products and the quotients are range-checked.
    """
    a = _as_rows(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = check_int(pivot * row_i[j], width) - check_int(aik * row_k[j], width)
                q, rem = divmod(check_int(num, width), prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return check_int(sign * a[n - 1][n - 1], width)


def det_cofactor(m, max_n: int = COFACTOR_MAX_N) -> int:
    """Determinant by recursive Laplace expansion along the first row.

    Exponential cost, so refused above ``max_n``. Kept independent of
    ``det_bareiss`` on purpose: it is the cross-check.
    """
    a = _as_rows(m)
    if len(a) > max_n:
        raise SizeGuardError(f"cofactor expansion refused for n={len(a)} > {max_n}")
    return _laplace(a)


def _laplace(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = 0
    for j, v in enumerate(a[0]):
        if v:
            minor = [r[:j] + r[j + 1:] for r in a[1:]]
            total += (-1) ** j * v * _laplace(minor)
    return total


def minor(m, i: int, j: int) -> list[list[int]]:
    """Rows of ``m`` with row ``i`` and column ``j`` removed."""
    a = _as_rows(m)
    return [r[:j] + r[j + 1:] for k, r in enumerate(a) if k != i]


def adjugate(m, width: int | None = DEFAULT_WIDTH) -> IntMatrix:
    """Transpose of the cofactor matrix, so that ``m @ adj(m) == det(m) * I``.

    Built entry by entry from Bareiss minors; this handles singular input
    with no special casing.
    """
    a = _as_rows(m)
    n = len(a)
    if n == 1:
        return IntMatrix(((1,),))
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det_bareiss([r[:j] + r[j + 1:] for k, r in enumerate(a) if k != i], width)
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return IntMatrix.from_rows(adj)
