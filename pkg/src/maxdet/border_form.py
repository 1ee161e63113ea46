"""Bilinear form for the determinant of a matrix bordered by one row and column.

For an ``n x n`` matrix ``A`` and border vectors ``x`` (new row), ``y`` (new
column) and corner ``z``::

    det [[A, y], [x, z]] = z * det(A) + sum_ij coeffs[i][j] * x[i] * y[j]

which follows from ``det = z det(A) - x^T adj(A) y``, so ``coeffs`` is the
negated adjugate entry for entry. The identity is polynomial in the entries and
holds for singular ``A`` too.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError
from .exact_linalg import DEFAULT_WIDTH, BinaryMatrix, IntMatrix, adjugate, check_int, det_bareiss


@dataclass(frozen=True)
class BorderAssignment:
    """Values of the new row ``x``, the new column ``y`` and the corner ``z``."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    z: int = 1

    def __post_init__(self):
        x = tuple(int(v) for v in self.x)
        y = tuple(int(v) for v in self.y)
        if len(x) != len(y):
            raise DimensionMismatchError(f"x has length {len(x)} but y has length {len(y)}")
        if any(v not in (0, 1) for v in x + y + (self.z,)):
            raise ValueError("border components must be 0 or 1")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", int(self.z))

    @property
    def n(self) -> int:
        return len(self.x)

    def paper_key(self) -> tuple[int, ...]:
        """Position in the search order: ``(x_n, y_n, x_{n-1}, y_{n-1}, ..., x_1, y_1)``."""
        return tuple(v for i in reversed(range(self.n)) for v in (self.x[i], self.y[i]))

    @classmethod
    def from_paper_index(cls, index: int, n: int, z: int = 1):
        """Inverse of ``paper_index``: bit ``2i+1`` holds ``x[i]``, bit ``2i`` holds ``y[i]``."""
        x = tuple((index >> (2 * i + 1)) & 1 for i in range(n))
        y = tuple((index >> (2 * i)) & 1 for i in range(n))
        return cls(x, y, z)

    def paper_index(self) -> int:
        return sum((xi << (2 * i + 1)) | (yi << (2 * i)) for i, (xi, yi) in enumerate(zip(self.x, self.y)))


@dataclass(frozen=True)
class BorderForm:
    """Base determinant plus the coefficient matrix of the bilinear part.

    ``coeffs[i][j]`` multiplies ``x[i] * y[j]``.
    """

    base_det: int
    coeffs: IntMatrix

    @property
    def n(self) -> int:
        return self.coeffs.n

    def coeff_array(self) -> np.ndarray:
        return self.coeffs.to_array()


def build_border_form(a, width: int | None = DEFAULT_WIDTH) -> BorderForm:
    """Border form of ``a``; singular ``a`` is accepted."""
    adj = adjugate(a, width)
    n = adj.n
    coeffs = IntMatrix(tuple(tuple(-adj[i, j] for j in range(n)) for i in range(n)))
    return BorderForm(base_det=det_bareiss(a, width), coeffs=coeffs)


def _check_dims(n: int, asg: BorderAssignment):
    if asg.n != n:
        raise DimensionMismatchError(f"assignment of length {asg.n} for dimension {n}")


def bordered_det(a: BinaryMatrix, asg: BorderAssignment, width: int | None = DEFAULT_WIDTH) -> int:
    """Determinant of the bordered matrix, computed directly."""
    if not isinstance(a, BinaryMatrix):
        a = BinaryMatrix.from_rows(a)
    _check_dims(a.n, asg)
    return det_bareiss(a.bordered(asg.x, asg.y, asg.z), width)


def eval_border_form(f: BorderForm, asg: BorderAssignment, width: int | None = DEFAULT_WIDTH) -> int:
    _check_dims(f.n, asg)
    total = asg.z * f.base_det
    for i, xi in enumerate(asg.x):
        if xi:
            row = f.coeffs.rows[i]
            total += sum(c for c, yj in zip(row, asg.y) if yj)
    return check_int(total, width)


def bilinear_value(coeffs: Sequence[Sequence[int]], x: Sequence[int], y: Sequence[int]) -> int:
    """``x^T coeffs y`` with plain integers."""
    return sum(c for xi, row in zip(x, coeffs) if xi for c, yj in zip(row, y) if yj)
