"""Dense matrices as plain lists of rows.

All routines are generic over the scalar type: they work unchanged for
machine floats and for exact rationals (``fractions.Fraction``), which is
how the test oracle reuses the production code paths.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, float, Fraction]
Matrix = list  # list[list[Scalar]], row-major


def one_like(x: Scalar) -> Scalar:
    """Multiplicative identity in the scalar type of ``x``."""
    return type(x)(1)


def zero_like(x: Scalar) -> Scalar:
    return type(x)(0)


def identity(order: int, like: Scalar = 1.0) -> Matrix:
    one = one_like(like)
    zero = zero_like(like)
    return [[one if i == j else zero for j in range(order)] for i in range(order)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    if any(len(row) != len(b) for row in a):
        raise ValueError("incompatible shapes")
    cols = len(b[0])
    out = []
    for i in range(n):
        arow = a[i]
        out.append([sum(arow[k] * b[k][j] for k in range(len(b))) for j in range(cols)])
    return out


def mat_vec(a: Matrix, x: Sequence[Scalar]) -> list:
    if any(len(row) != len(x) for row in a):
        raise ValueError("incompatible shapes")
    return [sum(row[k] * x[k] for k in range(len(x))) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def alternate_signs(x: Sequence[Scalar]) -> list:
    """Multiply by diag(+1, -1, +1, ...), i.e. flip the sign of every odd
    position."""
    return [v if i % 2 == 0 else -v for i, v in enumerate(x)]


def alternate_sign_columns(a: Matrix) -> Matrix:
    """Post-multiply by diag((-1)^(i-1)): flip every other column."""
    return [alternate_signs(row) for row in a]


def alternate_sign_rows(a: Matrix) -> Matrix:
    """Pre-multiply by diag((-1)^(i-1)): flip every other row."""
    return [list(row) if i % 2 == 0 else [-v for v in row] for i, row in enumerate(a)]


def is_lower_triangular(a: Matrix) -> bool:
    return all(a[i][j] == 0 for i in range(len(a)) for j in range(i + 1, len(a)))
