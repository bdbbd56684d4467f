"""Linear algebra on bidiagonal decompositions of totally positive matrices.

Systems A x = c are solved by running substitutions through the bidiagonal
factors one at a time.  When the right-hand side alternates in sign, the
whole solve is conjugated by diag((-1)^(i-1)): the substituted system has a
constant-sign right-hand side and nonnegative factor data, so every two-term
update adds numbers of the same sign and no cancellation occurs.  That is
what makes solves, inverses and the smallest singular value come out with
relative errors of machine-precision order even for extremely
ill-conditioned matrices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .bd import BDMatrix
from .dense import Matrix, Scalar, alternate_sign_rows, alternate_signs, one_like, zero_like
from .errors import (
    LengthMismatchError,
    SingularPivotError,
    UnorderedNodesError,
)
from .newton import NodeSequence, Ordering, bd_newton, bd_newton_j


class SignPattern(enum.Enum):
    ALTERNATING_FROM_PLUS = "alternating+"
    ALTERNATING_FROM_MINUS = "alternating-"
    OTHER = "other"


@dataclass(frozen=True)
class SignedVector:
    entries: tuple
    sign_pattern: SignPattern

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def alternating(self) -> bool:
        return self.sign_pattern is not SignPattern.OTHER


def classify_signs(entries: Sequence[Scalar]) -> SignedVector:
    """Tag a vector with its sign structure (zeros mean no structure)."""
    vals = tuple(entries)
    pattern = SignPattern.OTHER
    if vals and all(v != 0 for v in vals):
        start_positive = vals[0] > 0
        if all((v > 0) == (start_positive == (i % 2 == 0)) for i, v in enumerate(vals)):
            pattern = (
                SignPattern.ALTERNATING_FROM_PLUS
                if start_positive
                else SignPattern.ALTERNATING_FROM_MINUS
            )
    return SignedVector(vals, pattern)


def _substitute(bd: BDMatrix, rhs: Sequence[Scalar], conjugated: bool) -> list:
    """Solve (core product) x = rhs through the factors.

    ``conjugated`` runs the sign-flipped system diag(J) A diag(J) y = rhs,
    in which every substitution update is an addition.
    """
    order = bd.order
    grid = bd.entries
    x = list(rhs)
    sign = -1 if not conjugated else 1
    # forward substitution through F_n, ..., F_1
    for i in range(order - 1, 0, -1):
        for r in range(i + 1, order + 1):
            sub = grid[r - 1][r - i - 1]
            if sub != 0:
                x[r - 1] = x[r - 1] + sign * (sub * x[r - 2])
    for r in range(order):
        pivot = grid[r][r]
        if pivot == 0:
            raise SingularPivotError(f"pivot {r + 1} is zero")
        x[r] = x[r] / pivot
    # back substitution through G_1, ..., G_n
    for i in range(1, order):
        for r in range(order, i, -1):
            sup = grid[r - i - 1][r - 1]
            if sup != 0:
                x[r - 2] = x[r - 2] + sign * (sup * x[r - 1])
    return x


def tn_solve(bd: BDMatrix, rhs: SignedVector) -> tuple[list, bool]:
    """Solve (assembled matrix) x = rhs.

    Returns the solution and a flag telling whether the subtraction-free
    conjugated path applied (true exactly when the right-hand side
    alternates).  Non-alternating right-hand sides are still solved, with no
    accuracy certificate.
    """
    if len(rhs) != bd.order:
        raise LengthMismatchError(
            f"right-hand side length {len(rhs)} != order {bd.order}"
        )
    if rhs.alternating:
        flipped = alternate_signs(rhs.entries)
        solution = alternate_signs(_substitute(bd, flipped, conjugated=True))
        return solution, True
    return _substitute(bd, rhs.entries, conjugated=False), False


def solve_newton_interpolation(nodes: NodeSequence, data: SignedVector):
    """Coefficients of the Newton form of the interpolant through
    (t_i, data_i), via the decomposition route.

    Increasing nodes solve L d = f directly.  Decreasing nodes solve the
    sign-conjugated system (L J) c = f and return d = J c.
    """
    from .interp import NewtonInterpolant

    if len(data) != len(nodes):
        raise LengthMismatchError(f"{len(data)} data values for {len(nodes)} nodes")
    if nodes.ordering is Ordering.STRICTLY_INCREASING:
        coeffs, hra = tn_solve(bd_newton(nodes), data)
    elif nodes.ordering is Ordering.STRICTLY_DECREASING:
        conjugate, hra = tn_solve(bd_newton_j(nodes), data)
        coeffs = alternate_signs(conjugate)
    else:
        raise UnorderedNodesError("interpolation solve requires monotone nodes")
    return NewtonInterpolant(
        nodes=nodes, coefficients=tuple(coeffs), hra_flag=hra
    )


def tn_inverse(bd: BDMatrix) -> Matrix:
    """Inverse, column by column, through the conjugated solves.

    A canonical basis vector trivially satisfies the same-sign requirement
    (each substitution step adds at most one nonzero term), so every column
    comes out entrywise accurate.  For parity-flagged decompositions the
    result is the inverse of the natural (unflagged) matrix, obtained by
    flipping every other row of the inverse of the represented one.
    """
    order = bd.order
    zero = zero_like(bd.entries[0][0])
    one = one_like(bd.entries[0][0])
    columns = []
    for j in range(order):
        rhs = [zero] * order
        rhs[j] = one if j % 2 == 0 else -one
        column = alternate_signs(_substitute(bd, rhs, conjugated=True))
        columns.append(column)
    inverse = [list(row) for row in zip(*columns)]
    if bd.parity:
        inverse = alternate_sign_rows(inverse)
    return inverse


def smallest_singular_value(bd: BDMatrix, max_iter_factor: int = 100) -> float:
    """Smallest singular value, as the reciprocal of the largest singular
    value of the entrywise-accurate inverse.

    The largest singular value is a normwise well-conditioned quantity, so
    the dense QR-iteration estimate of it is accurate to machine order and
    the reciprocal inherits the relative accuracy of the inverse,
    independent of the conditioning.  Parity-flagged input yields the same
    value since sign flips are orthogonal.
    """
    from .baselines import singular_values

    inverse = tn_inverse(bd)
    rows = [[float(v) for v in row] for row in inverse]
    largest = singular_values(rows, max_iter_factor=max_iter_factor)[0]
    return 1.0 / largest
