"""Newton-basis collocation matrices and their bidiagonal decompositions.

For nodes t_1, ..., t_{n+1} the Newton basis is w_0 = 1,
w_j(t) = (t - t_1)...(t - t_j).  Its collocation matrix L is lower
triangular with l[i, j] = w_{j-1}(t_i).  For strictly increasing nodes L is
totally positive and its bidiagonal decomposition has the closed form

    multiplier m[i, j] = prod_{k=1..j-1} (t_i - t_{i-k}) / (t_{i-1} - t_{i-k-1}),
    pivot      p[i]    = prod_{k=1..i-1} (t_i - t_k),

computed below by incremental product updates.  Every operation is a
product, a quotient or a difference of original node values, so no
cancellation of computed quantities ever occurs and each entry comes out
with a relative error of a few units roundoff regardless of conditioning.
"""

from __future__ import annotations

import enum
import sys
from dataclasses import dataclass
from typing import Sequence

from .bd import BDMatrix
from .dense import Matrix, Scalar, one_like, zero_like
from .errors import (
    DuplicateNodesError,
    InputError,
    NotDecreasingError,
    NotIncreasingError,
    SubnormalPivotError,
)


class Ordering(enum.Enum):
    STRICTLY_INCREASING = "increasing"
    STRICTLY_DECREASING = "decreasing"
    UNORDERED = "unordered"


@dataclass(frozen=True)
class NodeSequence:
    """Pairwise-distinct interpolation nodes with their ordering tag."""

    values: tuple
    ordering: Ordering

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def degree(self) -> int:
        """Polynomial degree n (one less than the node count)."""
        return len(self.values) - 1

    def reversed(self) -> "NodeSequence":
        return classify_nodes(tuple(reversed(self.values)))


def classify_nodes(values: Sequence[Scalar]) -> NodeSequence:
    """Validate nodes (exact pairwise distinctness) and tag their ordering."""
    vals = tuple(values)
    if not vals:
        raise InputError("empty node list")
    for a, b in zip(vals, vals[1:]):
        if a == b:
            raise DuplicateNodesError(f"adjacent equal nodes {a!r}")
    if all(a < b for a, b in zip(vals, vals[1:])):
        return NodeSequence(vals, Ordering.STRICTLY_INCREASING)
    if all(a > b for a, b in zip(vals, vals[1:])):
        return NodeSequence(vals, Ordering.STRICTLY_DECREASING)
    seen = sorted(vals)
    for a, b in zip(seen, seen[1:]):
        if a == b:
            raise DuplicateNodesError(f"duplicate node {a!r}")
    return NodeSequence(vals, Ordering.UNORDERED)


def collocation_matrix(nodes: NodeSequence) -> Matrix:
    """Lower triangular L with l[i, j] = (t_i - t_1)...(t_i - t_{j-1}).

    Entries above the diagonal contain the factor (t_i - t_i) and are exact
    zeros, so the full row products already produce the triangle.
    """
    ts = nodes.values
    m = len(ts)
    out = []
    for i in range(m):
        acc = one_like(ts[i])
        row = [acc]
        for j in range(1, m):
            acc = acc * (ts[i] - ts[j - 1])
            row.append(acc)
        out.append(row)
    return out


def _multiplier_rows(ts: Sequence[Scalar]) -> list:
    # m[i, 1] = 1 and m[i, j] = m[i, j-1] * M with the fresh ratio
    # M = (t_i - t_{i-j+1}) / (t_{i-1} - t_{i-j}); indices here 0-based.
    rows = [()]
    for i in range(1, len(ts)):
        row = [one_like(ts[i])]
        for j in range(1, i):
            ratio = (ts[i] - ts[i - j]) / (ts[i - 1] - ts[i - j - 1])
            row.append(row[j - 1] * ratio)
        rows.append(row)
    return rows


def _pivot_list(ts: Sequence[Scalar]) -> list:
    pivots = [one_like(ts[0])]
    for i in range(1, len(ts)):
        p = one_like(ts[i])
        for k in range(1, i + 1):
            p = p * (ts[i] - ts[i - k])
        pivots.append(p)
    return pivots


def _check_pivot_range(pivots: Sequence[Scalar]) -> None:
    # Subnormal pivots silently lose relative accuracy; refuse them.
    for i, p in enumerate(pivots):
        if isinstance(p, float) and abs(p) < sys.float_info.min:
            raise SubnormalPivotError(
                f"pivot {i + 1} = {p!r} fell below the normal double range"
            )


def _grid_from_lower(multiplier_rows, pivots, parity: bool) -> BDMatrix:
    order = len(pivots)
    zero = zero_like(pivots[0])
    grid = [[zero] * order for _ in range(order)]
    for i in range(order):
        grid[i][i] = pivots[i]
        for j, value in enumerate(multiplier_rows[i]):
            grid[i][j] = value
    return BDMatrix(entries=tuple(map(tuple, grid)), parity=parity)


def bd_newton(nodes: NodeSequence) -> BDMatrix:
    """Bidiagonal decomposition of L for strictly increasing nodes.

    All stored data is positive, which certifies that L is totally
    positive; any other ordering is rejected because it would break both
    the positivity and the accuracy guarantees.
    """
    if nodes.ordering is not Ordering.STRICTLY_INCREASING:
        raise NotIncreasingError("bd_newton requires strictly increasing nodes")
    ts = nodes.values
    pivots = _pivot_list(ts)
    _check_pivot_range(pivots)
    return _grid_from_lower(_multiplier_rows(ts), pivots, parity=False)


def bd_newton_j(nodes: NodeSequence) -> BDMatrix:
    """Bidiagonal decomposition of L * diag((-1)^(i-1)) for strictly
    decreasing nodes.

    The sign flips turn the alternating pivots of L into positive numbers,
    so the stored data is again nonnegative and the represented matrix is
    totally positive.  The ``parity`` flag records the sign convention.
    """
    if nodes.ordering is not Ordering.STRICTLY_DECREASING:
        raise NotDecreasingError("bd_newton_j requires strictly decreasing nodes")
    ts = nodes.values
    pivots = [abs(p) for p in _pivot_list(ts)]
    _check_pivot_range(pivots)
    return _grid_from_lower(_multiplier_rows(ts), pivots, parity=True)
