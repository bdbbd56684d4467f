"""Vandermonde collocation matrices and the Newton/monomial change of basis.

The Vandermonde matrix V = (t_i^(j-1)) at distinct nodes factors as
V = L * U where L is the Newton-basis collocation matrix and U is the upper
triangular change-of-basis matrix whose entries are divided differences of
the monomials.  U itself is the product of the upper bidiagonal factors
G_1 ... G_n with multipliers equal to the nodes, so both factorizations are
available exactly and subtraction-free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bd import BDMatrix, assemble
from .dense import Matrix, one_like, zero_like
from .errors import NonPositiveNodesError, NotIncreasingError
from .newton import (
    NodeSequence,
    Ordering,
    _multiplier_rows,
    _pivot_list,
    collocation_matrix,
)


@dataclass(frozen=True)
class CroutPair:
    """L and U with V = L * U: L unit-first-column lower triangular, U unit
    diagonal upper triangular."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        object.__setattr__(self, "lower", tuple(map(tuple, self.lower)))
        object.__setattr__(self, "upper", tuple(map(tuple, self.upper)))


def vandermonde_matrix(nodes: NodeSequence) -> Matrix:
    """Entries t_i^(j-1), built by repeated multiplication."""
    out = []
    for t in nodes.values:
        acc = one_like(t)
        row = [acc]
        for _ in range(1, len(nodes)):
            acc = acc * t
            row.append(acc)
        out.append(row)
    return out


def bd_vandermonde(nodes: NodeSequence) -> BDMatrix:
    """Bidiagonal decomposition of V for increasing positive nodes.

    The lower multipliers and pivots coincide with those of the Newton
    collocation matrix; the upper multipliers are the nodes themselves.
    Positivity of the nodes is what makes V strictly totally positive, so
    nonpositive nodes are rejected.
    """
    if nodes.ordering is not Ordering.STRICTLY_INCREASING:
        raise NotIncreasingError("bd_vandermonde requires strictly increasing nodes")
    if nodes.values[0] <= 0:
        raise NonPositiveNodesError("bd_vandermonde requires strictly positive nodes")
    ts = nodes.values
    order = len(ts)
    zero = zero_like(ts[0])
    grid = [[zero] * order for _ in range(order)]
    multipliers = _multiplier_rows(ts)
    pivots = _pivot_list(ts)
    for i in range(order):
        grid[i][i] = pivots[i]
        for j, value in enumerate(multipliers[i]):
            grid[i][j] = value
        for j in range(i + 1, order):
            grid[i][j] = ts[i]
    return BDMatrix(entries=tuple(map(tuple, grid)))


def bd_change_of_basis(nodes: NodeSequence) -> BDMatrix:
    """Decomposition of the upper triangular U with entries
    u[i, j] = (divided difference of t^(j-1) over t_1 .. t_i): unit pivots,
    no lower part, upper multipliers equal to the nodes."""
    ts = nodes.values
    order = len(ts)
    zero = zero_like(ts[0])
    one = one_like(ts[0])
    grid = [[zero] * order for _ in range(order)]
    for i in range(order):
        grid[i][i] = one
        for j in range(i + 1, order):
            grid[i][j] = ts[i]
    return BDMatrix(entries=tuple(map(tuple, grid)))


def crout(nodes: NodeSequence) -> CroutPair:
    """Crout factorization V = L * U at the given distinct nodes."""
    return CroutPair(
        lower=collocation_matrix(nodes),
        upper=assemble(bd_change_of_basis(nodes)),
    )
