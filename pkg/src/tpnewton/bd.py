"""Compact storage of bidiagonal decompositions of totally positive matrices.

A nonsingular totally positive matrix of order n+1 factors as

    A = F_n F_{n-1} ... F_1 D G_1 G_2 ... G_n,

with unit lower (upper) bidiagonal factors F_i (G_i) and a positive diagonal
D.  The whole factorization fits in one (n+1) x (n+1) grid: position (i, j)
holds the lower multiplier for i > j, the pivot for i = j and the upper
multiplier for i < j.  Stored off-diagonal data is nonnegative and pivots
are positive for decompositions of totally positive matrices; decompositions
that arise from decreasing node sequences carry ``parity=True``, meaning the
assembled matrix equals (natural collocation matrix) * diag((-1)^(i-1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dense import Matrix, Scalar, identity, one_like, zero_like
from .errors import InputError, NotTriangularError
from .fileio import scalar_from_json, scalar_to_json


@dataclass(frozen=True)
class BDMatrix:
    """Grid form of a bidiagonal decomposition."""

    entries: tuple
    parity: bool = False

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        order = len(rows)
        if order < 1 or any(len(row) != order for row in rows):
            raise InputError("decomposition grid must be square and nonempty")
        for i in range(order):
            if not rows[i][i] > 0:
                raise InputError(f"pivot {i + 1} is not strictly positive")

    @property
    def order(self) -> int:
        return len(self.entries)

    def pivots(self) -> tuple:
        return tuple(self.entries[i][i] for i in range(self.order))

    def multiplier(self, i: int, j: int) -> Scalar:
        """Lower multiplier m[i, j] (1-based, i > j)."""
        if not 1 <= j < i <= self.order:
            raise InputError(f"no lower multiplier at ({i}, {j})")
        return self.entries[i - 1][j - 1]

    def upper_multiplier(self, i: int, j: int) -> Scalar:
        """Upper multiplier (1-based, stored at grid position (j, i), j < i)."""
        if not 1 <= j < i <= self.order:
            raise InputError(f"no upper multiplier at ({i}, {j})")
        return self.entries[j - 1][i - 1]

    def is_lower_triangular(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.order)
            for j in range(i + 1, self.order)
        )

    def is_tp_certified(self) -> bool:
        """True when all stored data is nonnegative (pivots are positive by
        construction), which certifies total positivity of the assembled
        product."""
        return all(
            self.entries[i][j] >= 0
            for i in range(self.order)
            for j in range(self.order)
            if i != j
        )

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "parity": self.parity,
            "entries": [[scalar_to_json(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BDMatrix":
        entries = [[scalar_from_json(v) for v in row] for row in obj["entries"]]
        bd = cls(entries=tuple(map(tuple, entries)), parity=bool(obj.get("parity", False)))
        if bd.order != obj.get("order", bd.order):
            raise InputError("order field does not match entry grid")
        return bd


def factor_lower(bd: BDMatrix, i: int) -> Matrix:
    """Unit lower bidiagonal factor F_i.

    Its subdiagonal is nonzero only in rows i+1 .. n+1 (1-based), where row r
    carries the multiplier stored at grid position (r, r-i).
    """
    n = bd.order - 1
    if not 1 <= i <= n:
        raise InputError(f"factor index {i} out of range 1..{n}")
    out = identity(bd.order, like=bd.entries[0][0])
    for r in range(i + 1, bd.order + 1):
        out[r - 1][r - 2] = bd.entries[r - 1][r - i - 1]
    return out


def factor_upper(bd: BDMatrix, i: int) -> Matrix:
    """Unit upper bidiagonal factor G_i (mirror image of ``factor_lower``)."""
    n = bd.order - 1
    if not 1 <= i <= n:
        raise InputError(f"factor index {i} out of range 1..{n}")
    out = identity(bd.order, like=bd.entries[0][0])
    for r in range(i + 1, bd.order + 1):
        out[r - 2][r - 1] = bd.entries[r - i - 1][r - 1]
    return out


def assemble(bd: BDMatrix) -> Matrix:
    """Dense matrix F_n ... F_1 * diag(pivots) * G_1 ... G_n.

    Factors are applied in exactly that order, with each bidiagonal factor
    applied through its two nonzero diagonals, so the floating-point result
    is reproducible and identical to the naive dense product.
    """
    like = bd.entries[0][0]
    order = bd.order
    out = identity(order, like=like)
    # product of the F factors, multiplying F_n ... F_1 left to right:
    # P <- P @ F_i combines columns of P.  Ascending r keeps the source
    # column r untouched until it has been consumed.
    for i in range(order - 1, 0, -1):
        for r in range(i + 1, order + 1):
            sub = bd.entries[r - 1][r - i - 1]
            if sub != 0:
                for row in out:
                    row[r - 2] = row[r - 2] + row[r - 1] * sub
    for row in out:
        for j in range(order):
            row[j] = row[j] * bd.entries[j][j]
    for i in range(1, order):
        for r in range(order, i, -1):
            sup = bd.entries[r - i - 1][r - 1]
            if sup != 0:
                for row in out:
                    row[r - 1] = row[r - 1] + row[r - 2] * sup
    return out


def eigenvalues(bd: BDMatrix) -> list:
    """Eigenvalues of the assembled matrix when it is lower triangular.

    A triangular matrix has its diagonal as spectrum, so these are the
    pivots, sign-flipped at even positions for parity-flagged
    decompositions.
    """
    if not bd.is_lower_triangular():
        raise NotTriangularError("decomposition has nonzero upper multipliers")
    pivots = bd.pivots()
    if bd.parity:
        return [p if i % 2 == 0 else -p for i, p in enumerate(pivots)]
    return list(pivots)


def bd_from_parts(
    multipliers: Sequence[Sequence[Scalar]],
    pivots: Sequence[Scalar],
    upper: Sequence[Sequence[Scalar]] | None = None,
    parity: bool = False,
) -> BDMatrix:
    """Build the grid from per-row lower multipliers, pivots and optional
    per-row upper multipliers (``upper[i]`` holds grid row i right of the
    diagonal)."""
    order = len(pivots)
    zero = zero_like(pivots[0])
    grid = [[zero] * order for _ in range(order)]
    for i in range(order):
        grid[i][i] = pivots[i]
        row = multipliers[i] if i < len(multipliers) else ()
        for j, value in enumerate(row):
            grid[i][j] = value
        if upper is not None:
            for j, value in enumerate(upper[i], start=i + 1):
                grid[i][j] = value
    return BDMatrix(entries=tuple(map(tuple, grid)), parity=parity)


def identity_bd(order: int, like: Scalar = 1.0) -> BDMatrix:
    one = one_like(like)
    zero = zero_like(like)
    grid = [[one if i == j else zero for j in range(order)] for i in range(order)]
    return BDMatrix(entries=tuple(map(tuple, grid)))
