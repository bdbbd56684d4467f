"""Rounding-error model and structured perturbation bounds for the
decomposition of Newton collocation matrices.

The standard model fl(a op b) = (a op b)(1 + delta), |delta| <= u, gives the
accumulated quantities gamma_k = k*u / (1 - k*u).  Counting the operations
of the incremental decomposition algorithms yields entrywise forward-error
bounds: gamma_{4j-5} for the multiplier in column j, gamma_{2i-3} for pivot
i, and gamma_{4n-5} overall.  Relative node perturbations of size theta
move every entry by at most (2n-2)*kappa*theta / (1 - (2n-2)*kappa*theta),
where kappa is the reciprocal of the smallest pairwise relative node gap,
so (2n-2)*kappa*theta acts as a structured condition number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .dense import Scalar, one_like
from .errors import (
    BoundBlowupError,
    InputError,
    ModelOverflowError,
    OrderingBrokenError,
    ZeroDenominatorError,
)
from .newton import NodeSequence, classify_nodes
from .rng import uniform_deltas

#: Unit roundoff of IEEE double precision.
DOUBLE_UNIT_ROUNDOFF = 2.0**-53


@dataclass(frozen=True)
class FloatModel:
    """Floating-point arithmetic with unit roundoff ``u`` (exact rational
    ``u`` makes every bound below exact)."""

    unit_roundoff: Scalar = DOUBLE_UNIT_ROUNDOFF

    def __post_init__(self):
        if not 0 < self.unit_roundoff < 1:
            raise InputError("unit roundoff must lie in (0, 1)")


DOUBLE = FloatModel()
EXACT_DOUBLE = FloatModel(Fraction(1, 2**53))


def gamma(k: int, model: FloatModel = DOUBLE) -> Scalar:
    """gamma_k = k*u / (1 - k*u), defined for k*u < 1."""
    if k < 0:
        raise InputError(f"gamma index must be nonnegative, got {k}")
    u = model.unit_roundoff
    ku = k * u
    if ku >= 1:
        raise ModelOverflowError(f"k*u = {ku} >= 1")
    return ku / (1 - ku)


def bd_forward_error_bound(n: int, model: FloatModel = DOUBLE) -> Scalar:
    """Entrywise relative bound gamma_{4n-5} for the computed decomposition
    of an order-(n+1) collocation matrix, n > 1."""
    if n <= 1:
        raise InputError("forward error bound requires n > 1")
    return gamma(4 * n - 5, model)


def multiplier_error_bound(j: int, model: FloatModel = DOUBLE) -> Scalar:
    """Per-entry bound gamma_{4j-5} for column-j multipliers, j >= 2
    (column 1 is assigned exactly)."""
    if j < 2:
        raise InputError("multiplier bounds start at column 2")
    return gamma(4 * j - 5, model)


def pivot_error_bound(i: int, model: FloatModel = DOUBLE) -> Scalar:
    """Per-entry bound gamma_{2i-3} for pivot i, i >= 2 (pivot 1 is exact)."""
    if i < 2:
        raise InputError("pivot bounds start at row 2")
    return gamma(2 * i - 3, model)


def rel_gap(nodes: NodeSequence) -> Scalar:
    """Smallest pairwise relative separation min |t_i - t_j| / (|t_i| + |t_j|)."""
    ts = nodes.values
    if len(ts) < 2:
        raise InputError("relative gap needs at least two nodes")
    best = None
    for i in range(len(ts)):
        for j in range(i + 1, len(ts)):
            den = abs(ts[i]) + abs(ts[j])
            if den == 0:
                raise ZeroDenominatorError(f"nodes {i + 1} and {j + 1} are both zero")
            ratio = abs(ts[i] - ts[j]) / den
            if best is None or ratio < best:
                best = ratio
    return best


@dataclass(frozen=True)
class PerturbationSpec:
    """Maximum relative node perturbation theta together with the node
    configuration's relative gap."""

    theta: Scalar
    rel_gap: Scalar

    def __post_init__(self):
        if self.theta < 0:
            raise InputError("theta must be nonnegative")
        if not self.rel_gap > 0:
            raise InputError("relative gap must be positive")

    @property
    def kappa(self) -> Scalar:
        return 1 / self.rel_gap

    @classmethod
    def for_nodes(cls, nodes: NodeSequence, theta: Scalar) -> "PerturbationSpec":
        return cls(theta=theta, rel_gap=rel_gap(nodes))


class StructuredBound(NamedTuple):
    condition: Scalar
    bound: Scalar


def structured_condition(n: int, spec: PerturbationSpec) -> StructuredBound:
    """Condition number (2n-2)*kappa*theta and the induced entrywise bound
    (2n-2)*kappa*theta / (1 - (2n-2)*kappa*theta)."""
    condition = (2 * n - 2) * spec.kappa * spec.theta
    if condition >= 1:
        raise BoundBlowupError(f"(2n-2)*kappa*theta = {condition} >= 1")
    return StructuredBound(condition=condition, bound=condition / (1 - condition))


def perturb_nodes(nodes: NodeSequence, theta: float, seed: int) -> NodeSequence:
    """Multiplicative perturbation t_i * (1 + delta_i) with seeded uniform
    delta_i in [-theta, theta].

    The deltas are drawn as doubles; on exact-rational nodes they are
    promoted exactly, so |delta_i| <= theta holds with no rounding slack.
    The perturbed sequence must keep the original ordering.
    """
    deltas = uniform_deltas(seed, len(nodes), theta)
    perturbed = []
    for t, d in zip(nodes.values, deltas):
        if isinstance(t, float):
            perturbed.append(t * (1.0 + d))
        else:
            perturbed.append(t * (one_like(t) + Fraction(d)))
    result = classify_nodes(perturbed)
    if result.ordering is not nodes.ordering:
        raise OrderingBrokenError(
            "perturbation changed the node ordering; decrease theta"
        )
    return result
