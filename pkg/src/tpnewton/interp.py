"""Evaluation of the Lagrange interpolant: Newton form, modified Lagrange
form and barycentric form.

The three formulas are algebraically identical; evaluating all of them is
the cheap cross-check used throughout the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dense import Scalar, one_like
from .errors import InputError, LengthMismatchError
from .newton import NodeSequence


@dataclass(frozen=True)
class NewtonInterpolant:
    """Nodes plus Newton-form coefficients; evaluable in O(n) per point."""

    nodes: NodeSequence
    coefficients: tuple
    hra_flag: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if len(self.coefficients) != len(self.nodes):
            raise LengthMismatchError(
                f"{len(self.coefficients)} coefficients for {len(self.nodes)} nodes"
            )

    def __call__(self, t: Scalar) -> Scalar:
        return eval_newton(self, t)


def eval_newton(p: NewtonInterpolant, t: Scalar) -> Scalar:
    """Nested (Horner-like) evaluation: n multiplications, 2n additions."""
    ts = p.nodes.values
    coeffs = p.coefficients
    acc = coeffs[-1]
    for i in range(len(coeffs) - 2, -1, -1):
        acc = coeffs[i] + (t - ts[i]) * acc
    return acc


def barycentric_weights(nodes: NodeSequence, normalize: bool = False) -> list:
    """Weights 1 / prod_{k != i} (t_i - t_k).

    ``normalize`` divides by the largest magnitude, which leaves every
    quotient-form evaluation unchanged (common factors cancel) but avoids
    overflow for large node sets.
    """
    ts = nodes.values
    weights = []
    for i, ti in enumerate(ts):
        prod = one_like(ti)
        for k, tk in enumerate(ts):
            if k != i:
                prod = prod * (ti - tk)
        weights.append(1 / prod)
    if normalize:
        scale = max(abs(w) for w in weights)
        weights = [w / scale for w in weights]
    return weights


@dataclass(frozen=True)
class BarycentricData:
    """Nodes, their weights and the data values, ready for evaluation."""

    nodes: NodeSequence
    weights: tuple
    data: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "data", tuple(self.data))
        if len(self.weights) != len(self.nodes) or len(self.data) != len(self.nodes):
            raise LengthMismatchError("weights/data lengths must match the nodes")
        if any(w == 0 for w in self.weights):
            raise InputError("barycentric weights must be nonzero")

    @classmethod
    def from_data(
        cls, nodes: NodeSequence, data: Sequence[Scalar], normalize: bool = False
    ) -> "BarycentricData":
        return cls(
            nodes=nodes,
            weights=tuple(barycentric_weights(nodes, normalize=normalize)),
            data=tuple(data),
        )


def _node_hit(b: BarycentricData, t: Scalar):
    # Exact-equality detection only: the singularity at a node is removable
    # exactly there, and a tolerance would silently change nearby values.
    for ti, fi in zip(b.nodes.values, b.data):
        if t == ti:
            return fi
    return None


def eval_barycentric(b: BarycentricData, t: Scalar) -> Scalar:
    """Quotient form: sum(f_i w_i / (t - t_i)) / sum(w_i / (t - t_i))."""
    hit = _node_hit(b, t)
    if hit is not None:
        return hit
    num = den = None
    for ti, wi, fi in zip(b.nodes.values, b.weights, b.data):
        term = wi / (t - ti)
        num = fi * term if num is None else num + fi * term
        den = term if den is None else den + term
    return num / den


def eval_modified_lagrange(b: BarycentricData, t: Scalar) -> Scalar:
    """First improved form, with the explicit prefactor prod(t - t_i)."""
    hit = _node_hit(b, t)
    if hit is not None:
        return hit
    ell = one_like(t)
    for ti in b.nodes.values:
        ell = ell * (t - ti)
    acc = None
    for ti, wi, fi in zip(b.nodes.values, b.weights, b.data):
        term = fi * (wi / (t - ti))
        acc = term if acc is None else acc + term
    return ell * acc
