"""Divided differences by the classical two-term recursion.

Level k of the table holds the k-th order divided differences of the data
over consecutive node windows; level 0 is the data itself.  For strictly
monotone nodes and data values of strictly alternating sign, every level
keeps alternating signs, so each numerator is effectively a same-sign
addition and each denominator a difference of original nodes: the whole
recursion then runs without cancellation and every table entry carries a
relative error of machine-precision order, independent of the node
configuration.  Other inputs are still processed, just without that
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .dense import Scalar
from .errors import LengthMismatchError
from .newton import NodeSequence, Ordering


class HraCertificate(NamedTuple):
    certified: bool
    reason: str | None


def hra_certificate(nodes: NodeSequence, data: Sequence[Scalar]) -> HraCertificate:
    """Check the accuracy precondition: monotone nodes and nonzero data with
    strictly alternating signs.  The reason names the first violation."""
    if len(data) != len(nodes):
        raise LengthMismatchError(
            f"{len(data)} data values for {len(nodes)} nodes"
        )
    if nodes.ordering is Ordering.UNORDERED:
        return HraCertificate(False, "nodes are not strictly monotone")
    for i, value in enumerate(data):
        if value == 0:
            return HraCertificate(False, f"data value {i + 1} is zero")
    for i, (a, b) in enumerate(zip(data, data[1:])):
        if (a > 0) == (b > 0):
            return HraCertificate(
                False, f"data values {i + 1} and {i + 2} do not alternate in sign"
            )
    return HraCertificate(True, None)


@dataclass(frozen=True)
class DividedDifferenceTable:
    """Full triangular table; ``levels[k][i]`` is the k-th order divided
    difference over nodes t_{i+1} .. t_{i+1+k}."""

    nodes: NodeSequence
    levels: tuple
    hra_certified: bool

    @property
    def order(self) -> int:
        return len(self.levels) - 1

    def top(self) -> Scalar:
        """Highest-order divided difference over all nodes."""
        return self.levels[-1][0]


def divided_difference_table(
    nodes: NodeSequence, data: Sequence[Scalar]
) -> DividedDifferenceTable:
    """Run the recursion level by level in a single buffer, archiving each
    level.  Numerators subtract previously computed values once; denominators
    subtract original nodes once."""
    certificate = hra_certificate(nodes, data)
    ts = nodes.values
    buffer = list(data)
    levels = [tuple(buffer)]
    for k in range(1, len(ts)):
        for i in range(len(ts) - k):
            buffer[i] = (buffer[i + 1] - buffer[i]) / (ts[i + k] - ts[i])
        del buffer[len(ts) - k :]
        levels.append(tuple(buffer))
    return DividedDifferenceTable(
        nodes=nodes, levels=tuple(levels), hra_certified=certificate.certified
    )


def newton_coefficients(table: DividedDifferenceTable) -> list:
    """Coefficients of the Newton form: the leading entry of each level."""
    return [level[0] for level in table.levels]
