"""Exception hierarchy.

Two families matter to callers (and to the CLI exit codes): ``InputError``
for rejected arguments and ``NumericalError`` for violated numerical
contracts discovered while computing.
"""


class TPNewtonError(Exception):
    """Base class for all package errors."""


class InputError(TPNewtonError, ValueError):
    """Invalid or inconsistent input data."""


class NumericalError(TPNewtonError, ArithmeticError):
    """A numerical contract failed during computation."""


class DuplicateNodesError(InputError):
    """Two interpolation nodes compare exactly equal."""


class NotIncreasingError(InputError):
    """Operation requires strictly increasing nodes."""


class NotDecreasingError(InputError):
    """Operation requires strictly decreasing nodes."""


class UnorderedNodesError(InputError):
    """Operation requires strictly monotone nodes."""


class NonPositiveNodesError(InputError):
    """Operation requires strictly positive nodes."""


class LengthMismatchError(InputError):
    """Vector length does not match the node count / matrix order."""


class NotTriangularError(InputError):
    """Decomposition has nonzero entries above the diagonal."""


class ZeroDenominatorError(InputError):
    """A relative-gap denominator |t_i| + |t_j| vanished."""


class ModelOverflowError(InputError):
    """gamma_k = k*u/(1 - k*u) is undefined because k*u >= 1."""


class BoundBlowupError(InputError):
    """Structured perturbation bound is undefined: (2n-2)*kappa*theta >= 1."""


class OrderTooLargeError(InputError):
    """Minor enumeration was requested beyond the combinatorial guard."""


class SingularPivotError(NumericalError):
    """A pivot of the decomposition is zero."""


class SubnormalPivotError(NumericalError):
    """A pivot underflowed below the normal double range, voiding accuracy
    guarantees."""


class OrderingBrokenError(NumericalError):
    """Node perturbation destroyed the strict ordering of the nodes."""


class NotTotallyPositiveError(NumericalError):
    """Neville elimination met a negative pivot or multiplier."""


class NoConvergenceError(NumericalError):
    """An iteration hit its cap before reaching the requested accuracy."""


class RationalBlowupError(NumericalError):
    """Exact rational intermediates exceeded the representation-size cap."""
