"""Exception hierarchy.

Everything raised on purpose by this package derives from
:class:`FunctionClassError`. Validation failures additionally derive from
``ValueError`` and numerical failures from ``ArithmeticError``, so callers
can use either the package hierarchy or the builtin one.
"""


class FunctionClassError(Exception):
    """Base class for all errors raised by fpgft."""


# ---- construction / validation -------------------------------------------

class FixedPointOutsideDisk(FunctionClassError, ValueError):
    """The fixed point w does not satisfy |w| < 1."""


class IndexBelowK(FunctionClassError, ValueError):
    """A tail coefficient was given for an index below the first live index k."""


class NegativeCoefficient(FunctionClassError, ValueError):
    """A tail coefficient is negative (or not a finite real number)."""


class TruncationLimitExceeded(FunctionClassError, ValueError):
    """A coefficient index exceeds the configured truncation cap."""


class WeightsNotConvex(FunctionClassError, ValueError):
    """Combination weights are negative or do not sum to one."""


class MixedFixedPoints(FunctionClassError, ValueError):
    """Series with different fixed points cannot be combined."""


class IndexBetween1AndKminus1(FunctionClassError, ValueError):
    """Requested a generator with index in 1..k-1, which the class excludes."""


class InvalidClassParams(FunctionClassError, ValueError):
    """(A, B, m) violate the admissibility constraints of the class."""


class OrderOutOfRange(FunctionClassError, ValueError):
    """Operator order m is negative or above the overflow-safe cap."""


class GammaOutOfRange(FunctionClassError, ValueError):
    """Integral-transform exponent gamma must be a finite real > 1."""


class COutOfRange(FunctionClassError, ValueError):
    """Integral-transform parameter C must be a finite real >= 1."""


class NotAMember(FunctionClassError, ValueError):
    """Decomposition requested for a function outside the class."""


class InputNotMember(FunctionClassError, ValueError):
    """A convex combination input is not a class member."""


# ---- evaluation / numerical -----------------------------------------------

class EvalAtPole(FunctionClassError, ValueError):
    """Evaluation point coincides with the pole z = w (within 1e-14)."""


class OutsideDomain(FunctionClassError, ValueError):
    """Evaluation point violates |z - w| < 1."""


class DerivativeVanishes(FunctionClassError, ArithmeticError):
    """The first derivative is numerically zero where a ratio needs it."""


class OverflowGuard(FunctionClassError, OverflowError):
    """An intermediate value left the representable double range."""


class QuadratureNonConvergence(FunctionClassError, ArithmeticError):
    """Adaptive quadrature failed to meet tolerance within the interval cap."""
