"""Exception types shared across the library.

Validation problems (bad parameters, violated preconditions) and numerical
failures (non-convergence, missing zeros, blown brackets) are kept on
separate branches so the CLI can map them to distinct exit codes.
"""


class LsradiiError(Exception):
    """Base class for all library errors."""


class ValidationFailure(LsradiiError):
    """Input rejected before any numerics ran."""


class NumericalFailure(LsradiiError):
    """A numerical routine could not deliver its contract."""


class InvalidParameter(ValidationFailure):
    """Parameter outside the admissible domain (poles, hypothesis ranges)."""


class PreconditionViolation(ValidationFailure):
    """Arguments violate a documented precondition of the operation."""


class NonConvergence(NumericalFailure):
    """Series summation hit the term cap before reaching the tolerance."""


class NotEnoughZeros(NumericalFailure):
    """Fewer sign changes found than requested before the scan limit."""


class InsufficientZeros(NumericalFailure):
    """A supplied zero table is too short for the requested truncation."""


class SingularityReached(NumericalFailure):
    """A curvature denominator collapsed below the representable floor."""


class BracketFailure(NumericalFailure):
    """Root bracketing failed where theory guarantees a sign change."""
