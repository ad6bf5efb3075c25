"""Exception hierarchy shared by the engine and the command line."""


class EigenspecError(Exception):
    """Base class for all errors raised by this package."""


class NotApplicableError(EigenspecError, ValueError):
    """The input is well formed but the requested computation does not apply.

    The CLI maps this family to exit status 1.
    """


class NonIsolatedSingularityError(NotApplicableError):
    """The Jacobian quotient is infinite dimensional."""


class SmoothPointError(NotApplicableError):
    """The Jacobian ideal is the unit ideal, so the origin is not singular."""


class NotQuasiHomogeneousError(NotApplicableError):
    """Some monomial of the polynomial has weighted degree different from 1."""


class NotInvariantError(NotApplicableError):
    """The polynomial is not invariant under the given diagonal automorphism."""


class IndeterminateWeightsError(NotApplicableError):
    """The support does not determine a unique weight vector."""


class InconsistentWeightsError(NotApplicableError):
    """No positive weight vector makes the polynomial quasi-homogeneous."""


class DomainMismatchError(EigenspecError, TypeError):
    """Group-ring elements over different key groups were combined."""


class PolynomialSyntaxError(EigenspecError, ValueError):
    """Raised by the polynomial parser; ``position`` is a 0-based column."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
