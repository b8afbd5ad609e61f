"""Exception types shared across the package."""


class RecwalkError(Exception):
    """Base class for all library-specific failures."""


class NonIncreasingSequence(RecwalkError):
    """Generated sequence is not strictly increasing."""


class NonPositiveTerm(RecwalkError):
    """Generated sequence produced a zero or negative term."""


class NoPositiveCoefficient(RecwalkError):
    """s is undefined: no recurrence coefficient is positive."""


class WindowTooShort(RecwalkError):
    """Operation needs more sequence terms than the window holds."""


class StateSpaceTooLarge(RecwalkError):
    """G_n exceeds the configured dense state-space cap."""


class DegenerateStateSpace(RecwalkError):
    """N = 1: there is no nontrivial eigenvalue."""


class NotFirstOrder(RecwalkError):
    """Operation is defined only for the sequence G_n = c^(n-1)."""


class DomainError(RecwalkError):
    """A formula precondition was violated (pole, empty domain, bad range)."""


class UnknownSuite(RecwalkError):
    """Verification suite name not recognized."""


class NoMixing(RecwalkError):
    """Mixing-time scan failed to terminate within the safety cap."""
