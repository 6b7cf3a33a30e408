"""Exception hierarchy shared by the numerical modules and the CLI."""


class FermiDiracError(Exception):
    """Base class for all errors raised by fdzeta."""


class DomainError(FermiDiracError, ValueError):
    """An argument lies outside the domain an operation supports."""


class NumericalFailure(FermiDiracError, ArithmeticError):
    """A computation could not produce a trustworthy number."""


class DegenerateEta(NumericalFailure):
    """The decay constant is 0/0 at eta = 0; use the b = 0 branch instead."""


class ModelBreakdown(NumericalFailure):
    """The exponential model has no convergent zeta representation here."""


class ConvergenceError(NumericalFailure):
    """An iterative routine exhausted its budget before meeting tolerance."""
