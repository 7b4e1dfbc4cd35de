"""Exception types shared across the package."""


class NumericError(RuntimeError):
    """A numerical procedure failed to converge or a verification residual
    exceeded its gate (root finder, normalization factorization, ...)."""


class InconclusiveError(NumericError):
    """An iterative oracle ran out of budget without reaching a verdict."""
