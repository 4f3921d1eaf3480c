"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Parameters outside the domain an operation is defined on."""


class RegionError(ValueError):
    """A generating-function or series argument outside its convergence region."""


class PoleError(ZeroDivisionError):
    """A hypergeometric lower parameter hits a nonpositive integer."""


class ConvergenceError(ArithmeticError):
    """A series did not reach its tolerance within the allowed number of terms."""
