"""Exception types raised by hfcircle."""


class ParameterDomainError(ValueError):
    """Jacobi parameters outside alpha > -1, beta > -1, n >= 1."""


class UnsupportedOrderError(ValueError):
    """Requested derivative order is not implemented."""


class NumericalFailure(ArithmeticError):
    """An iterative method failed to reach its residual target."""


class DegenerateSystemError(ArithmeticError):
    """Coincident nodes or a vanishing R'(z_k)."""
