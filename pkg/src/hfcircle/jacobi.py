"""Jacobi polynomials P_n^(alpha, beta): values, derivatives, zeros and the
normalising constant that makes the projected polynomial monic.

Evaluation uses the standard three-term recurrence and accepts real or complex
arguments (scalars or arrays), since the circle construction evaluates
P_n at (1 + z**2) / (2 z) for complex z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailure, ParameterDomainError, UnsupportedOrderError

__all__ = [
    "JacobiParams",
    "jacobi_eval",
    "jacobi_deriv",
    "jacobi_zeros",
    "leading_constant",
]


@dataclass(frozen=True)
class JacobiParams:
    alpha: float
    beta: float
    n: int

    def __post_init__(self):
        if not (self.alpha > -1.0 and self.beta > -1.0):
            raise ParameterDomainError(
                f"need alpha > -1 and beta > -1, got alpha={self.alpha}, beta={self.beta}"
            )
        if int(self.n) != self.n or self.n < 1:
            raise ParameterDomainError(f"need integer n >= 1, got n={self.n}")
        object.__setattr__(self, "n", int(self.n))


def _check_ab(alpha, beta):
    if not (alpha > -1.0 and beta > -1.0):
        raise ParameterDomainError(
            f"need alpha > -1 and beta > -1, got alpha={alpha}, beta={beta}"
        )


def _recurrence(alpha, beta, n, x):
    # Degree may be 0 here (derivative identity lowers it), so no n >= 1 check.
    if n == 0:
        return np.ones_like(x) if isinstance(x, np.ndarray) else 1.0 + 0 * x
    apb = alpha + beta
    p_prev = 1.0 + 0 * x
    p = 0.5 * (alpha - beta + (apb + 2.0) * x)
    for k in range(2, n + 1):
        c = 2.0 * k + apb
        a1 = 2.0 * k * (k + apb) * (c - 2.0)
        a2 = (c - 1.0) * (alpha * alpha - beta * beta)
        a3 = (c - 2.0) * (c - 1.0) * c
        a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c
        p, p_prev = ((a2 + a3 * x) * p - a4 * p_prev) / a1, p
    return p


def jacobi_eval(params: JacobiParams, x):
    """Value of P_n^(alpha, beta) at ``x`` (real or complex, scalar or array)."""
    _check_ab(params.alpha, params.beta)
    x = np.asarray(x) if isinstance(x, (list, tuple)) else x
    return _recurrence(params.alpha, params.beta, params.n, x)


def jacobi_deriv(params: JacobiParams, x, order: int = 1):
    """First or second derivative of P_n^(alpha, beta) at ``x``.

    Uses d/dx P_n^(a,b) = (n + a + b + 1)/2 * P_{n-1}^(a+1,b+1), applied
    ``order`` times.
    """
    if order not in (1, 2):
        raise UnsupportedOrderError(f"order must be 1 or 2, got {order}")
    a, b, n = params.alpha, params.beta, params.n
    _check_ab(a, b)
    scale = 1.0
    for _ in range(order):
        if n == 0:
            return 0.0 * x
        scale *= 0.5 * (n + a + b + 1.0)
        a, b, n = a + 1.0, b + 1.0, n - 1
    return scale * _recurrence(a, b, n, x)


def leading_constant(params: JacobiParams) -> tuple[float, float]:
    """``(log|K_n|, sign)`` for K_n = 2^(2n) n! G(a+b+n+1) / G(a+b+2n+1).

    K_n scales P_n((1 + z^2)/(2z)) z^n to a monic polynomial in z.
    """
    a, b, n = params.alpha, params.beta, params.n
    _check_ab(a, b)
    log_k = (
        2 * n * math.log(2.0)
        + math.lgamma(n + 1.0)
        + math.lgamma(a + b + n + 1.0)
        - math.lgamma(a + b + 2 * n + 1.0)
    )
    return log_k, 1.0


def _residual_ok(params, x):
    p = abs(jacobi_eval(params, x))
    dp = abs(jacobi_deriv(params, x, 1))
    return p <= 1e-12 * max(1.0, dp)


def _newton_deflated(params, max_iter=100):
    """Newton with deflation of the zeros already found (Chebyshev starts)."""
    n = params.n
    found = []
    for k in range(n):
        # increasing order: start from -cos((2k+1) pi / (2n))
        x = -math.cos((2 * k + 1) * math.pi / (2 * n))
        if k > 0:
            x = 0.5 * (x + found[-1])
        for _ in range(max_iter):
            p = jacobi_eval(params, x)
            dp = jacobi_deriv(params, x, 1)
            s = sum(1.0 / (x - r) for r in found)
            denom = dp - p * s
            if denom == 0.0:
                break
            step = p / denom
            x -= step
            if abs(step) < 1e-16 * max(1.0, abs(x)):
                break
        found.append(x)
    return np.array(found)


def _bisect_root(params, lo, hi, max_iter=200):
    flo = jacobi_eval(params, lo)
    if flo == 0.0:
        return lo
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fm = jacobi_eval(params, mid)
        if fm == 0.0 or hi - lo <= 2e-16 * max(1.0, abs(mid)):
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _bisection_zeros(params):
    # Zeros of P_n strictly interlace those of P_{n-1}, giving one bracket each.
    a, b = params.alpha, params.beta
    roots = np.array([])
    for m in range(1, params.n + 1):
        pm = JacobiParams(a, b, m)
        edges = np.concatenate(([-1.0], roots, [1.0]))
        roots = np.array([_bisect_root(pm, edges[i], edges[i + 1]) for i in range(m)])
    return roots


def _polish(params, xs, steps=3):
    out = xs.copy()
    for i, x in enumerate(out):
        for _ in range(steps):
            dp = jacobi_deriv(params, x, 1)
            if dp == 0.0:
                break
            nx = x - jacobi_eval(params, x) / dp
            if abs(nx - x) > 1e-8:
                break
            x = nx
        out[i] = x
    return out


def _acceptable(params, xs):
    return (
        len(xs) == params.n
        and np.all(np.isfinite(xs))
        and np.all(np.abs(xs) < 1.0)
        and np.all(np.diff(xs) > 0)
        and all(_residual_ok(params, x) for x in xs)
    )


def jacobi_zeros(params: JacobiParams) -> np.ndarray:
    """The ``n`` zeros of P_n^(alpha, beta), strictly increasing in (-1, 1).

    Newton iteration with deflation from Chebyshev-angle starts; if the result
    fails the residual test |P_n(x_k)| <= 1e-12 max(1, |P_n'(x_k)|), the
    zeros are recomputed by bisection on the interlacing brackets given by
    the zeros of lower-degree polynomials.

    Raises
    ------
    NumericalFailure
        If neither route meets the residual target.
    """
    _check_ab(params.alpha, params.beta)
    xs = np.sort(_polish(params, _newton_deflated(params)))
    if _acceptable(params, xs):
        return xs
    xs = np.sort(_polish(params, _bisection_zeros(params)))
    if _acceptable(params, xs):
        return xs
    raise NumericalFailure(
        f"could not resolve zeros of P_{params.n}^({params.alpha},{params.beta})"
    )
