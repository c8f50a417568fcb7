"""Degree-5 truncated Taylor series ("jets") over complex numbers.

A jet stores c_0..c_5 with f(a + h) = sum_k c_k h**k + O(h**6), so the k-th
derivative at the expansion point is k! * c_k.  Only ring operations are
provided; every quantity built on top of this is a polynomial.
"""

from __future__ import annotations

import math

import numpy as np

ORDER = 5
SIZE = ORDER + 1
_FACT = np.array([math.factorial(k) for k in range(SIZE)], dtype=float)

__all__ = [
    "ComplexJet",
    "jet_variable",
    "jet_constant",
    "jet_add",
    "jet_mul",
    "jet_scale",
    "jet_pow",
    "jet_eval_poly_from_roots",
    "mul_coeffs",
]


def mul_coeffs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Truncated Cauchy product along the last axis (broadcasting)."""
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=np.complex128)
    for k in range(SIZE):
        for i in range(k + 1):
            out[..., k] += a[..., i] * b[..., k - i]
    return out


class ComplexJet:
    """Six complex Taylor coefficients at an implicit expansion point."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.zeros(SIZE, dtype=np.complex128)
        src = np.asarray(coeffs, dtype=np.complex128)
        if src.shape != (SIZE,):
            raise ValueError(f"a jet needs {SIZE} coefficients, got shape {src.shape}")
        c[:] = src
        c.setflags(write=False)
        self.coeffs = c

    def derivative(self, k: int) -> complex:
        """k-th derivative at the expansion point, k = 0..5."""
        if not 0 <= k <= ORDER:
            raise ValueError(f"derivative order must be in 0..{ORDER}")
        return complex(_FACT[k] * self.coeffs[k])

    def derivatives(self) -> np.ndarray:
        return _FACT * self.coeffs

    @property
    def value(self) -> complex:
        return complex(self.coeffs[0])

    def __add__(self, other):
        return jet_add(self, _as_jet(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ComplexJet(self.coeffs - _as_jet(other).coeffs)

    def __rsub__(self, other):
        return ComplexJet(_as_jet(other).coeffs - self.coeffs)

    def __neg__(self):
        return ComplexJet(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, ComplexJet):
            return jet_mul(self, other)
        return jet_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        return jet_pow(self, m)

    def __repr__(self):
        return f"ComplexJet({np.array2string(self.coeffs, precision=6)})"


def _as_jet(x) -> ComplexJet:
    return x if isinstance(x, ComplexJet) else jet_constant(x)


def jet_constant(c: complex) -> ComplexJet:
    coeffs = np.zeros(SIZE, dtype=np.complex128)
    coeffs[0] = c
    return ComplexJet(coeffs)


def jet_variable(a: complex) -> ComplexJet:
    """Jet of the identity map at ``a``: (a, 1, 0, 0, 0, 0)."""
    coeffs = np.zeros(SIZE, dtype=np.complex128)
    coeffs[0] = a
    coeffs[1] = 1.0
    return ComplexJet(coeffs)


def jet_add(a: ComplexJet, b: ComplexJet) -> ComplexJet:
    return ComplexJet(a.coeffs + b.coeffs)


def jet_mul(a: ComplexJet, b: ComplexJet) -> ComplexJet:
    return ComplexJet(mul_coeffs(a.coeffs, b.coeffs))


def jet_scale(a: ComplexJet, s: complex) -> ComplexJet:
    return ComplexJet(a.coeffs * s)


def jet_pow(a: ComplexJet, m: int) -> ComplexJet:
    """``a**m`` by repeated multiplication; ``m`` is a small non-negative int."""
    if m < 0 or int(m) != m:
        raise ValueError(f"jet_pow needs a non-negative integer exponent, got {m}")
    out = jet_constant(1.0)
    for _ in range(int(m)):
        out = jet_mul(out, a)
    return out


def jet_eval_poly_from_roots(roots, a: complex) -> ComplexJet:
    """Jet at ``a`` of prod_j (z - roots[j])."""
    c = np.zeros(SIZE, dtype=np.complex128)
    c[0] = 1.0
    for r in np.asarray(roots, dtype=np.complex128).ravel():
        # multiply by the linear jet (a - r) + h
        d = a - r
        c[1:] = c[1:] * d + c[:-1]
        c[0] *= d
    return ComplexJet(c)
