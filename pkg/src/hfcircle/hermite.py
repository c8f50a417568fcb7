"""Fifth-order Hermite-Fejer interpolation on the projected Gauss-Jacobi nodes.

The interpolant is Q_n(z) = sum_k f(z_k) A_0k(z) with

    A_0k = L_k^5 + sum_{p=1..4} c_pk R^p L_k^(5-p),

where the c_pk are fixed by A_0k^(r)(z_k) = 0 for r = 1..4.  At every other
node A_0k has a zero of order 5 by construction, so only the conditions at
z_k itself constrain the coefficients.

Three routes to c_pk are provided:

``oracle``
    Impose the four conditions on jets at z_k and forward-substitute the
    (lower-triangular) system.  This is the default used by :func:`interpolate`.
``printed``
    The closed forms with the integer constants as they appear in the
    literature (-18, -198, -24, +1, -156, 2544).  Only c_1k agrees with the
    oracle; see :func:`compare_coefficients`.
``rederived``
    Closed forms from the series of L_k^(-5) at z_k, which is what the
    conditions reduce to because R = (z - z_k) R'(z_k) L_k identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

import mpmath as mp

from . import _extended, _kernels
from .basis import NodeBasisData, build_basis_data
from .errors import DegenerateSystemError
from .jets import SIZE, ComplexJet, _FACT, mul_coeffs
from .nodal import NodalSystem

__all__ = [
    "HermiteCoefficients",
    "Interpolant",
    "HermiteReport",
    "CoefficientMismatch",
    "coeffs_closed_form",
    "coeffs_rederived",
    "coeffs_oracle",
    "compare_coefficients",
    "a0k_eval",
    "interpolate",
    "interpolate_function",
    "with_values",
    "eval",
    "eval_jet",
    "verify_hermite_conditions",
]

METHODS = ("oracle", "printed", "rederived")


@dataclass(frozen=True, eq=False)
class HermiteCoefficients:
    node_index: int
    c: np.ndarray  # c_1k .. c_4k


def coeffs_closed_form(basis_k: NodeBasisData) -> HermiteCoefficients:
    """c_1k..c_4k with the constants exactly as printed in the source formulas."""
    r1 = basis_k.r_prime
    l1, l2, l3, l4 = basis_k.L_self_derivs
    c1 = -5.0 * l1 / r1
    c2 = -5.0 / (2.0 * r1**2) * (l2 + 10.0 * l1**2)
    c3 = -5.0 / (6.0 * r1**3) * (-18.0 * l2 * l1 + l3 - 198.0 * l1**3)
    c4 = -5.0 / (24.0 * r1**4) * (
        l4 - 24.0 * l3 * l1 + l2**2 - 156.0 * l1**2 * l2 + 2544.0 * l1**4
    )
    return HermiteCoefficients(basis_k.node_index, np.array([c1, c2, c3, c4]))


def coeffs_rederived(basis_k: NodeBasisData) -> HermiteCoefficients:
    """c_pk = [h^p] (L_k(z_k + h))^(-5) / R'(z_k)^p written out in derivatives."""
    r1 = basis_k.r_prime
    l1, l2, l3, l4 = basis_k.L_self_derivs
    c1 = -5.0 * l1 / r1
    c2 = -5.0 / (2.0 * r1**2) * (l2 - 6.0 * l1**2)
    c3 = -5.0 / (6.0 * r1**3) * (l3 - 18.0 * l2 * l1 + 42.0 * l1**3)
    c4 = -5.0 / (24.0 * r1**4) * (
        l4 - 24.0 * l3 * l1 - 18.0 * l2**2 + 252.0 * l1**2 * l2 - 336.0 * l1**4
    )
    return HermiteCoefficients(basis_k.node_index, np.array([c1, c2, c3, c4]))


def _jet_pows(c: np.ndarray, top: int) -> list[np.ndarray]:
    out = [np.zeros_like(c)]
    out[0][..., 0] = 1.0
    for _ in range(top):
        out.append(mul_coeffs(out[-1], c))
    return out


def _node_jets(sys: NodalSystem, k: int, r_prime: complex):
    """Jets at z_k of R and of L_k, both from linear-factor products."""
    full, loo = _kernels.loo_jets(complex(sys.nodes[k]), np.ascontiguousarray(sys.nodes))
    return np.asarray(full), np.asarray(loo)[k] / r_prime


def _solve_triangular(target, cols, k):
    c = [0] * 4
    for r in range(1, 5):
        diag = cols[r - 1][r]
        if diag == 0:
            raise DegenerateSystemError(f"zero pivot at order {r}, node {k}")
        rhs = -target[r] - sum(c[p - 1] * cols[p - 1][r] for p in range(1, r))
        c[r - 1] = rhs / diag
    return c


def coeffs_oracle(
    sys: NodalSystem,
    basis: list[NodeBasisData],
    k: int,
    precision: str = "extended",
) -> HermiteCoefficients:
    """Solve A_0k^(r)(z_k) = 0, r = 1..4, on jets at z_k.

    The jets of R and of L_k are rebuilt here from the linear factors; with
    ``precision="double"`` R'(z_k) is taken from ``basis``.  The jet of
    R^p L_k^(5-p) starts at order p with leading coefficient R'(z_k)^p, so
    the system is lower triangular and is solved by forward substitution.
    """
    if precision == "double":
        r_prime = basis[k].r_prime
        r_jet, l_jet = _node_jets(sys, k, r_prime)
        lp = _jet_pows(l_jet, 5)
        rp = _jet_pows(r_jet, 4)
        cols = [mul_coeffs(rp[p], lp[5 - p]) for p in range(1, 5)]
        c = _solve_triangular(lp[5], cols, k)
        return HermiteCoefficients(k, np.array(c, dtype=np.complex128))
    with mp.workdps(_extended.DPS):
        roots = _extended.to_mp(sys.nodes)
        r_jet = _extended.product_jet(roots, roots[k])
        loo = _extended.product_jet(roots, roots[k], skip=k)
        # R'(z_k) is the leave-one-out product evaluated at z_k
        l_jet = [v / loo[0] for v in loo]
        lp = _extended.pows(l_jet, 5)
        rp = _extended.pows(r_jet, 4)
        cols = [_extended.mul(rp[p], lp[5 - p]) for p in range(1, 5)]
        c = _solve_triangular(lp[5], cols, k)
        return HermiteCoefficients(k, np.array([complex(v) for v in c]))


@dataclass(frozen=True)
class CoefficientMismatch:
    p: int
    k: int
    closed_form: complex
    oracle: complex
    rel_error: float


def compare_coefficients(
    sys: NodalSystem,
    basis: list[NodeBasisData] | None = None,
    method: str = "printed",
    rtol: float = 1e-8,
    precision: str = "extended",
) -> list[CoefficientMismatch]:
    """Per-(p, k) entries where a closed form departs from the oracle by more
    than ``rtol`` relative to the oracle magnitude."""
    if basis is None:
        basis = build_basis_data(sys, precision)
    closed = coeffs_closed_form if method == "printed" else coeffs_rederived
    out = []
    for k in range(sys.size):
        a = closed(basis[k]).c
        b = coeffs_oracle(sys, basis, k, precision).c
        for p in range(4):
            err = abs(a[p] - b[p]) / max(abs(b[p]), 1e-300)
            if not err <= rtol:
                out.append(CoefficientMismatch(p + 1, k, complex(a[p]), complex(b[p]), float(err)))
    return out


@dataclass(frozen=True, eq=False)
class Interpolant:
    sys: NodalSystem
    basis: list[NodeBasisData]
    coeffs: list[HermiteCoefficients]
    values: np.ndarray
    method: str = "oracle"
    _rprime: np.ndarray = field(init=False, repr=False)
    _cmat: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        size = self.sys.size
        if not (len(self.basis) == len(self.coeffs) == len(self.values) == size):
            raise ValueError("basis, coefficients and values must all have 2n+2 entries")
        object.__setattr__(self, "_rprime", np.array([b.r_prime for b in self.basis]))
        object.__setattr__(self, "_cmat", np.array([c.c for c in self.coeffs]))

    @property
    def degree_bound(self) -> int:
        """Strict upper bound on the degree: 5 (2n + 2)."""
        return 5 * self.sys.size

    def __call__(self, z):
        return eval(self, z)

    def basis_matrix(self, z) -> np.ndarray:
        """A[m, k] = A_0k(z_m) for a 1-D array of points."""
        pts = np.ascontiguousarray(np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel())
        return _kernels.a0k_matrix(pts, np.ascontiguousarray(self.sys.nodes), self._rprime, self._cmat)

    def basis_jets(self, a: complex) -> np.ndarray:
        """Jets at ``a`` of every A_0k, shape (2n+2, 6)."""
        full, loo = _kernels.loo_jets(complex(a), np.ascontiguousarray(self.sys.nodes))
        lk = np.asarray(loo) / self._rprime[:, None]
        lp = _jet_pows(lk, 5)
        rp = _jet_pows(np.asarray(full)[None, :], 4)
        out = lp[5].copy()
        for p in range(1, 5):
            out += self._cmat[:, p - 1, None] * mul_coeffs(rp[p], lp[5 - p])
        return out


def _coefficients(sys, basis, method, precision):
    if method == "oracle":
        return [coeffs_oracle(sys, basis, k, precision) for k in range(sys.size)]
    if method == "printed":
        return [coeffs_closed_form(b) for b in basis]
    if method == "rederived":
        return [coeffs_rederived(b) for b in basis]
    raise ValueError(f"unknown coefficient method {method!r}; choose from {METHODS}")


def interpolate(
    sys: NodalSystem,
    values,
    basis: list[NodeBasisData] | None = None,
    method: str = "oracle",
    precision: str = "extended",
) -> Interpolant:
    """Q_n for nodal values ``values[k] = f(z_k)``.

    ``method`` picks the coefficient route (see module docstring);
    ``precision`` applies to the per-node precomputation only.
    """
    vals = np.asarray(values, dtype=np.complex128).ravel()
    if vals.shape[0] != sys.size:
        raise ValueError(f"expected {sys.size} nodal values, got {vals.shape[0]}")
    if basis is None:
        basis = build_basis_data(sys, precision)
    vals = vals.copy()
    vals.setflags(write=False)
    return Interpolant(sys, basis, _coefficients(sys, basis, method, precision), vals, method)


def with_values(interp: Interpolant, values) -> Interpolant:
    """Same nodes, basis and coefficients, new nodal values."""
    vals = np.asarray(values, dtype=np.complex128).ravel().copy()
    if vals.shape[0] != interp.sys.size:
        raise ValueError(f"expected {interp.sys.size} nodal values, got {vals.shape[0]}")
    vals.setflags(write=False)
    return Interpolant(interp.sys, interp.basis, interp.coeffs, vals, interp.method)


def interpolate_function(sys: NodalSystem, f, **kwargs) -> Interpolant:
    return interpolate(sys, f(np.asarray(sys.nodes)), **kwargs)


def a0k_eval(interp: Interpolant, k: int, z, as_jet: bool = False):
    """A_0k at ``z`` (complex or array), or its jet at scalar ``z``."""
    if as_jet:
        return ComplexJet(interp.basis_jets(complex(z))[k])
    out = interp.basis_matrix(z)[:, k]
    return complex(out[0]) if np.ndim(z) == 0 else out.reshape(np.shape(z))


def eval(interp: Interpolant, z):
    """Q_n(z) for a scalar or array ``z``."""
    pts = np.asarray(z, dtype=np.complex128)
    out = interp.basis_matrix(pts) @ interp.values
    return complex(out[0]) if pts.ndim == 0 else out.reshape(pts.shape)


def eval_jet(interp: Interpolant, z: complex) -> ComplexJet:
    return ComplexJet(interp.values @ interp.basis_jets(complex(z)))


@dataclass(frozen=True, eq=False)
class HermiteReport:
    value_residuals: np.ndarray  # |Q(z_k) - f(z_k)|, per node
    deriv_residuals: np.ndarray  # |Q^(r)(z_k)| / n^r, shape (2n+2, 4)

    @property
    def max_value_residual(self) -> float:
        return float(self.value_residuals.max())

    @property
    def max_scaled_deriv_residual(self) -> float:
        return float(self.deriv_residuals.max())

    def passes(self, value_tol: float = 1e-9, deriv_tol: float = 1e-6) -> bool:
        return self.max_value_residual <= value_tol and self.max_scaled_deriv_residual <= deriv_tol


def verify_hermite_conditions(interp: Interpolant) -> HermiteReport:
    """Jet-evaluate Q_n at every node and compare with the prescribed data."""
    n = interp.sys.n
    size = interp.sys.size
    vres = np.empty(size)
    dres = np.empty((size, 4))
    scale = float(n) ** np.arange(1, 5)
    for k in range(size):
        jet = eval_jet(interp, interp.sys.nodes[k])
        d = jet.derivatives()
        vres[k] = abs(d[0] - interp.values[k])
        dres[k] = np.abs(d[1:5]) / scale
    return HermiteReport(vres, dres)
