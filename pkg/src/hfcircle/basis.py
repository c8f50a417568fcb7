"""Lagrange fundamental polynomials on the zeros of R and the derivative data
needed by the Hermite construction.

L_k is always evaluated in factor-cancelled form, prod_{j != k}(z - z_j) / R'(z_k),
so L_k(z_k) = 1 exactly and no 0/0 appears.  Self-derivatives come from the
Taylor expansion of R at its simple zero z_k:

    L_k^(s)(z_k) = R^(s+1)(z_k) / ((s + 1) R'(z_k)),   s = 1..4.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

import mpmath as mp

from . import _extended, _kernels
from .errors import DegenerateSystemError
from .jets import ComplexJet, _FACT
from .nodal import NodalSystem

__all__ = [
    "NodeBasisData",
    "r_derivs_at_node",
    "lagrange_eval",
    "lagrange_jet",
    "lagrange_self_derivs",
    "build_basis_data",
]


@dataclass(frozen=True, eq=False)
class NodeBasisData:
    node_index: int
    R_derivs: np.ndarray  # R'(z_k) .. R^(5)(z_k)
    L_self_derivs: np.ndarray  # L_k'(z_k) .. L_k''''(z_k)

    @property
    def r_prime(self) -> complex:
        return complex(self.R_derivs[0])


def _check_index(sys: NodalSystem, k: int):
    if not 0 <= k < sys.size:
        raise IndexError(f"node index {k} outside 0..{sys.size - 1}")


def _check_distinct(sys: NodalSystem, k: int):
    gaps = np.abs(sys.nodes - sys.nodes[k])
    gaps[k] = np.inf
    if gaps.min() < 1e-14:
        raise DegenerateSystemError(f"node {k} coincides with another node")


PRECISIONS = ("extended", "double")


def _r_jet_coeffs(sys: NodalSystem, k: int, precision: str) -> np.ndarray:
    if precision == "double":
        full, _ = _kernels.loo_jets(complex(sys.nodes[k]), np.ascontiguousarray(sys.nodes))
        return np.asarray(full)
    if precision != "extended":
        raise ValueError(f"precision must be one of {PRECISIONS}, got {precision!r}")
    with mp.workdps(_extended.DPS):
        roots = _extended.to_mp(sys.nodes)
        c = _extended.product_jet(roots, roots[k])
        return np.array([complex(v) for v in c])


def r_derivs_at_node(sys: NodalSystem, k: int, precision: str = "extended") -> np.ndarray:
    """R'(z_k)..R^(5)(z_k) from the jet of the product of all 2n+2 linear factors.

    ``precision="extended"`` accumulates the product at 34 digits before
    rounding; ``"double"`` uses the compiled double-precision kernel.
    """
    _check_index(sys, k)
    _check_distinct(sys, k)
    c = _r_jet_coeffs(sys, k, precision)
    d = _FACT * c
    if abs(d[0]) > 1e-10 * abs(d[1]):
        raise DegenerateSystemError(f"R(z_{k}) = {d[0]} is not zero")
    if d[1] == 0:
        raise DegenerateSystemError(f"R'(z_{k}) vanishes")
    return d[1:]


def _loo_value(sys: NodalSystem, k: int, z: np.ndarray) -> np.ndarray:
    others = np.delete(sys.nodes, k)
    full, _ = _kernels.loo_values(z, np.ascontiguousarray(others))
    return full


def lagrange_eval(sys: NodalSystem, k: int, z, r_prime: complex | None = None):
    """L_k(z) = prod_{j != k}(z - z_j) / R'(z_k)."""
    _check_index(sys, k)
    if r_prime is None:
        r_prime = r_derivs_at_node(sys, k)[0]
    pts = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    out = _loo_value(sys, k, pts.ravel()).reshape(pts.shape) / r_prime
    return complex(out[0]) if np.ndim(z) == 0 else out


def lagrange_jet(sys: NodalSystem, k: int, a: complex, r_prime: complex | None = None) -> ComplexJet:
    """Jet of L_k at ``a`` from the factor-cancelled product."""
    _check_index(sys, k)
    if r_prime is None:
        r_prime = r_derivs_at_node(sys, k)[0]
    others = np.ascontiguousarray(np.delete(sys.nodes, k))
    full, _ = _kernels.loo_jets(complex(a), others)
    return ComplexJet(np.asarray(full) / r_prime)


def _self_derivs(r_derivs: np.ndarray) -> np.ndarray:
    s = np.arange(1, 5)
    return r_derivs[1:5] / ((s + 1) * r_derivs[0])


def lagrange_self_derivs(sys: NodalSystem, k: int, precision: str = "extended") -> np.ndarray:
    """L_k'(z_k)..L_k''''(z_k)."""
    return _self_derivs(r_derivs_at_node(sys, k, precision))


def build_basis_data(sys: NodalSystem, precision: str = "extended") -> list[NodeBasisData]:
    out = []
    for k in range(sys.size):
        rd = r_derivs_at_node(sys, k, precision)
        rd.setflags(write=False)
        ld = _self_derivs(rd)
        ld.setflags(write=False)
        out.append(NodeBasisData(k, rd, ld))
    return out
