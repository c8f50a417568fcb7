"""The nodal system on the unit circle: Gauss-Jacobi zeros projected vertically
onto the upper half circle, their conjugates, and the endpoints +1 and -1.

Index convention (0..2n+1)::

    0         -> +1
    1..n      -> x_k + i sqrt(1 - x_k^2), x_k increasing
    n+1..2n   -> conjugates of 1..n, same order
    2n+1      -> -1
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .jacobi import JacobiParams, jacobi_zeros

__all__ = ["NodalSystem", "build_nodes", "szego_x", "eval_W", "eval_R"]


@dataclass(frozen=True, eq=False)
class NodalSystem:
    params: JacobiParams
    x_zeros: np.ndarray
    nodes: np.ndarray

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def size(self) -> int:
        """Number of nodes, 2n + 2."""
        return self.nodes.shape[0]

    @property
    def interior(self) -> np.ndarray:
        """Roots of W: nodes 1..2n."""
        return self.nodes[1:-1]

    def conjugate_index(self, k: int) -> int:
        """Index of conj(z_k)."""
        n = self.n
        if k == 0 or k == 2 * n + 1:
            return k
        return k + n if k <= n else k - n


def build_nodes(params: JacobiParams) -> NodalSystem:
    x = jacobi_zeros(params)
    y = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    upper = x + 1j * y
    nodes = np.concatenate(([1.0 + 0j], upper, np.conj(upper), [-1.0 + 0j]))
    x.setflags(write=False)
    nodes.setflags(write=False)
    return NodalSystem(params, x, nodes)


def szego_x(z):
    """(1 + z^2) / (2 z); equals Re z on the unit circle."""
    z = np.asarray(z, dtype=np.complex128)
    if np.any(z == 0):
        raise ZeroDivisionError("szego_x is undefined at z = 0")
    out = (1.0 + z * z) / (2.0 * z)
    return out[()] if out.ndim == 0 else out


def _as_points(z):
    arr = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    return arr, np.ndim(z) == 0


def eval_W(sys: NodalSystem, z):
    """W(z) = prod over the 2n interior nodes of (z - z_k), in node order."""
    pts, scalar = _as_points(z)
    full, _ = _kernels.loo_values(pts.ravel(), np.ascontiguousarray(sys.interior))
    full = full.reshape(pts.shape)
    return complex(full[0]) if scalar else full


def eval_R(sys: NodalSystem, z):
    """R(z) = (z^2 - 1) W(z); zero at all 2n + 2 nodes."""
    pts, scalar = _as_points(z)
    out = (pts * pts - 1.0) * eval_W(sys, pts)
    return complex(out[0]) if scalar else out
