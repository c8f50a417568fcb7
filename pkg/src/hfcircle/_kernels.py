"""Hot loops: leave-one-out root products (values and jets) and the matrix of
fundamental Hermite polynomials A_0k at many points.

Each kernel has a pure-numpy implementation and, when numba is importable, an
``@njit`` twin.  ``HFCIRCLE_DISABLE_NUMBA=1`` in the environment forces the
numpy path.  Both paths stay importable so they can be compared directly
(see ``benchmarks/bench_kernels.py``).
"""

from __future__ import annotations

import os

import numpy as np

SIZE = 6


# --------------------------------------------------------------------- numpy

def loo_values_numpy(points, roots):
    """Return ``(full, loo)`` with full[m] = prod_j (z_m - r_j) and
    loo[m, k] = prod_{j != k} (z_m - r_j).  No division is used, so points
    that coincide with roots give exact zeros."""
    diff = points[:, None] - roots[None, :]
    m, n = diff.shape
    pre = np.ones((m, n + 1), dtype=np.complex128)
    suf = np.ones((m, n + 1), dtype=np.complex128)
    np.cumprod(diff, axis=1, out=pre[:, 1:])
    np.cumprod(diff[:, ::-1], axis=1, out=suf[:, 1:])
    suf = suf[:, ::-1]
    return pre[:, n].copy(), pre[:, :n] * suf[:, 1:]


def _jmul_numpy(a, b):
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.complex128)
    for k in range(SIZE):
        for i in range(k + 1):
            out[..., k] += a[..., i] * b[..., k - i]
    return out


def loo_jets_numpy(a, roots):
    """Jets at ``a`` of the full product and of every leave-one-out product."""
    n = roots.shape[0]
    lin = np.zeros((n, SIZE), dtype=np.complex128)
    lin[:, 0] = a - roots
    lin[:, 1] = 1.0
    pre = np.zeros((n + 1, SIZE), dtype=np.complex128)
    suf = np.zeros((n + 1, SIZE), dtype=np.complex128)
    pre[0, 0] = 1.0
    suf[n, 0] = 1.0
    for j in range(n):
        c = pre[j]
        pre[j + 1, 1:] = c[1:] * lin[j, 0] + c[:-1]
        pre[j + 1, 0] = c[0] * lin[j, 0]
    for j in range(n - 1, -1, -1):
        c = suf[j + 1]
        suf[j, 1:] = c[1:] * lin[j, 0] + c[:-1]
        suf[j, 0] = c[0] * lin[j, 0]
    return pre[n].copy(), _jmul_numpy(pre[:n], suf[1:])


def a0k_matrix_numpy(points, roots, rprime, coeffs):
    """A[m, k] = L_k^5 + sum_p c_pk R^p L_k^(5-p) at points[m]."""
    full, loo = loo_values_numpy(points, roots)
    lk = loo / rprime[None, :]
    r = full[:, None]
    out = lk ** 5
    rp = np.ones_like(r)
    for p in range(1, 5):
        rp = rp * r
        out = out + coeffs[None, :, p - 1] * rp * lk ** (5 - p)
    return out


# --------------------------------------------------------------------- numba

try:
    from numba import njit

    @njit(cache=True)
    def loo_values_numba(points, roots):
        m = points.shape[0]
        n = roots.shape[0]
        full = np.empty(m, dtype=np.complex128)
        loo = np.empty((m, n), dtype=np.complex128)
        for i in range(m):
            z = points[i]
            acc = 1.0 + 0.0j
            for k in range(n):
                loo[i, k] = acc
                acc *= z - roots[k]
            full[i] = acc
            acc = 1.0 + 0.0j
            for k in range(n - 1, -1, -1):
                loo[i, k] *= acc
                acc *= z - roots[k]
        return full, loo

    @njit(cache=True)
    def loo_jets_numba(a, roots):
        n = roots.shape[0]
        pre = np.zeros((n + 1, SIZE), dtype=np.complex128)
        suf = np.zeros((n + 1, SIZE), dtype=np.complex128)
        pre[0, 0] = 1.0
        suf[n, 0] = 1.0
        for j in range(n):
            d = a - roots[j]
            for k in range(SIZE - 1, 0, -1):
                pre[j + 1, k] = pre[j, k] * d + pre[j, k - 1]
            pre[j + 1, 0] = pre[j, 0] * d
        for j in range(n - 1, -1, -1):
            d = a - roots[j]
            for k in range(SIZE - 1, 0, -1):
                suf[j, k] = suf[j + 1, k] * d + suf[j + 1, k - 1]
            suf[j, 0] = suf[j + 1, 0] * d
        loo = np.zeros((n, SIZE), dtype=np.complex128)
        for j in range(n):
            for k in range(SIZE):
                s = 0.0 + 0.0j
                for i in range(k + 1):
                    s += pre[j, i] * suf[j + 1, k - i]
                loo[j, k] = s
        return pre[n].copy(), loo

    @njit(cache=True)
    def a0k_matrix_numba(points, roots, rprime, coeffs):
        full, loo = loo_values_numba(points, roots)
        m = points.shape[0]
        n = roots.shape[0]
        out = np.empty((m, n), dtype=np.complex128)
        lpow = np.empty(SIZE, dtype=np.complex128)
        for i in range(m):
            r = full[i]
            for k in range(n):
                lk = loo[i, k] / rprime[k]
                lpow[0] = 1.0
                for e in range(1, SIZE):
                    lpow[e] = lpow[e - 1] * lk
                acc = lpow[5]
                rp = 1.0 + 0.0j
                for p in range(1, 5):
                    rp *= r
                    acc += coeffs[k, p - 1] * rp * lpow[5 - p]
                out[i, k] = acc
        return out

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    loo_values_numba = loo_jets_numba = a0k_matrix_numba = None
    HAS_NUMBA = False


def _numba_enabled() -> bool:
    flag = os.environ.get("HFCIRCLE_DISABLE_NUMBA", "").strip().lower()
    return HAS_NUMBA and flag in ("", "0", "false", "no")


USE_NUMBA = _numba_enabled()
BACKEND = "numba" if USE_NUMBA else "numpy"

if USE_NUMBA:
    loo_values = loo_values_numba
    loo_jets = loo_jets_numba
    a0k_matrix = a0k_matrix_numba
else:
    loo_values = loo_values_numpy
    loo_jets = loo_jets_numpy
    a0k_matrix = a0k_matrix_numpy
