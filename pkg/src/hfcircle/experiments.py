"""Empirical studies of the interpolation operator: Lebesgue sums, growth of
the Lagrange and coefficient data, modulus of continuity and sup-norm errors.

Everything is sampled on the unit circle at ``m`` equally spaced points
(theta_j = 2 pi j / m) together with the nodes themselves; the grids are
nested under doubling of ``m``, so reported maxima never decrease when the
sample count is doubled.
"""

from __future__ import annotations

import csv
import io
import math
import time
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import spence

from .basis import lagrange_eval
from .hermite import Interpolant, interpolate, with_values
from .hermite import eval as q_eval
from .jacobi import JacobiParams, leading_constant
from .nodal import NodalSystem, build_nodes

__all__ = [
    "QUANTITY_KINDS",
    "TEST_FUNCTIONS",
    "ExperimentRecord",
    "circle_points",
    "lebesgue_function",
    "lebesgue_constant",
    "lebesgue_study",
    "check_lagrange_decay",
    "check_coefficient_growth",
    "modulus_of_continuity",
    "convergence_study",
    "records_to_csv",
    "write_records",
]

QUANTITY_KINDS = (
    "lebesgue_constant",
    "sup_error",
    "lk_bound_ratio",
    "cpk_ratio",
    "omega",
    "rate_ratio",
)
CSV_HEADER = ["alpha", "beta", "n", "quantity_kind", "value", "samples", "runtime_ms"]
MIN_SAMPLES = 64
# log n rate is only claimed for this alpha range
ALPHA_MAX = 0.5


def _dilog(z):
    return spence(1.0 - np.asarray(z, dtype=np.complex128))


TEST_FUNCTIONS = {
    "one": lambda z: np.ones_like(np.asarray(z, dtype=np.complex128)),
    "z": lambda z: np.asarray(z, dtype=np.complex128),
    "z8": lambda z: np.asarray(z, dtype=np.complex128) ** 8,
    "exp": lambda z: np.exp(np.asarray(z, dtype=np.complex128)),
    "pole": lambda z: 1.0 / (np.asarray(z, dtype=np.complex128) - 2.0),
    # sum_{j>=1} z^j / j^2, continuous on the closed disk, not Lipschitz at z = 1
    "rough": _dilog,
}


@dataclass(frozen=True)
class ExperimentRecord:
    alpha: float
    beta: float
    n: int
    quantity_kind: str
    value: float
    samples: int
    runtime_ms: float | None = None

    def __post_init__(self):
        if self.quantity_kind not in QUANTITY_KINDS:
            raise ValueError(f"unknown quantity_kind {self.quantity_kind!r}")
        if not self.value >= 0:
            raise ValueError(f"record value must be >= 0, got {self.value}")
        if self.samples < MIN_SAMPLES:
            raise ValueError(f"samples must be >= {MIN_SAMPLES}")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def records_to_csv(records, timings: bool = False) -> str:
    """CSV text, sorted by (n, quantity_kind).  ``runtime_ms`` is left empty
    unless ``timings`` is set, which keeps the default output reproducible."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in sorted(records, key=lambda r: (r.n, r.quantity_kind)):
        rt = _fmt(r.runtime_ms) if (timings and r.runtime_ms is not None) else ""
        w.writerow([_fmt(r.alpha), _fmt(r.beta), r.n, r.quantity_kind, _fmt(r.value), r.samples, rt])
    return buf.getvalue()


def write_records(path, records, timings: bool = False) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(records_to_csv(records, timings))


def circle_points(m: int) -> np.ndarray:
    if m < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples, got {m}")
    return np.exp(2j * np.pi * np.arange(m) / m)


def _sample_set(sys: NodalSystem, m: int) -> np.ndarray:
    return np.concatenate((circle_points(m), np.asarray(sys.nodes)))


def _gate(alpha: float) -> None:
    if alpha > ALPHA_MAX:
        warnings.warn(
            f"alpha={alpha} is outside -1 < alpha <= {ALPHA_MAX}; the log n bound is not claimed there",
            stacklevel=3,
        )


def _as_interp(obj) -> Interpolant:
    if isinstance(obj, Interpolant):
        return obj
    return interpolate(obj, np.ones(obj.size))


def lebesgue_function(interp_or_sys, z):
    """sum_k |A_0k(z)|."""
    interp = _as_interp(interp_or_sys)
    out = np.abs(interp.basis_matrix(z)).sum(axis=1)
    return float(out[0]) if np.ndim(z) == 0 else out.reshape(np.shape(z))


def lebesgue_constant(interp_or_sys, m_samples: int = 512) -> float:
    """Max of the Lebesgue function over m circle points plus the nodes."""
    interp = _as_interp(interp_or_sys)
    return float(lebesgue_function(interp, _sample_set(interp.sys, m_samples)).max())


def lebesgue_study(alpha, beta, n_list, m_samples: int = 512) -> list[ExperimentRecord]:
    _gate(alpha)
    out = []
    for n in n_list:
        t0 = time.perf_counter()
        sys = build_nodes(JacobiParams(alpha, beta, n))
        lam = lebesgue_constant(sys, m_samples)
        ms = 1e3 * (time.perf_counter() - t0)
        out.append(ExperimentRecord(alpha, beta, n, "lebesgue_constant", lam, m_samples, ms))
    return out


@dataclass(frozen=True)
class LagrangeRow:
    k: int  # position counted from the +1 end; 0 and 2n+1 are the endpoints
    node_index: int
    sup_abs: float  # max over samples of |L_k(z)|
    scaled: float  # sup_abs * k^(3/2 - alpha); sup_abs for the endpoints


def _k_from_plus_one(sys: NodalSystem) -> list[tuple[int, int]]:
    # nodes 1..n are stored with x increasing; count from x = +1 instead
    n = sys.n
    return [(0, 0)] + [(j, n + 1 - j) for j in range(1, n + 1)] + [(2 * n + 1, 2 * n + 1)]


def check_lagrange_decay(sys: NodalSystem, m_samples: int = 512, basis=None) -> list[LagrangeRow]:
    """max_z |L_k(z)| k^(3/2 - alpha) on the circle for the upper-half nodes.

    Conjugate nodes give identical suprema and are omitted.  A table that is
    bounded in k is what a k^(alpha - 3/2) decay of |L_k| would produce.
    """
    alpha = sys.params.alpha
    _gate(alpha)
    if basis is None:
        from .basis import build_basis_data

        basis = build_basis_data(sys)
    pts = _sample_set(sys, m_samples)
    n = sys.n
    rows = []
    for k, idx in _k_from_plus_one(sys):
        sup = float(np.abs(lagrange_eval(sys, idx, pts, basis[idx].r_prime)).max())
        scaled = sup if k in (0, 2 * n + 1) else sup * k ** (1.5 - alpha)
        rows.append(LagrangeRow(k, idx, sup, scaled))
    return rows


@dataclass(frozen=True)
class CoefficientRow:
    p: int
    k: int
    node_index: int
    abs_c: float
    log_scaled: float
    scaled: float | None  # None when exp(log_scaled) would overflow


def check_coefficient_growth(interp_or_sys) -> list[CoefficientRow]:
    """|c_pk| K_n^p n^(p(alpha-1)) k^(p/2 - p alpha), accumulated in log space."""
    interp = _as_interp(interp_or_sys)
    sys = interp.sys
    a, n = sys.params.alpha, sys.n
    log_kn, _ = leading_constant(sys.params)
    rows = []
    for k, idx in _k_from_plus_one(sys)[1:-1]:
        c = interp.coeffs[idx].c
        for p in range(1, 5):
            mag = abs(c[p - 1])
            if mag == 0:
                log_s = -math.inf
            else:
                log_s = (
                    math.log(mag)
                    + p * log_kn
                    + p * (a - 1.0) * math.log(n)
                    + (p / 2.0 - p * a) * math.log(k)
                )
            scaled = math.exp(log_s) if log_s < 700 else None
            rows.append(CoefficientRow(p, k, idx, float(mag), log_s, scaled))
    return rows


def modulus_of_continuity(f, delta: float, m_samples: int = 512, steps: int = 8) -> float:
    """max |f(e^{i t}) - f(e^{i (t + s)})| over m base points and offsets
    s = delta j / steps, j = 1..steps (both signs are covered by symmetry)."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    t = 2 * np.pi * np.arange(m_samples) / m_samples
    base = f(np.exp(1j * t))
    best = 0.0
    for j in range(1, steps + 1):
        s = delta * j / steps
        best = max(best, float(np.abs(f(np.exp(1j * (t + s))) - base).max()))
    return best


def convergence_study(
    f,
    alpha: float,
    beta: float,
    n_list,
    m_samples: int = 1024,
) -> list[ExperimentRecord]:
    """For each n: sup-circle error of Q_n, omega(f, 1/n) and the ratio
    err / (omega(f, 1/n) log n)."""
    if isinstance(f, str):
        f = TEST_FUNCTIONS[f]
    _gate(alpha)
    out = []
    for n in n_list:
        t0 = time.perf_counter()
        sys = build_nodes(JacobiParams(alpha, beta, n))
        interp = interpolate(sys, f(np.asarray(sys.nodes)))
        pts = _sample_set(sys, m_samples)
        err = float(np.abs(q_eval(interp, pts) - f(pts)).max())
        ms = 1e3 * (time.perf_counter() - t0)
        om = modulus_of_continuity(f, 1.0 / n, m_samples)
        out.append(ExperimentRecord(alpha, beta, n, "sup_error", err, m_samples, ms))
        out.append(ExperimentRecord(alpha, beta, n, "omega", om, m_samples, ms))
        if om > 0 and n > 1:
            ratio = err / (om * math.log(n))
            out.append(ExperimentRecord(alpha, beta, n, "rate_ratio", ratio, m_samples, ms))
    return out


def error_profile(interp: Interpolant, f, z) -> np.ndarray:
    """|Q_n(z) - f(z)| at the given points."""
    z = np.asarray(z, dtype=np.complex128)
    return np.abs(q_eval(interp, z) - f(z))


def unit_interpolant(interp: Interpolant) -> Interpolant:
    return with_values(interp, np.ones(interp.sys.size))
