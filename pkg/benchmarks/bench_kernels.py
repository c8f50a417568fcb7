"""Compare the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--n 16,32,64,128] [--samples 4096] [--repeat 5]

Reports best-of-``repeat`` wall time per kernel and backend, plus the max
relative difference between the two results.
"""

import argparse
import time

import numpy as np

from hfcircle import _kernels as K
from hfcircle.hermite import interpolate
from hfcircle.jacobi import JacobiParams
from hfcircle.nodal import build_nodes


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _maxdiff(a, b):
    if isinstance(a, tuple):
        return max(_maxdiff(x, y) for x, y in zip(a, b))
    a, b = np.asarray(a), np.asarray(b)
    return float(np.abs(a - b).max() / max(np.abs(a).max(), 1e-300))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", default="16,32,64,128")
    ap.add_argument("--samples", type=int, default=4096)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K.HAS_NUMBA:
        print("numba not importable; nothing to compare")
        return
    pts = np.exp(2j * np.pi * np.arange(args.samples) / args.samples)
    print(f"{'kernel':<12}{'n':>6}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}{'rel diff':>12}")
    for n in [int(v) for v in args.n.split(",")]:
        sys_ = build_nodes(JacobiParams(0.0, 0.0, n))
        interp = interpolate(sys_, np.ones(sys_.size), precision="double")
        nodes = np.ascontiguousarray(sys_.nodes)
        rp, cm = interp._rprime, interp._cmat
        cases = {
            "loo_values": (lambda: K.loo_values_numpy(pts, nodes), lambda: K.loo_values_numba(pts, nodes)),
            "loo_jets": (lambda: K.loo_jets_numpy(0.3 + 0.1j, nodes), lambda: K.loo_jets_numba(0.3 + 0.1j, nodes)),
            "a0k_matrix": (lambda: K.a0k_matrix_numpy(pts, nodes, rp, cm), lambda: K.a0k_matrix_numba(pts, nodes, rp, cm)),
        }
        for name, (f_np, f_nb) in cases.items():
            f_nb()  # compile / load cache
            t_np, r_np = best_of(f_np, args.repeat)
            t_nb, r_nb = best_of(f_nb, args.repeat)
            print(f"{name:<12}{n:>6}{1e3 * t_np:>12.3f}{1e3 * t_nb:>12.3f}{t_np / t_nb:>10.2f}{_maxdiff(r_np, r_nb):>12.2e}")


if __name__ == "__main__":
    main()
