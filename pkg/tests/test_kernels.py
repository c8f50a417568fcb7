import os
import subprocess
import sys

import numpy as np
import pytest

from hfcircle import _kernels as K
from hfcircle._extended import product_jet

from conftest import system, unit_interp

needs_numba = pytest.mark.skipif(not K.HAS_NUMBA, reason="numba not importable")


def _points(m=200):
    rng = np.random.default_rng(3)
    return np.ascontiguousarray(rng.uniform(-1.2, 1.2, m) + 1j * rng.uniform(-1.2, 1.2, m))


def test_loo_values_numpy_direct():
    roots = np.array([1, 1j, -1j, -1], dtype=complex)
    z = np.array([0.5 + 0.5j, 1j])
    full, loo = K.loo_values_numpy(z, roots)
    for i, zi in enumerate(z):
        assert full[i] == pytest.approx(np.prod(zi - roots))
        for k in range(4):
            assert loo[i, k] == pytest.approx(np.prod(np.delete(zi - roots, k)))
    assert full[1] == 0 and loo[1, 1] != 0


def test_loo_jets_numpy_direct():
    roots = np.array([0.5, -0.25j, 2.0], dtype=complex)
    full, loo = K.loo_jets_numpy(0.1 + 0.2j, roots)
    # (z - r1)(z - r2)(z - r3) expanded about a
    a = 0.1 + 0.2j
    poly = np.poly(roots)  # descending monomial coefficients
    shifted = np.polyval(np.polyder(poly, 0), a), np.polyval(np.polyder(poly, 1), a)
    assert full[0] == pytest.approx(shifted[0]) and full[1] == pytest.approx(shifted[1])
    assert full[3] == pytest.approx(1) and np.all(full[4:] == 0)
    assert loo.shape == (3, 6)
    assert loo[1, 0] == pytest.approx((a - 0.5) * (a - 2.0))


@needs_numba
@pytest.mark.parametrize("n", [1, 7, 40])
def test_backends_agree(n):
    interp = unit_interp(0.3, -0.2, n)
    nodes = np.ascontiguousarray(interp.sys.nodes)
    z = _points()
    for a, b in zip(K.loo_values_numpy(z, nodes), K.loo_values_numba(z, nodes)):
        np.testing.assert_allclose(a, b, rtol=1e-12, atol=0)
    # high Taylor orders of a long product cancel heavily; compare per jet against extended precision
    a = 0.2 - 0.3j
    jets = (K.loo_jets_numpy(a, nodes)[1], K.loo_jets_numba(a, nodes)[1])
    tol = 1e-15 * nodes.size ** np.arange(6) / np.arange(1, 7)
    for k in (0, n, nodes.size - 1):
        ref = np.array([complex(c) for c in product_jet(nodes, a, skip=k)])
        scale = np.abs(ref).max()
        for jet in jets:
            assert np.all(np.abs(jet[k] - ref) <= tol * scale * 10 + 1e-15 * scale)
    m1 = K.a0k_matrix_numpy(z, nodes, interp._rprime, interp._cmat)
    m2 = K.a0k_matrix_numba(z, nodes, interp._rprime, interp._cmat)
    np.testing.assert_allclose(m1, m2, rtol=1e-11, atol=1e-13 * np.abs(m1).max())


def _backend_in_subprocess(flag):
    env = dict(os.environ)
    if flag is None:
        env.pop("HFCIRCLE_DISABLE_NUMBA", None)
    else:
        env["HFCIRCLE_DISABLE_NUMBA"] = flag
    out = subprocess.run(
        [sys.executable, "-c", "import hfcircle; print(hfcircle.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_env_flag_selects_numpy():
    assert _backend_in_subprocess("1") == "numpy"


@needs_numba
def test_default_backend_is_numba():
    assert _backend_in_subprocess(None) == "numba"
    assert _backend_in_subprocess("0") == "numba"


def test_numpy_backend_end_to_end(tmp_path):
    script = (
        "import numpy as np\n"
        "from hfcircle import build_nodes, JacobiParams, interpolate, verify_hermite_conditions\n"
        "s = build_nodes(JacobiParams(0.0, 0.0, 6))\n"
        "r = verify_hermite_conditions(interpolate(s, np.exp(s.nodes)))\n"
        "print(r.passes())\n"
    )
    env = dict(os.environ, HFCIRCLE_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "True"
