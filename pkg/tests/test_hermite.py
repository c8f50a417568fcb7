import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hfcircle import hermite as H
from hfcircle.basis import build_basis_data
from hfcircle.hermite import (
    a0k_eval,
    coeffs_closed_form,
    coeffs_oracle,
    coeffs_rederived,
    compare_coefficients,
    eval_jet,
    interpolate,
    verify_hermite_conditions,
    with_values,
)

from conftest import PARAM_SETS, random_values, system, unit_interp

NODE_I = 1


def _basis(ab, n):
    return unit_interp(*ab, n).basis


def test_c1_example():
    s = system(0.0, 0.0, 1)
    b = build_basis_data(s)
    assert coeffs_closed_form(b[NODE_I]).c[0] == pytest.approx(-15 / 8)
    assert coeffs_oracle(s, b, NODE_I).c[0] == pytest.approx(-15 / 8)


def test_n1_all_coefficients():
    # L' = -3i/2, L'' = -2, L''' = 3i/2, L'''' = 0, R' = -4i at the node i
    s = system(0.0, 0.0, 1)
    c = coeffs_oracle(s, build_basis_data(s), NODE_I).c
    np.testing.assert_allclose(c, [-15 / 8, 115 / 64, -595 / 512, 2310 / 4096], atol=1e-14)


def test_vanishing_brackets():
    from hfcircle.basis import NodeBasisData

    d = NodeBasisData(0, np.array([2.0, 0, 0, 0, 0]), np.array([0, 0, 1.0, 1.0]))
    c = coeffs_closed_form(d).c
    assert c[0] == 0 and c[1] == 0


@pytest.mark.parametrize("ab", PARAM_SETS)
@pytest.mark.parametrize("n", [1, 3, 8])
def test_rederived_matches_oracle(ab, n):
    s = system(*ab, n)
    assert compare_coefficients(s, _basis(ab, n), method="rederived", rtol=1e-8) == []


@pytest.mark.parametrize("ab", PARAM_SETS)
@pytest.mark.parametrize("n", [1, 4])
def test_printed_forms_mismatch_report(ab, n):
    s = system(*ab, n)
    report = compare_coefficients(s, _basis(ab, n), method="printed", rtol=1e-8)
    # c_1k agrees everywhere; c_2k..c_4k disagree at every node
    assert {(m.p, m.k) for m in report} == {(p, k) for p in (2, 3, 4) for k in range(s.size)}
    for m in report:
        assert np.isfinite(m.closed_form) and np.isfinite(m.oracle) and m.rel_error > 1e-8
    assert report == compare_coefficients(s, _basis(ab, n), method="printed", rtol=1e-8)


@pytest.mark.parametrize("ab", PARAM_SETS)
def test_first_order_is_closed_form(ab):
    s = system(*ab, 6)
    b = _basis(ab, 6)
    for k in range(s.size):
        expected = -5 * b[k].L_self_derivs[0] / b[k].r_prime
        assert coeffs_oracle(s, b, k).c[0] == pytest.approx(expected, rel=1e-12)


def test_double_precision_oracle_agrees():
    s = system(0.5, 0.5, 6)
    b = build_basis_data(s, "double")
    for k in range(s.size):
        np.testing.assert_allclose(coeffs_oracle(s, b, k, "double").c, coeffs_oracle(s, b, k).c, rtol=1e-9)


@pytest.mark.parametrize("ab", PARAM_SETS)
def test_coefficient_conjugation(ab):
    s = system(*ab, 7)
    interp = unit_interp(*ab, 7)
    for k in range(s.size):
        np.testing.assert_allclose(interp.coeffs[s.conjugate_index(k)].c, np.conj(interp.coeffs[k].c), rtol=1e-12)


@pytest.mark.parametrize("ab", PARAM_SETS)
@pytest.mark.parametrize("n", [1, 4, 8])
def test_a0k_node_conditions(ab, n):
    interp = unit_interp(*ab, n)
    s = interp.sys
    circle = np.exp(2j * np.pi * np.arange(512) / 512)
    sup = np.abs(interp.basis_matrix(circle)).max(axis=0)
    for k in range(s.size):
        np.testing.assert_allclose(a0k_eval(interp, k, s.nodes), np.eye(s.size)[k], atol=1e-12)
        for j in range(s.size):
            d = a0k_eval(interp, k, s.nodes[j], as_jet=True).derivatives()
            assert np.all(np.abs(d[1:5]) <= 1e-9 * sup[k] * max(1, n) ** np.arange(1, 5))


def test_a0k_dual_path_n1():
    s = system(0.0, 0.0, 1)
    a = interpolate(s, np.ones(4), method="oracle")
    b = interpolate(s, np.ones(4), method="rederived")
    for k in range(4):
        assert a0k_eval(a, k, 0) == pytest.approx(a0k_eval(b, k, 0), abs=1e-10)


def test_interpolate_length_check():
    with pytest.raises(ValueError):
        interpolate(system(0.0, 0.0, 2), np.ones(5))


def test_unknown_method():
    with pytest.raises(ValueError):
        interpolate(system(0.0, 0.0, 2), np.ones(6), method="guess")


@pytest.mark.parametrize("ab", PARAM_SETS)
@pytest.mark.parametrize("n", [2, 8, 16])
def test_constant_reproduced(ab, n):
    interp = unit_interp(*ab, n)
    z = np.exp(2j * np.pi * np.arange(128) / 128)
    assert np.max(np.abs(H.eval(interp, z) - 1)) <= 1e-9 * n


def test_one_hot_is_basis_function():
    base = unit_interp(0.3, -0.2, 5)
    z = np.array([0.2 + 0.1j, -0.9j, 0.5])
    for k in (0, 3, 11):
        one_hot = np.zeros(base.sys.size)
        one_hot[k] = 1
        np.testing.assert_allclose(H.eval(with_values(base, one_hot), z), a0k_eval(base, k, z), rtol=1e-14)


def test_identity_at_nodes():
    s = system(0.5, 0.5, 6)
    interp = with_values(unit_interp(0.5, 0.5, 6), s.nodes)
    np.testing.assert_allclose(H.eval(interp, s.nodes), s.nodes, atol=1e-14)


def test_dual_path_z_squared():
    s = system(0.0, 0.0, 4)
    vals = np.asarray(s.nodes) ** 2
    z = 0.3 + 0.2j
    a = H.eval(interpolate(s, vals, method="oracle"), z)
    b = H.eval(interpolate(s, vals, method="rederived"), z)
    assert abs(a - b) <= 1e-10


def test_eval_jet_at_node(rng):
    s = system(0.0, 0.0, 6)
    vals = random_values(rng, s.size)
    interp = with_values(unit_interp(0.0, 0.0, 6), vals)
    for k in range(s.size):
        j = eval_jet(interp, s.nodes[k])
        assert j.value == pytest.approx(vals[k], abs=1e-13)


def test_verify_constant():
    rep = verify_hermite_conditions(unit_interp(0.0, 0.0, 8))
    assert rep.max_value_residual <= 1e-9 and rep.max_scaled_deriv_residual <= 1e-9


@pytest.mark.parametrize("ab", PARAM_SETS)
@pytest.mark.parametrize("n", [1, 5, 16])
def test_verify_random(ab, n, rng):
    interp = with_values(unit_interp(*ab, n), random_values(rng, 2 * n + 2))
    rep = verify_hermite_conditions(interp)
    assert rep.value_residuals.shape == (2 * n + 2,) and rep.deriv_residuals.shape == (2 * n + 2, 4)
    assert rep.passes(1e-9, 1e-6)


def test_verify_one_hot_table():
    base = unit_interp(0.0, 0.0, 3)
    v = np.zeros(base.sys.size)
    v[2] = 1
    rep = verify_hermite_conditions(with_values(base, v))
    assert rep.max_value_residual <= 1e-14 and rep.max_scaled_deriv_residual <= 1e-11


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(PARAM_SETS), st.integers(1, 10), st.floats(0, 2 * np.pi), st.floats(0, 1.2))
def test_conjugation_equivariance(ab, n, theta, r):
    s = system(*ab, n)
    interp = with_values(unit_interp(*ab, n), np.exp(np.asarray(s.nodes)))
    z = r * np.exp(1j * theta)
    assert abs(H.eval(interp, np.conj(z)) - np.conj(H.eval(interp, z))) <= 1e-10


@pytest.mark.parametrize("ab", PARAM_SETS)
@pytest.mark.parametrize("n", [2, 6])
def test_degree_bound(ab, n, rng):
    # Fourier coefficients of Q on a fine circle grid are its Taylor coefficients
    s = system(*ab, n)
    interp = with_values(unit_interp(*ab, n), random_values(rng, s.size))
    m = 8 * interp.degree_bound
    q = H.eval(interp, np.exp(2j * np.pi * np.arange(m) / m))
    coef = np.fft.fft(q) / m
    top = np.abs(coef[interp.degree_bound:]).max()
    assert top <= 1e-8 * np.abs(coef).max()
    assert np.abs(coef[: interp.degree_bound]).max() > 0


def _confluent_solve(s, k, dps=60):
    """Degree < 5(2n+2) polynomial with value delta_kj and zero derivatives
    1..4 at every node, from the confluent Vandermonde system in monomials."""
    with mp.workdps(dps):
        nodes = [mp.mpc(complex(v).real, complex(v).imag) for v in s.nodes]
        dim = 5 * len(nodes)
        m = mp.matrix(dim, dim)
        for j, zj in enumerate(nodes):
            for r in range(5):
                for p in range(r, dim):
                    m[5 * j + r, p] = mp.ff(p, r) * zj ** (p - r)
        rhs = mp.matrix(dim, 1)
        rhs[5 * k] = 1
        return mp.lu_solve(m, rhs)


@pytest.mark.parametrize("ab", [(0.0, 0.0), (-0.5, -0.5), (0.3, -0.2)])
@pytest.mark.parametrize("n", [1, 3])
def test_against_confluent_vandermonde(ab, n):
    interp = unit_interp(*ab, n)
    z = [0.4 + 0.3j, 1j, -0.8 + 0.1j, np.exp(0.37j)]
    for k in range(interp.sys.size):
        c = _confluent_solve(interp.sys, k)
        with mp.workdps(60):
            ref = [complex(mp.polyval(list(reversed(list(c))), mp.mpc(v.real, v.imag))) for v in map(complex, z)]
        np.testing.assert_allclose(a0k_eval(interp, k, np.array(z)), ref, rtol=1e-12, atol=1e-13)
