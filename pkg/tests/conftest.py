import functools

import numpy as np
import pytest

from hfcircle.hermite import interpolate
from hfcircle.jacobi import JacobiParams
from hfcircle.nodal import build_nodes

PARAM_SETS = [(-0.5, -0.5), (0.0, 0.0), (0.5, 0.5), (0.3, -0.2)]


@functools.lru_cache(maxsize=None)
def system(alpha, beta, n):
    return build_nodes(JacobiParams(alpha, beta, n))


@functools.lru_cache(maxsize=None)
def unit_interp(alpha, beta, n):
    """Interpolant of f = 1; reuse its basis/coefficients via with_values."""
    s = system(alpha, beta, n)
    return interpolate(s, np.ones(s.size))


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def random_values(rng, size):
    return rng.uniform(-1, 1, size) + 1j * rng.uniform(-1, 1, size)


ACCEPTANCE_LINES: list[str] = []


def report(label: str, ok: bool, detail: str) -> bool:
    """Record one acceptance line; printed again in the terminal summary."""
    line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
