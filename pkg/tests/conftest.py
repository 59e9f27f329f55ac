import math

import numpy as np
import pytest

from qqent import InitialStateSpec, ModelParams, build_initial_state

FIG1 = ModelParams(j_x=1, j_y=1, j_z=1, d_z=1, b_qb=1, b_qt=1)
FIG2 = ModelParams(j_x=1, j_y=1, j_z=1, d_z=2, b_qb=1, b_qt=1)
FIG3 = ModelParams(j_x=1, j_y=5, j_z=10, d_z=1, b_qb=1, b_qt=1)

ACCEPTANCE_LINES = []


@pytest.fixture
def psi0():
    return build_initial_state(InitialStateSpec.symmetric(1.0))


@pytest.fixture
def rng():
    return np.random.default_rng(20240715)


def random_hermitian(rng, n=6, scale=1.0):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (x + x.conj().T) / 2


def random_state(rng, n=6):
    x = rng.normal(size=n) + 1j * rng.normal(size=n)
    return x / np.linalg.norm(x)


def random_unitary(rng, n):
    q, r = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def schmidt_negativity(psi):
    """Pure-state negativity from Schmidt coefficients: ((sum s)^2 - 1) / 2."""
    s = np.linalg.svd(np.asarray(psi).reshape(2, 3), compute_uv=False)
    return 0.5 * (s.sum() ** 2 - 1.0)


def taylor_expm(a, terms=20):
    out = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, terms + 1):
        term = term @ a / k
        out = out + term
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


SQRT2 = math.sqrt(2.0)
