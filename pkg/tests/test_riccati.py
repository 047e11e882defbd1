import numpy as np
import pytest

from panelblas import riccati
from panelblas.core import NotPositiveDefiniteError
from panelblas.riccati import OcpDims, riccati_step


def spd(rng, n):
    m = rng.standard_normal((n, n))
    return m @ m.T + n * np.eye(n)


@pytest.mark.parametrize("fused", [False, True])
def test_zero_dynamics_gives_plain_cholesky(rng, fused):
    nx, nu = 5, 3
    Q, R = spd(rng, nx), spd(rng, nu)
    calL = np.linalg.cholesky(spd(rng, nx))
    f = riccati_step(calL, np.zeros((nx, nx)), np.zeros((nx, nu)), Q, R, np.zeros((nu, nx)), fused)
    np.testing.assert_allclose(f.Lam, np.linalg.cholesky(R), rtol=1e-13, atol=1e-13)
    np.testing.assert_allclose(f.calL, np.linalg.cholesky(Q), rtol=1e-13, atol=1e-13)
    assert not f.L.any()


@pytest.mark.parametrize("fused", [False, True])
def test_two_state_one_input_matches_closed_form(fused):
    A = np.array([[1.0, 0.1], [0.0, 1.0]])
    B = np.array([[0.005], [0.1]])
    Q = np.diag([1.0, 0.5])
    R = np.array([[0.2]])
    S = np.array([[0.01, 0.02]])
    P1 = np.array([[3.0, 0.4], [0.4, 2.0]])
    f = riccati_step(np.linalg.cholesky(P1), A, B, Q, R, S, fused)
    G = S + B.T @ P1 @ A
    H = R + B.T @ P1 @ B
    P0 = Q + A.T @ P1 @ A - G.T @ G / H[0, 0]
    np.testing.assert_allclose(f.calL @ f.calL.T, P0, rtol=1e-10, atol=1e-10)
    np.testing.assert_allclose(f.Lam @ f.Lam.T, H, rtol=1e-12)
    np.testing.assert_allclose(f.L @ f.Lam.T, G.T, rtol=1e-12)


@pytest.mark.parametrize("nx,nu", [(1, 0), (2, 1), (8, 4), (24, 12), (40, 20), (64, 32)])
def test_fused_and_unfused_agree(nx, nu):
    data = riccati.random_problem(OcpDims(nx, nu, 4), seed=nx)
    a = riccati.factor_sequence(data, "blas_path")
    b = riccati.factor_sequence(data, "fused_native_path")
    for x, y in zip(a, b):
        assert np.abs(x - y).max() <= 1e-13 * np.abs(x).max()


def test_horizon_one_is_one_step():
    data = riccati.random_problem(OcpDims(6, 2, 1), seed=3)
    seq = riccati.factor_sequence(data, "fused_native_path")
    step = riccati_step(np.linalg.cholesky(data.QN), data.A[0], data.B[0], data.Q[0], data.R[0], data.S[0])
    np.testing.assert_allclose(seq[0], step.calL, rtol=1e-13, atol=1e-13)
    assert len(seq) == 2


@pytest.mark.parametrize("impl", riccati.IMPLS)
def test_residual_against_classic_recursion(impl):
    run = riccati.riccati_run(OcpDims(16, 5, 10), impl, seed=1)
    assert isinstance(run.residual, float)
    assert run.residual <= 1e-12 and run.seconds >= 0


def test_indefinite_stage_raises():
    nx, nu = 3, 1
    with pytest.raises(NotPositiveDefiniteError):
        riccati_step(np.eye(nx), np.zeros((nx, nx)), np.zeros((nx, nu)), -np.eye(nx), np.eye(nu),
                     np.zeros((nu, nx)))


def test_invalid_inputs():
    with pytest.raises(ValueError):
        OcpDims(0, 1)
    with pytest.raises(ValueError):
        riccati.factor_sequence(riccati.random_problem(OcpDims(2, 1, 1)), "lapack")
