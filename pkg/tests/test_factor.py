import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from panelblas.core import ArgumentError, ColMatView
from panelblas.factor import getrf, potrf
from panelblas.kernels import KernelConfig
from panelblas.engine import EngineConfig


def spd(rng, n):
    m = rng.standard_normal((n, n))
    return m @ m.T + n * np.eye(n)


def apply_pivots(a, ipiv):
    pa = a.copy()
    for i, p in enumerate(ipiv):
        pa[[i, p - 1]] = pa[[p - 1, i]]
    return pa


def lu_parts(f, m, n):
    r = min(m, n)
    return np.tril(f[:, :r], -1) + np.eye(m, r), np.triu(f[:r, :])


def test_potrf_identity():
    A = ColMatView.from_array(np.eye(5))
    fi = potrf("L", 5, A)
    assert fi.ok and fi.info == 0
    np.testing.assert_array_equal(A.to_array(), np.eye(5))


def test_potrf_small_example():
    A = ColMatView.from_array(np.array([[4.0, -7.0], [2.0, 5.0]]))
    assert potrf("L", 2, A).info == 0
    np.testing.assert_array_equal(A.to_array(), [[2.0, -7.0], [1.0, 2.0]])


@pytest.mark.parametrize("uplo", "LU")
def test_potrf_indefinite_reports_pivot(uplo):
    A = ColMatView.from_array(np.array([[1.0, 2.0], [2.0, 1.0]]))
    fi = potrf(uplo, 2, A)
    assert fi.info == 2 and not fi.ok
    assert A.to_array()[0, 0] == 1.0


def test_potrf_partial_factor_valid(rng):
    n, p = 12, 7
    a = spd(rng, n)
    a[p - 1, p - 1] = -1e3
    A = ColMatView.from_array(a)
    assert potrf("L", n, A).info == p
    l = np.tril(A.to_array()[: p - 1, : p - 1])
    np.testing.assert_allclose(l @ l.T, a[: p - 1, : p - 1], rtol=1e-12, atol=1e-12)


def test_potrf_zero_pivot_fails():
    A = ColMatView.from_array(np.zeros((3, 3)))
    assert potrf("L", 3, A).info == 1


@pytest.mark.parametrize("n", [1, 3, 4, 9, 16, 33, 64, 127, 300])
def test_potrf_reconstruction(rng, n):
    a = spd(rng, n)
    A = ColMatView.from_array(a, ld=n + 1)
    fi = potrf("L", n, A)
    assert fi.info == 0
    assert fi.stats.elements_packed == n * (n + 1) // 2
    l = np.tril(A.to_array())
    assert np.linalg.norm(l @ l.T - a) <= 1e-12 * np.linalg.norm(a)


def test_potrf_upper_is_transpose_of_lower(rng):
    n = 37
    a = spd(rng, n)
    L, U = ColMatView.from_array(a), ColMatView.from_array(a)
    potrf("L", n, L)
    potrf("U", n, U)
    np.testing.assert_array_equal(np.triu(U.to_array()), np.tril(L.to_array()).T)


def test_potrf_leaves_other_triangle(rng):
    n = 20
    a = spd(rng, n)
    A = ColMatView.from_array(a)
    potrf("L", n, A)
    np.testing.assert_array_equal(np.triu(A.to_array(), 1), np.triu(a, 1))


@pytest.mark.parametrize("ps,mr", [(4, 4), (4, 12), (8, 8), (8, 16)])
def test_potrf_other_kernels(rng, ps, mr):
    n = 45
    a = spd(rng, n)
    A = ColMatView.from_array(a)
    cfg = EngineConfig(kernel=KernelConfig(mr, ps, ps))
    assert potrf("L", n, A, cfg).info == 0
    l = np.tril(A.to_array())
    assert np.linalg.norm(l @ l.T - a) <= 1e-12 * np.linalg.norm(a)


def test_potrf_rejects_bad_args():
    with pytest.raises(ArgumentError):
        potrf("X", 2, ColMatView.from_array(np.eye(2)))
    with pytest.raises(ArgumentError):
        potrf("L", 3, ColMatView.from_array(np.eye(2)))


def test_potrf_empty():
    fi = potrf("L", 0, ColMatView(np.zeros(1), 0, 0, 1, True))
    assert fi.info == 0 and fi.stats.elements_packed == 0


def test_getrf_permutation_example():
    A = ColMatView.from_array(np.array([[0.0, 1.0], [1.0, 0.0]]))
    ipiv, fi = getrf(2, 2, A)
    assert fi.info == 0
    assert ipiv.tolist() == [2, 2]
    np.testing.assert_array_equal(A.to_array(), np.eye(2))


def test_getrf_identity_pivots():
    A = ColMatView.from_array(np.eye(6))
    ipiv, fi = getrf(6, 6, A)
    assert ipiv.tolist() == [1, 2, 3, 4, 5, 6]
    assert ipiv.dtype == np.int64 and fi.info == 0


def test_getrf_dominant_diagonal_no_swaps(rng):
    n = 25
    a = rng.uniform(-1, 1, (n, n)) + 3 * n * np.eye(n)
    ipiv, _ = getrf(n, n, ColMatView.from_array(a))
    assert ipiv.tolist() == list(range(1, n + 1))


@pytest.mark.parametrize("m,n", [(30, 30), (1, 1), (7, 3), (3, 7), (64, 40), (40, 64), (100, 100)])
def test_getrf_reconstruction(rng, m, n):
    a = rng.uniform(-1, 1, (m, n))
    A = ColMatView.from_array(a, ld=m + 2)
    ipiv, fi = getrf(m, n, A)
    assert fi.info == 0
    l, u = lu_parts(A.to_array(), m, n)
    assert np.abs(l).max() <= 1.0
    assert np.linalg.norm(l @ u - apply_pivots(a, ipiv)) <= 1e-12 * np.linalg.norm(a)


def test_getrf_singular_info(rng):
    a = rng.uniform(-1, 1, (10, 10))
    a[:, 3] = 0.0
    ipiv, fi = getrf(10, 10, ColMatView.from_array(a))
    assert fi.info == 4


@given(st.integers(1, 40), st.integers(1, 40), st.integers(0, 2**31))
def test_getrf_matches_scipy_pivots(m, n, seed):
    import scipy.linalg

    a = np.random.default_rng(seed).uniform(-1, 1, (m, n))
    A = ColMatView.from_array(a)
    ipiv, fi = getrf(m, n, A)
    lu, piv = scipy.linalg.lu_factor(a) if m == n else (None, None)
    l, u = lu_parts(A.to_array(), m, n)
    assert np.linalg.norm(l @ u - apply_pivots(a, ipiv)) <= 1e-12 * max(np.linalg.norm(a), 1e-300)
    if piv is not None:
        assert (ipiv == piv + 1).all()
