import subprocess
import sys

import numpy as np
import pytest

from panelblas import blas
from panelblas.blas import BlasCallError
from panelblas.core import SingularMatrixError

Z = np.zeros(100)


def call(routine, **over):
    base = {
        "dgemm": dict(transa="N", transb="N", m=2, n=2, k=2, alpha=1.0, a=Z, lda=2, b=Z, ldb=2, beta=0.0,
                      c=Z.copy(), ldc=2),
        "dsyrk": dict(uplo="L", trans="N", n=2, k=2, alpha=1.0, a=Z, lda=2, beta=0.0, c=Z.copy(), ldc=2),
        "dtrmm": dict(side="L", uplo="L", transa="N", diag="U", m=2, n=2, alpha=1.0, a=Z, lda=2, b=Z.copy(),
                      ldb=2),
        "dtrsm": dict(side="L", uplo="L", transa="N", diag="U", m=2, n=2, alpha=1.0, a=Z, lda=2, b=Z.copy(),
                      ldb=2),
        "dpotrf": dict(uplo="L", n=2, a=np.eye(2).ravel(), lda=2),
        "dgetrf": dict(m=2, n=2, a=np.eye(2).ravel(), lda=2),
    }[routine]
    base.update(over)
    return getattr(blas, routine)(**base)


BAD = [
    ("dgemm", dict(transa="X"), 1),
    ("dgemm", dict(transb="Q"), 2),
    ("dgemm", dict(m=-1), 3),
    ("dgemm", dict(n=-1), 4),
    ("dgemm", dict(k=-1), 5),
    ("dgemm", dict(m=3, lda=2, ldc=3), 8),
    ("dgemm", dict(transa="T", k=3, lda=2, ldb=3), 8),
    ("dgemm", dict(k=3, lda=2, ldb=2), 10),
    ("dgemm", dict(ldb=1), 10),
    ("dgemm", dict(transb="T", n=3, ldb=2, ldc=2), 10),
    ("dgemm", dict(ldc=1), 13),
    ("dgemm", dict(a=np.zeros(3)), 7),
    ("dgemm", dict(c=np.zeros(3)), 12),
    ("dsyrk", dict(uplo="Z"), 1),
    ("dsyrk", dict(trans="Z"), 2),
    ("dsyrk", dict(n=-1), 3),
    ("dsyrk", dict(k=-1), 4),
    ("dsyrk", dict(lda=1), 7),
    ("dsyrk", dict(trans="T", k=3, lda=2), 7),
    ("dsyrk", dict(ldc=1), 10),
    ("dtrmm", dict(side="Z"), 1),
    ("dtrmm", dict(uplo="Z"), 2),
    ("dtrmm", dict(transa="Z"), 3),
    ("dtrmm", dict(diag="Z"), 4),
    ("dtrmm", dict(m=-1), 5),
    ("dtrmm", dict(n=-1), 6),
    ("dtrmm", dict(lda=1), 9),
    ("dtrmm", dict(side="R", n=3, lda=2, ldb=2), 9),
    ("dtrmm", dict(ldb=1), 11),
    ("dtrsm", dict(side="Z"), 1),
    ("dtrsm", dict(uplo="Z"), 2),
    ("dtrsm", dict(transa="Z"), 3),
    ("dtrsm", dict(diag="Z"), 4),
    ("dtrsm", dict(m=-1), 5),
    ("dtrsm", dict(n=-1), 6),
    ("dtrsm", dict(lda=1), 9),
    ("dtrsm", dict(ldb=1), 11),
    ("dpotrf", dict(uplo="Z"), 1),
    ("dpotrf", dict(n=-1), 2),
    ("dpotrf", dict(lda=1), 4),
    ("dgetrf", dict(m=-1), 1),
    ("dgetrf", dict(n=-1), 2),
    ("dgetrf", dict(lda=1), 4),
]


@pytest.mark.parametrize("routine,over,index", BAD)
def test_argument_index(routine, over, index):
    with pytest.raises(BlasCallError) as e:
        call(routine, **over)
    assert e.value.index == index
    assert e.value.routine == routine
    assert f"parameter {index}" in str(e.value)


def test_first_invalid_argument_wins():
    with pytest.raises(BlasCallError) as e:
        call("dgemm", transb="Q", m=-1, ldc=0)
    assert e.value.index == 2


def test_read_only_output_rejected():
    c = np.zeros(4)
    c.flags.writeable = False
    with pytest.raises(BlasCallError) as e:
        call("dgemm", c=c)
    assert e.value.index == 12


@pytest.mark.parametrize("over", [dict(m=0), dict(n=0), dict(alpha=0.0, beta=1.0, k=0)])
def test_gemm_quick_return(over, rng):
    c = rng.standard_normal(16)
    before = c.copy()
    stats = call("dgemm", c=c, **over)
    assert stats.elements_packed == 0
    np.testing.assert_array_equal(c, before)


def test_quick_return_tolerates_minimal_buffers():
    blas.dgemm("N", "N", 0, 0, 0, 1.0, np.zeros(0), 1, np.zeros(0), 1, 0.0, np.zeros(0), 1)
    blas.dsyrk("L", "N", 0, 5, 1.0, np.zeros(0), 1, 0.0, np.zeros(0), 1)
    blas.dtrsm("L", "L", "N", "N", 0, 4, 1.0, np.zeros(0), 1, np.zeros(0), 1)
    assert blas.dpotrf("L", 0, np.zeros(0), 1) == 0
    ipiv, info = blas.dgetrf(0, 3, np.zeros(0), 1)
    assert info == 0 and ipiv.size == 0


def test_flags_are_case_insensitive(rng):
    a, b = rng.standard_normal((3, 3)), rng.standard_normal((3, 3))
    c1, c2 = np.zeros((3, 3), order="F"), np.zeros((3, 3), order="F")
    af, bf = np.asfortranarray(a), np.asfortranarray(b)
    blas.dgemm("t", "n", 3, 3, 3, 1.0, af, 3, bf, 3, 0.0, c1, 3)
    blas.dgemm("T", "N", 3, 3, 3, 1.0, af, 3, bf, 3, 0.0, c2, 3)
    np.testing.assert_array_equal(c1, c2)
    blas.dgemm("C", "N", 3, 3, 3, 1.0, af, 3, bf, 3, 0.0, c2, 3)
    np.testing.assert_array_equal(c1, c2)


def test_fortran_2d_arrays_accepted(rng):
    a = np.asfortranarray(rng.standard_normal((5, 4)))
    b = np.asfortranarray(rng.standard_normal((4, 6)))
    c = np.zeros((5, 6), order="F")
    blas.dgemm("N", "N", 5, 6, 4, 1.0, a, 5, b, 4, 0.0, c, 5)
    np.testing.assert_allclose(c, a @ b, rtol=1e-14, atol=1e-14)


def test_dgemm_strided_ld(rng):
    m, n, k, ld = 7, 5, 6, 11
    a = rng.standard_normal(ld * k)
    b = rng.standard_normal(ld * n)
    c = rng.standard_normal(ld * n)
    c0 = c.copy()
    blas.dgemm("N", "N", m, n, k, 2.0, a, ld, b, ld, -1.0, c, ld)
    A = a.reshape(k, ld).T[:m]
    B = b.reshape(n, ld).T[:k]
    C = c0.reshape(n, ld).T[:m]
    got = c.reshape(n, ld).T
    np.testing.assert_allclose(got[:m], 2.0 * A @ B - C, rtol=1e-13, atol=1e-13)
    np.testing.assert_array_equal(got[m:], c0.reshape(n, ld).T[m:])


def test_dpotrf_spd_64(rng):
    n = 64
    m = rng.standard_normal((n, n))
    s = m @ m.T + n * np.eye(n)
    a = np.asfortranarray(s)
    assert blas.dpotrf("L", n, a, n) == 0
    l = np.tril(a)
    assert np.linalg.norm(l @ l.T - s) <= 1e-12 * np.linalg.norm(s)


def test_dpotrf_info_positive():
    a = np.asfortranarray(np.array([[1.0, 2.0], [2.0, 1.0]]))
    assert blas.dpotrf("U", 2, a, 2) == 2


def test_dgetrf_fills_ipiv(rng):
    a = np.asfortranarray(rng.standard_normal((6, 6)))
    ipiv = np.zeros(6, dtype=np.int64)
    piv, info = blas.dgetrf(6, 6, a, 6, ipiv)
    assert info == 0
    np.testing.assert_array_equal(ipiv, piv)


def test_dgetrf_short_ipiv():
    with pytest.raises(BlasCallError) as e:
        blas.dgetrf(3, 3, np.eye(3).ravel(), 3, np.zeros(2, dtype=np.int64))
    assert e.value.index == 5


def test_dtrsm_singular():
    a = np.eye(3).ravel()
    a[4] = 0.0
    with pytest.raises(SingularMatrixError):
        blas.dtrsm("L", "U", "N", "N", 3, 2, 1.0, a, 3, np.ones(6), 3)


def test_dsyrk_returns_variant(rng):
    a = np.asfortranarray(rng.standard_normal((20, 30)))
    c = np.zeros((20, 20), order="F")
    stats = blas.dsyrk("L", "N", 20, 30, 1.0, a, 20, 0.0, c, 20, variant="B")
    assert stats.variant == "B" and stats.elements_packed == 600


def test_abort_mode_prints_xerbla_and_aborts():
    code = (
        "import numpy as np\n"
        "from panelblas import blas\n"
        "blas.set_abort_on_error(True)\n"
        "blas.dgemm('N','N',2,2,2,1.0,np.zeros(4),1,np.zeros(4),2,0.0,np.zeros(4),2)\n"
    )
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, timeout=300)
    assert r.returncode != 0
    assert "On entry to DGEMM parameter number  8 had an illegal value" in r.stderr
