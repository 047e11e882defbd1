"""The naive oracle checked against hand values and exact rational arithmetic."""

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from panelblas import reference
from panelblas.core import SingularMatrixError


def flat(a):
    return np.asarray(a, dtype=float).flatten(order="F")


def unflat(buf, m, n, ld=None):
    return buf.reshape(n, ld or m).T[:m]


def exact_matmul(a, b):
    return [[sum((Fraction(a[i][l]) * Fraction(b[l][j]) for l in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def exact_op_tri(a, uplo, trans, diag):
    n = len(a)
    t = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                t[i][j] = Fraction(1) if diag == "U" else Fraction(a[i][j])
            elif (uplo == "L") == (i > j):
                t[i][j] = Fraction(a[i][j])
    return [list(r) for r in zip(*t)] if trans == "T" else t


def exact_solve_tri(t, b, left):
    """Solve op(T) X = B (left) or X op(T) = B by exact substitution."""
    if not left:
        tt = [list(r) for r in zip(*t)]
        bt = [list(r) for r in zip(*b)]
        return [list(r) for r in zip(*exact_solve_tri(tt, bt, True))]
    n = len(t)
    lower = all(t[i][j] == 0 for i in range(n) for j in range(i + 1, n))
    x = [[Fraction(0)] * len(b[0]) for _ in range(n)]
    order = range(n) if lower else reversed(range(n))
    for i in order:
        for j in range(len(b[0])):
            s = Fraction(b[i][j]) - sum(t[i][l] * x[l][j] for l in range(n) if l != i)
            x[i][j] = s / t[i][i]
    return x


def ints(draw_rng, m, n, lo=-4, hi=4):
    return draw_rng.integers(lo, hi + 1, (m, n)).astype(float)


def test_gemm_frozen_example():
    a = [[1, 2, 3], [4, 5, 6]]
    b = [[7, 8], [9, 10], [11, 12]]
    c = np.zeros(4)
    reference.naive_gemm("N", "N", 2, 2, 3, 1.0, flat(a), 2, flat(b), 3, 0.0, c, 2)
    np.testing.assert_array_equal(unflat(c, 2, 2), [[58, 64], [139, 154]])


def test_gemm_one_by_one():
    c = np.array([5.0])
    reference.naive_gemm("N", "N", 1, 1, 1, 2.0, np.array([3.0]), 1, np.array([4.0]), 1, -1.0, c, 1)
    assert c[0] == 19.0


def test_gemm_beta_zero_ignores_nan():
    c = np.array([np.nan])
    reference.naive_gemm("N", "N", 1, 1, 1, 1.0, np.array([1.0]), 1, np.array([1.0]), 1, 0.0, c, 1)
    assert c[0] == 1.0


def test_potrf_identity():
    a = flat(np.eye(4))
    assert reference.naive_potrf("L", 4, a, 4) == 0
    np.testing.assert_array_equal(unflat(a, 4, 4), np.eye(4))


def test_potrf_frozen_example():
    a = flat([[4, 2], [2, 5]])
    assert reference.naive_potrf("L", 2, a, 2) == 0
    np.testing.assert_array_equal(np.tril(unflat(a, 2, 2)), [[2, 0], [1, 2]])


def test_getrf_frozen_example():
    a = flat([[1, 2], [3, 4]])
    ipiv, info = reference.naive_getrf(2, 2, a, 2)
    assert info == 0 and ipiv.tolist() == [2, 2]
    np.testing.assert_allclose(unflat(a, 2, 2), [[3, 4], [1 / 3, 2 / 3]], rtol=1e-15)


def test_trsm_singular():
    with pytest.raises(SingularMatrixError):
        reference.naive_trsm("L", "L", "N", "N", 2, 1, 1.0, flat([[1, 0], [1, 0]]), 2, np.ones(2), 2)


@given(st.sampled_from(list(itertools.product("NT", "NT"))), st.integers(1, 6), st.integers(1, 6),
       st.integers(0, 6), st.integers(0, 2**31))
def test_gemm_exact(trans, m, n, k, seed):
    r = np.random.default_rng(seed)
    ta, tb = trans
    a = ints(r, m, k) if ta == "N" else ints(r, k, m)
    b = ints(r, k, n) if tb == "N" else ints(r, n, k)
    c = ints(r, m, n)
    buf = flat(c)
    reference.naive_gemm(ta, tb, m, n, k, 2.0, flat(a), a.shape[0], flat(b), b.shape[0], -3.0, buf, m)
    oa = a if ta == "N" else a.T
    ob = b if tb == "N" else b.T
    ab = exact_matmul(oa.tolist(), ob.tolist()) if k else [[Fraction(0)] * n for _ in range(m)]
    want = [[2 * ab[i][j] - 3 * Fraction(c[i, j]) for j in range(n)] for i in range(m)]
    assert unflat(buf, m, n).tolist() == [[float(x) for x in row] for row in want]


@given(st.sampled_from("UL"), st.sampled_from("NT"), st.integers(1, 6), st.integers(0, 6), st.integers(0, 2**31))
def test_syrk_exact(uplo, trans, n, k, seed):
    r = np.random.default_rng(seed)
    a = ints(r, n, k) if trans == "N" else ints(r, k, n)
    c = ints(r, n, n)
    buf = flat(c)
    reference.naive_syrk(uplo, trans, n, k, 1.0, flat(a), max(a.shape[0], 1), 1.0, buf, n)
    oa = a if trans == "N" else a.T
    full = exact_matmul(oa.tolist(), oa.T.tolist()) if k else [[Fraction(0)] * n for _ in range(n)]
    got = unflat(buf, n, n)
    for i in range(n):
        for j in range(n):
            if (uplo == "L") == (i >= j) or i == j:
                assert got[i, j] == float(full[i][j] + Fraction(c[i, j]))
            else:
                assert got[i, j] == c[i, j]


@given(st.sampled_from(list(itertools.product("LR", "UL", "NT", "NU"))), st.integers(1, 6),
       st.integers(1, 6), st.integers(0, 2**31))
def test_trmm_exact(case, m, n, seed):
    side, uplo, trans, diag = case
    r = np.random.default_rng(seed)
    na = m if side == "L" else n
    a, b = ints(r, na, na), ints(r, m, n)
    buf = flat(b)
    reference.naive_trmm(side, uplo, trans, diag, m, n, 1.0, flat(a), na, buf, m)
    t = exact_op_tri(a.tolist(), uplo, trans, diag)
    want = exact_matmul(t, b.tolist()) if side == "L" else exact_matmul(b.tolist(), t)
    assert unflat(buf, m, n).tolist() == [[float(x) for x in row] for row in want]


@given(st.sampled_from(list(itertools.product("LR", "UL", "NT", "NU"))), st.integers(1, 6),
       st.integers(1, 6), st.integers(0, 2**31))
def test_trsm_exact(case, m, n, seed):
    side, uplo, trans, diag = case
    r = np.random.default_rng(seed)
    na = m if side == "L" else n
    a = ints(r, na, na)
    np.fill_diagonal(a, r.choice([-2.0, -1.0, 1.0, 2.0], na))
    b = ints(r, m, n)
    buf = flat(b)
    reference.naive_trsm(side, uplo, trans, diag, m, n, 1.0, flat(a), na, buf, m)
    t = exact_op_tri(a.tolist(), uplo, trans, diag)
    want = exact_solve_tri(t, b.tolist(), side == "L")
    err = max(abs(Fraction(unflat(buf, m, n)[i, j]) - want[i][j]) for i in range(m) for j in range(n))
    scale = max(max(abs(x) for x in row) for row in want) or Fraction(1)
    assert float(err / scale) <= 1e-13


@given(st.integers(1, 6), st.integers(0, 2**31))
def test_potrf_exact_square(n, seed):
    # L integer lower with positive diagonal, so A = L L^T is exact in floats
    r = np.random.default_rng(seed)
    l = np.tril(ints(r, n, n, -3, 3))
    np.fill_diagonal(l, r.integers(1, 4, n).astype(float))
    a = l @ l.T
    buf = flat(a)
    assert reference.naive_potrf("L", n, buf, n) == 0
    np.testing.assert_allclose(np.tril(unflat(buf, n, n)), l, rtol=0, atol=1e-12 * np.abs(l).max())


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**31))
def test_getrf_permuted_reconstruction(m, n, seed):
    r = np.random.default_rng(seed)
    a = ints(r, m, n)
    buf = flat(a)
    ipiv, info = reference.naive_getrf(m, n, buf, m)
    f = unflat(buf, m, n)
    k = min(m, n)
    l = np.tril(f[:, :k], -1) + np.eye(m, k)
    u = np.triu(f[:k])
    pa = a.copy()
    for i, p in enumerate(ipiv):
        pa[[i, p - 1]] = pa[[p - 1, i]]
    if info == 0:
        np.testing.assert_allclose(l @ u, pa, atol=1e-12 * max(np.abs(a).max(), 1))
    assert np.abs(l).max() <= 1.0
