import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from panelblas.core import ArgumentError, ColMatView, SingularMatrixError
from panelblas.engine import EngineConfig, gemm
from panelblas.factor import potrf
from panelblas.level3 import (
    TriMatView,
    gemm_nd,
    syrk,
    syrk_nd,
    syrk_potrf_nd,
    trmm,
    trsm,
    trsm_nd,
)
from panelblas.panel import PanelMat

from conftest import rel_err, well_conditioned_tri

TRI_CASES = list(itertools.product("LR", "UL", "NT", "NU"))


def op_tri(a, uplo, trans, diag):
    t = np.tril(a) if uplo == "L" else np.triu(a)
    if diag == "U":
        np.fill_diagonal(t, 1.0)
    return t.T if trans == "T" else t


def test_syrk_example():
    A = ColMatView.from_array([[1.0, 2.0], [3.0, 4.0]])
    C = ColMatView.from_array(np.full((2, 2), -1.0))
    syrk("L", "N", 2, 2, 1.0, A, 0.0, C)
    np.testing.assert_array_equal(C.to_array(), [[5.0, -1.0], [11.0, 25.0]])


def test_syrk_k_zero_beta_one_untouched(rng):
    c = rng.standard_normal((4, 4))
    C = ColMatView.from_array(c)
    stats = syrk("U", "N", 4, 0, 1.0, ColMatView(np.zeros(4), 4, 0, 4), 1.0, C)
    np.testing.assert_array_equal(C.to_array(), c)
    assert stats.elements_packed == 0


def test_syrk_variant_b_packing():
    A = ColMatView.from_array(np.ones((20, 30)))
    C = ColMatView.from_array(np.zeros((20, 20)))
    assert syrk("L", "N", 20, 30, 1.0, A, 0.0, C, variant="B").elements_packed == 600


def test_syrk_rejects_variant_a():
    with pytest.raises(ArgumentError):
        syrk("L", "N", 2, 2, 1.0, ColMatView.from_array(np.ones((2, 2))), 0.0,
             ColMatView.from_array(np.zeros((2, 2))), variant="A")


@pytest.mark.parametrize("uplo,trans", list(itertools.product("UL", "NT")))
@pytest.mark.parametrize("variant", ["B", "C", None])
def test_syrk_all_cases_triangle_only(rng, uplo, trans, variant):
    n, k = 23, 17
    a = rng.uniform(-1, 1, (n, k) if trans == "N" else (k, n))
    c = rng.uniform(-1, 1, (n, n))
    C = ColMatView.from_array(c, ld=n + 2)
    syrk(uplo, trans, n, k, 0.75, ColMatView.from_array(a, ld=a.shape[0] + 1), -1.5, C,
         variant=variant)
    oa = a if trans == "N" else a.T
    full = 0.75 * oa @ oa.T - 1.5 * c
    got = C.to_array()
    mask = np.tril(np.ones((n, n), bool)) if uplo == "L" else np.triu(np.ones((n, n), bool))
    assert rel_err(got[mask], full[mask]) <= 1e-13
    np.testing.assert_array_equal(got[~mask], c[~mask])


def test_syrk_large_uses_shared_packing(rng):
    n, k = 64, 64
    A = ColMatView.from_array(rng.standard_normal((n, k)))
    C = ColMatView.from_array(np.zeros((n, n)))
    stats = syrk("L", "N", n, k, 1.0, A, 0.0, C, variant="B")
    assert stats.elements_packed == n * k


def test_trimatview_reads_triangle_only(rng):
    a = rng.standard_normal((4, 4))
    a[np.triu_indices(4)] = np.nan
    np.fill_diagonal(a, np.nan)
    t = TriMatView(ColMatView.from_array(a), "L", "U")
    np.testing.assert_array_equal(t.to_array(), np.tril(np.nan_to_num(a), -1) + np.eye(4))


@pytest.mark.parametrize("side", "LR")
def test_trmm_identity_scales(rng, side):
    b = rng.standard_normal((5, 3))
    B = ColMatView.from_array(b)
    na = 5 if side == "L" else 3
    trmm(side, "U", "N", "N", 5, 3, -2.0, ColMatView.from_array(np.eye(na)), B)
    np.testing.assert_array_equal(B.to_array(), -2.0 * b)


@pytest.mark.parametrize("side,uplo,trans,diag", TRI_CASES)
def test_trmm_all_cases(rng, side, uplo, trans, diag):
    m, n = 19, 13
    na = m if side == "L" else n
    a = rng.uniform(-1, 1, (na, na))
    b = rng.uniform(-1, 1, (m, n))
    B = ColMatView.from_array(b, ld=m + 3)
    trmm(side, uplo, trans, diag, m, n, 1.5, ColMatView.from_array(a, ld=na + 1), B)
    t = op_tri(a, uplo, trans, diag)
    ref = 1.5 * (t @ b if side == "L" else b @ t)
    assert rel_err(B.to_array(), ref) <= 1e-13


@pytest.mark.parametrize("side,uplo,trans", list(itertools.product("LR", "UL", "NT")))
def test_unit_diagonal_never_read(rng, side, uplo, trans):
    m, n = 9, 6
    na = m if side == "L" else n
    a = well_conditioned_tri(rng, na)
    np.fill_diagonal(a, np.nan)
    for fn in (trmm, trsm):
        B = ColMatView.from_array(rng.standard_normal((m, n)))
        fn(side, uplo, trans, "U", m, n, 1.0, ColMatView.from_array(a), B)
        assert np.isfinite(B.to_array()).all()


def test_trsm_diagonal_halves(rng):
    b = rng.standard_normal((6, 4))
    B = ColMatView.from_array(b)
    trsm("R", "L", "N", "N", 6, 4, 1.0, ColMatView.from_array(2 * np.eye(4)), B)
    np.testing.assert_array_equal(B.to_array(), b / 2)


@pytest.mark.parametrize("side,uplo,trans,diag", TRI_CASES)
def test_trsm_all_cases_residual(rng, side, uplo, trans, diag):
    m, n = 21, 14
    na = m if side == "L" else n
    a = well_conditioned_tri(rng, na)
    b = rng.uniform(-1, 1, (m, n))
    B = ColMatView.from_array(b, ld=m + 2)
    trsm(side, uplo, trans, diag, m, n, 0.5, ColMatView.from_array(a, ld=na + 3), B)
    x = B.to_array()
    t = op_tri(a, uplo, trans, diag)
    res = (t @ x if side == "L" else x @ t) - 0.5 * b
    assert np.linalg.norm(res) <= 1e-12 * np.linalg.norm(0.5 * b)


def test_trsm_singular_raises_before_touching_b(rng):
    a = np.eye(4)
    a[2, 2] = 0.0
    b = rng.standard_normal((4, 4))
    B = ColMatView.from_array(b)
    with pytest.raises(SingularMatrixError) as e:
        trsm("L", "U", "N", "N", 4, 4, 1.0, ColMatView.from_array(a), B)
    assert e.value.index == 3
    np.testing.assert_array_equal(B.to_array(), b)


@given(st.sampled_from(TRI_CASES), st.integers(1, 30), st.integers(1, 30), st.integers(0, 2**31))
def test_trsm_then_trmm_round_trip(case, m, n, seed):
    side, uplo, trans, diag = case
    r = np.random.default_rng(seed)
    na = m if side == "L" else n
    A = ColMatView.from_array(well_conditioned_tri(r, na))
    b = r.uniform(-1, 1, (m, n))
    B = ColMatView.from_array(b)
    trsm(side, uplo, trans, diag, m, n, 2.0, A, B)
    trmm(side, uplo, trans, diag, m, n, 2.0, A, B)
    assert rel_err(B.to_array(), 4.0 * b) <= 1e-12


@pytest.mark.parametrize("ps", [4, 8])
def test_gemm_nd_non_destructive(rng, ps):
    m, n, k = 13, 10, 7
    a, b, c = rng.standard_normal((m, k)), rng.standard_normal((n, k)), rng.standard_normal((m, n))
    A, B, C = PanelMat.from_array(a, ps), PanelMat.from_array(b, ps), PanelMat.from_array(c, ps)
    before = C.data.copy()
    D = PanelMat.zeros(m, n, ps)
    stats = gemm_nd("T", m, n, k, 1.0, A, B, 2.0, C, D)
    assert stats.elements_packed == 0
    assert C.data.tobytes() == before.tobytes()
    assert rel_err(D.to_array(), a @ b.T + 2.0 * c) <= 1e-13


def test_gemm_nd_alias_equals_destructive(rng):
    m, n, k = 9, 11, 6
    a, b, c = rng.standard_normal((m, k)), rng.standard_normal((k, n)), rng.standard_normal((m, n))
    C = PanelMat.from_array(c)
    gemm_nd("N", m, n, k, 1.0, PanelMat.from_array(a), PanelMat.from_array(b), 1.0, C, C)
    ref = ColMatView.from_array(c)
    gemm("N", "N", m, n, k, 1.0, ColMatView.from_array(a), ColMatView.from_array(b), 1.0, ref)
    np.testing.assert_allclose(C.to_array(), ref.to_array(), rtol=1e-14, atol=1e-14)


def test_native_ps_mismatch():
    with pytest.raises(ArgumentError):
        gemm_nd("N", 4, 4, 4, 1.0, PanelMat.zeros(4, 4, 4), PanelMat.zeros(4, 4, 8), 0.0,
                PanelMat.zeros(4, 4, 4), PanelMat.zeros(4, 4, 4))


def test_native_partial_alias_rejected():
    C = PanelMat.zeros(8, 8)
    D = C.block(0, 0, 8, 8)
    D.data = C.data[4:]
    with pytest.raises(ArgumentError):
        gemm_nd("N", 8, 8, 4, 1.0, PanelMat.zeros(8, 4), PanelMat.zeros(4, 8), 0.0, C, D)


def test_syrk_nd_lower(rng):
    n, k = 14, 5
    a, b, c = rng.standard_normal((n, k)), rng.standard_normal((n, k)), rng.standard_normal((n, n))
    D = PanelMat.zeros(n, n)
    stats = syrk_nd(n, k, 1.0, PanelMat.from_array(a), PanelMat.from_array(b), 1.0,
                    PanelMat.from_array(c), D)
    assert stats.elements_packed == 0
    full = a @ b.T + c
    low = np.tril_indices(n)
    assert rel_err(D.to_array()[low], full[low]) <= 1e-13
    assert not np.triu(D.to_array(), 1).any()


@pytest.mark.parametrize("diag", "NU")
def test_trsm_nd(rng, diag):
    m, n = 11, 9
    a = np.tril(well_conditioned_tri(rng, n))
    b = rng.standard_normal((m, n))
    D = PanelMat.zeros(m, n)
    trsm_nd(diag, m, n, 1.5, PanelMat.from_array(a), PanelMat.from_array(b), D)
    t = op_tri(a, "L", "T", diag)
    np.testing.assert_allclose(D.to_array() @ t, 1.5 * b, rtol=1e-12, atol=1e-12)


def test_syrk_potrf_nd_identity():
    D = PanelMat.zeros(6, 6)
    info = syrk_potrf_nd(6, 0, PanelMat.zeros(6, 0), PanelMat.zeros(6, 0), PanelMat.from_array(np.eye(6)),
                         D)
    assert info.ok
    np.testing.assert_array_equal(D.to_array(), np.eye(6))


@pytest.mark.parametrize("n,k", [(1, 3), (7, 4), (20, 9), (33, 16)])
def test_syrk_potrf_nd_reconstruction_and_composition(rng, n, k):
    m = rng.standard_normal((n, n))
    c = m.T @ m + n * np.eye(n)
    a = rng.standard_normal((n, k))
    D = PanelMat.zeros(n, n)
    fi = syrk_potrf_nd(n, k, PanelMat.from_array(a), PanelMat.from_array(a), PanelMat.from_array(c), D)
    assert fi.info == 0 and fi.stats.elements_packed == 0
    L = D.to_array()
    target = c + a @ a.T
    assert np.linalg.norm(L @ L.T - target) <= 1e-12 * np.linalg.norm(target)
    C = ColMatView.from_array(c)
    syrk("L", "N", n, k, 1.0, ColMatView.from_array(a), 1.0, C)
    potrf("L", n, C)
    np.testing.assert_allclose(L, np.tril(C.to_array()), rtol=1e-13, atol=1e-13)


def test_syrk_potrf_nd_reports_pivot():
    c = np.diag([1.0, 1.0, 1.0, 1.0, 1.0, -1.0, 1.0])
    fi = syrk_potrf_nd(7, 1, PanelMat.zeros(7, 1), PanelMat.zeros(7, 1), PanelMat.from_array(c),
                       PanelMat.zeros(7, 7))
    assert fi.info == 6


def test_left_trsm_scratch_policy(rng):
    small = EngineConfig()
    B = ColMatView.from_array(rng.standard_normal((8, 8)))
    stats = trsm("L", "L", "N", "N", 8, 8, 1.0, ColMatView.from_array(np.eye(8)), B, small)
    assert stats.scratch_bytes_bounded > 0 and stats.scratch_bytes_dynamic == 0
    tight = EngineConfig(switch_dim=8)
    B = ColMatView.from_array(rng.standard_normal((40, 40)))
    stats = trsm("L", "L", "N", "N", 40, 40, 1.0, ColMatView.from_array(np.eye(40)), B, tight)
    assert stats.scratch_bytes_dynamic > 0
