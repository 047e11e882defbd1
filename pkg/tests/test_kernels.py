import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from panelblas.core import ArgumentError
from panelblas.kernels import (
    KernelConfig,
    PanelWin,
    StridedWin,
    _codegen,
    compose,
    kernel_gemm,
    mutation,
)
from panelblas.kernels import subops as so
from panelblas.panel import FLOPS, PackStats

CFG = KernelConfig()
MR, NR, PS = CFG.mr, CFG.nr, CFG.ps


def packed(a, ps=PS):
    """Row-block panel buffer of ``a`` (panel stride ``ps * cols``)."""
    m, k = a.shape
    pm = -(-m // ps) * ps
    buf = np.zeros(pm * k)
    for i in range(m):
        for l in range(k):
            buf[(i // ps) * ps * k + l * ps + i % ps] = a[i, l]
    return buf, ps * k


def flat(a):
    return np.asfortranarray(a).reshape(-1, order="F").copy()


def stats():
    return np.zeros(5, dtype=np.int64)


def test_tile_zero():
    t = np.full((MR, NR), np.nan, order="F")
    so.tile_zero(t)
    assert not t.any() and not np.signbit(t).any()


def test_inner_nt_pp_kmax_zero_is_noop(rng):
    t = np.asfortranarray(rng.standard_normal((MR, NR)))
    before = t.copy()
    so.inner_gemm_nt_pp(CFG.nt_pp, 0, np.zeros(1), 0, PS, MR, np.zeros(1), 0, t, stats())
    np.testing.assert_array_equal(t, before)


def test_inner_nt_pp_identity():
    cfg = KernelConfig(4, 4, 4)
    A, sda = packed(np.eye(4))
    B, _ = packed(np.eye(4))
    t = cfg.new_tile()
    so.inner_gemm_nt_pp(cfg.nt_pp, 4, A, 0, sda, 4, B, 0, t, stats())
    np.testing.assert_array_equal(t, np.eye(4))


@pytest.mark.parametrize("mr,ps", [(4, 4), (8, 4), (12, 4), (8, 8), (16, 8), (24, 8)])
def test_inner_nt_pp_random_and_flops(rng, mr, ps):
    cfg = KernelConfig(mr, ps, ps)
    k = 11
    a, b = rng.uniform(-1, 1, (mr, k)), rng.uniform(-1, 1, (ps, k))
    A, sda = packed(a, ps)
    B, _ = packed(b, ps)
    t, s = cfg.new_tile(), stats()
    so.inner_gemm_nt_pp(cfg.nt_pp, k, A, 0, sda, mr, B, 0, t, s)
    np.testing.assert_allclose(t, a @ b.T, rtol=1e-14, atol=1e-14)
    assert s[FLOPS] == 2 * mr * ps * k


def _all_inner_tiles(a, b):
    """The same logical product through every inner loop kind."""
    k = a.shape[1]
    A, sda = packed(a)
    tiles = {}
    t = CFG.new_tile()
    so.inner_gemm_nt_pp(CFG.nt_pp, k, A, 0, sda, MR, packed(b)[0], 0, t, stats())
    tiles["nt_pp"] = t
    t = CFG.new_tile()
    Bkn, sdb = packed(b.T.copy())
    so.inner_gemm_nn_pp(CFG.nn_pp, k, A, 0, sda, MR, Bkn, 0, sdb, t, stats())
    tiles["nn_pp"] = t
    t = CFG.new_tile()
    so.inner_gemm_nn_pc(CFG.pc, k, A, 0, sda, MR, flat(b.T), 0, k, NR, t, stats())
    tiles["nn_pc"] = t
    t = CFG.new_tile()
    so.inner_gemm_nt_pc(CFG.pc, k, A, 0, sda, MR, flat(b), 0, NR, NR, t, stats())
    tiles["nt_pc"] = t
    t = CFG.new_tile()
    so.inner_gemm_nn_cc(CFG.cc, k, flat(a), 0, MR, MR, flat(b.T), 0, k, NR, t, stats())
    tiles["nn_cc"] = t
    t = CFG.new_tile()
    so.inner_gemm_nt_cc(CFG.cc, k, flat(a), 0, MR, MR, flat(b), 0, NR, NR, t, stats())
    tiles["nt_cc"] = t
    return tiles


def test_inner_variants_identity():
    a = np.zeros((MR, NR))
    a[:NR] = np.eye(NR)
    for name, t in _all_inner_tiles(a, np.eye(NR)).items():
        np.testing.assert_array_equal(t, a, err_msg=name)


@given(st.integers(1, 17), st.integers(0, 2**31))
def test_inner_variants_agree_bitwise(k, seed):
    r = np.random.default_rng(seed)
    a, b = r.uniform(-1, 1, (MR, k)), r.uniform(-1, 1, (NR, k))
    tiles = _all_inner_tiles(a, b)
    ref = tiles["nt_pp"]
    np.testing.assert_allclose(ref, a @ b.T, rtol=1e-13, atol=1e-14)
    for name, t in tiles.items():
        assert t.tobytes() == ref.tobytes(), name


def test_inner_pc_kmax_zero_is_noop():
    t = CFG.new_tile()
    so.inner_gemm_nn_pc(CFG.pc, 0, np.zeros(1), 0, PS, MR, np.zeros(1), 0, 1, NR, t, stats())
    so.inner_gemm_nt_cc(CFG.cc, 0, np.zeros(1), 0, MR, MR, np.zeros(1), 0, 1, NR, t, stats())
    assert not t.any()


def test_scale_ab_beta_zero_ignores_c(rng):
    t = np.asfortranarray(rng.standard_normal((MR, NR)))
    before = t.copy()
    so.scale_ab_c(1.0, 0.0, np.full(MR * NR, np.nan), 0, 1, MR, MR, NR, t)
    np.testing.assert_array_equal(t, before)


def test_scale_ab_alpha_zero_copies_c(rng):
    c = rng.standard_normal((MR, NR))
    t = np.asfortranarray(rng.standard_normal((MR, NR)))
    so.scale_ab_c(0.0, 1.0, flat(c), 0, 1, MR, MR, NR, t)
    np.testing.assert_array_equal(t, c)


def test_scale_ab_random(rng):
    c, t0 = rng.standard_normal((MR, NR)), rng.standard_normal((MR, NR))
    t = np.asfortranarray(t0)
    so.scale_ab_p(2.0, -1.0, packed(c)[0], 0, packed(c)[1], MR, NR, t)
    np.testing.assert_array_equal(t, 2.0 * t0 - c)


def test_scale_m11(rng):
    c, t0 = rng.standard_normal((MR, NR)), rng.standard_normal((MR, NR))
    t = np.asfortranarray(t0)
    so.scale_m11_c(flat(c), 0, 1, MR, MR, NR, t)
    np.testing.assert_array_equal(t, c - t0)
    z = np.zeros((MR, NR), order="F")
    so.scale_m11_p(packed(c)[0], 0, packed(c)[1], MR, NR, z)
    np.testing.assert_array_equal(z, c)
    t = np.asfortranarray(t0)
    so.scale_m11_c(np.zeros(MR * NR), 0, 1, MR, MR, NR, t)
    np.testing.assert_array_equal(t, -t0)


def test_edge_potrf_scalar():
    t = np.zeros((MR, NR), order="F")
    t[0, 0] = 4.0
    assert so.edge_potrf(t, 1) == 0
    assert t[0, 0] == 2.0


def test_edge_potrf_2x2():
    t = np.zeros((MR, NR), order="F")
    t[:2, :2] = [[4.0, 0.0], [2.0, 5.0]]
    assert so.edge_potrf(t, 2) == 0
    np.testing.assert_array_equal(t[:2, :2], [[2.0, 0.0], [1.0, 2.0]])


def test_edge_potrf_negative_pivot():
    t = np.zeros((MR, NR), order="F")
    t[0, 0] = -1.0
    assert so.edge_potrf(t, 1) == 1


def test_edge_potrf_solves_rows_below(rng):
    m = rng.standard_normal((MR, NR))
    s = m @ m.T + MR * np.eye(MR)
    t = np.asfortranarray(s[:, :NR])
    assert so.edge_potrf(t, NR) == 0
    np.testing.assert_allclose(t, np.linalg.cholesky(s)[:, :NR], rtol=1e-13, atol=1e-14)


def test_edge_trsm_identity_and_diagonal(rng):
    t0 = rng.standard_normal((MR, NR))
    t = np.asfortranarray(t0)
    assert so.edge_trsm_right(t, flat(np.eye(NR)), 0, 1, NR, False, False, False, MR, NR) == 0
    np.testing.assert_array_equal(t, t0)
    assert so.edge_trsm_right(t, flat(2 * np.eye(NR)), 0, 1, NR, False, False, False, MR, NR) == 0
    np.testing.assert_array_equal(t, t0 / 2)


@pytest.mark.parametrize("upper", [False, True])
@pytest.mark.parametrize("trans", [False, True])
@pytest.mark.parametrize("unit", [False, True])
def test_edge_trsm_random(rng, upper, trans, unit):
    e = np.tril(rng.uniform(-1, 1, (NR, NR))) + 2 * np.eye(NR)
    if upper:
        e = e.T.copy()
    op = e.copy()
    if unit:
        np.fill_diagonal(op, 1.0)
    op = op.T if trans else op
    t0 = rng.standard_normal((MR, NR))
    t = np.asfortranarray(t0)
    so.edge_trsm_right(t, flat(e), 0, 1, NR, upper, trans, unit, MR, NR)
    np.testing.assert_allclose(t @ op, t0, rtol=1e-13, atol=1e-13)


def test_edge_trsm_zero_diagonal():
    e = np.eye(NR)
    e[2, 2] = 0.0
    t = np.ones((MR, NR), order="F")
    assert so.edge_trsm_right(t, flat(e), 0, 1, NR, False, False, False, MR, NR) == 3


def _store_canary(shape, ma, na, dg=0, layout="c"):
    sentinel = -777.0
    D = np.full(MR * NR + 2 * MR, sentinel)
    t = np.asfortranarray(np.arange(MR * NR, dtype=float).reshape(MR, NR) + 1)
    if layout == "c":
        so.store_c(t, D, MR, 1, MR, ma, na, shape, dg)
        written = {(i, j) for i in range(MR) for j in range(NR) if D[MR + i + j * MR] != sentinel}
    else:
        so.store_p(t, D, MR, PS * NR, ma, na, shape, dg)
        off = lambda i, j: MR + (i // PS) * PS * NR + j * PS + i % PS
        written = {(i, j) for i in range(MR) for j in range(NR) if D[off(i, j)] != sentinel}
    assert (D[:MR] == sentinel).all() and (D[MR + MR * NR:] == sentinel).all()
    return written


def test_store_full_and_single():
    assert len(_store_canary(so.SHAPE_FULL, MR, NR)) == MR * NR
    assert _store_canary(so.SHAPE_FULL, 1, 1) == {(0, 0)}


def test_store_lower_3x3():
    written = _store_canary(so.SHAPE_LOWER, 3, 3)
    assert written == {(i, j) for i in range(3) for j in range(3) if i >= j}


@given(st.integers(0, MR), st.integers(0, NR), st.sampled_from([0, 1, 2]), st.integers(-3, 3),
       st.sampled_from("cp"))
def test_store_never_leaves_mask(ma, na, shape, dg, layout):
    written = _store_canary(shape, ma, na, dg, layout)
    for i, j in written:
        assert i < ma and j < na
        assert shape != so.SHAPE_LOWER or i + dg >= j
        assert shape != so.SHAPE_UPPER or i + dg <= j
    expected = {(i, j) for i in range(ma) for j in range(na)
                if not (shape == so.SHAPE_LOWER and i + dg < j)
                and not (shape == so.SHAPE_UPPER and i + dg > j)}
    assert written == expected


def test_kernel_gemm_ppp_identity(rng):
    a = np.zeros((MR, NR))
    a[:NR] = np.eye(NR)
    b, c = rng.standard_normal((NR, NR)), rng.standard_normal((MR, NR))
    A, sda = packed(a)
    B, _ = packed(b)
    C, sdc = packed(c)
    D = np.zeros_like(C)
    kernel_gemm("ppp", "nt", NR, PanelWin(A, 0, sda), PanelWin(B, 0, NR * PS), 1.0, 1.0,
                PanelWin(C, 0, sdc), PanelWin(D, 0, sdc), MR, NR)
    got = np.array([[D[(i // PS) * sdc + j * PS + i % PS] for j in range(NR)] for i in range(MR)])
    np.testing.assert_array_equal(got, a @ b.T + c)


@given(st.integers(1, MR), st.integers(1, NR), st.integers(0, 9), st.integers(0, 2**31))
def test_kernel_gemm_layouts_agree(ma, na, k, seed):
    r = np.random.default_rng(seed)
    a, b, c = r.uniform(-1, 1, (MR, k)), r.uniform(-1, 1, (NR, k)), r.uniform(-1, 1, (MR, NR))
    alpha, beta = 1.5, -0.5
    A, sda = packed(a)
    C, sdc = packed(c)
    D = np.zeros_like(C)
    kernel_gemm("ppp", "nt", k, PanelWin(A, 0, sda), PanelWin(packed(b)[0], 0, 0), alpha, beta,
                PanelWin(C, 0, sdc), PanelWin(D, 0, sdc), ma, na)
    ref = np.array([[D[(i // PS) * sdc + j * PS + i % PS] for j in range(na)] for i in range(ma)])
    oracle = alpha * a[:ma] @ b[:na].T + beta * c[:ma, :na]
    np.testing.assert_allclose(ref, oracle, rtol=1e-13, atol=1e-14)
    for layouts in ("ppc", "pcc", "ccc"):
        Cc = flat(c)
        win = StridedWin(Cc, 0, 1, MR)
        Aw = PanelWin(A, 0, sda) if layouts[0] == "p" else StridedWin(flat(a), 0, 1, MR)
        Bw = PanelWin(packed(b)[0], 0, 0) if layouts[1] == "p" else StridedWin(flat(b), 0, 1, NR)
        kernel_gemm(layouts, "nt", k, Aw, Bw, alpha, beta, win, win, ma, na)
        got = Cc.reshape(NR, MR).T
        assert got[:ma, :na].tobytes() == ref.tobytes(), layouts
        np.testing.assert_array_equal(got[ma:], c[ma:])
        np.testing.assert_array_equal(got[:, na:], c[:, na:])


def test_kernel_equals_manual_composition(rng):
    k = 7
    a, b, c = rng.standard_normal((MR, k)), rng.standard_normal((NR, k)), rng.standard_normal((MR, NR))
    A, sda = packed(a)
    B, _ = packed(b)
    Cc = flat(c)
    kernel_gemm("pcc", "nt", k, PanelWin(A, 0, sda), StridedWin(flat(b), 0, 1, NR), 0.7, 0.3,
                StridedWin(Cc, 0, 1, MR), StridedWin(Cc, 0, 1, MR), MR, NR)
    t = CFG.new_tile()
    so.tile_zero(t)
    so.inner_gemm_nt_pc(CFG.pc, k, A, 0, sda, MR, flat(b), 0, NR, NR, t, stats())
    manual = flat(c)
    so.scale_ab_c(0.7, 0.3, manual, 0, 1, MR, MR, NR, t)
    so.store_c(t, manual, 0, 1, MR, MR, NR, so.SHAPE_FULL, 0)
    assert Cc.tobytes() == manual.tobytes()


def test_kernel_gemm_rejects_bad_layout():
    w = StridedWin(np.zeros(MR * NR), 0, 1, MR)
    with pytest.raises(ArgumentError):
        kernel_gemm("cpc", "nt", 1, w, w, 1.0, 0.0, w, w, 1, 1)
    with pytest.raises(ArgumentError):
        kernel_gemm("pcc", "nt", 1, PanelWin(np.zeros(MR), 0, 0), w, 1.0, 0.0, w,
                    StridedWin(np.zeros(MR * NR), 0, 1, MR), 1, 1)


def test_kernel_potrf_identity():
    C = flat(np.eye(NR))
    L = np.zeros(PS * NR)
    info = compose.kernel_potrf_nt_l_ppc(CFG.nt_pp, 0, L, 0, 0, PS * NR, C, 0, 1, NR, 0, NR, NR,
                                         CFG.new_tile(), stats())
    assert info == 0
    np.testing.assert_array_equal(C.reshape(NR, NR).T, np.eye(NR))


def test_kernel_trsm_right_identity_reproduces_gemm(rng):
    k = 5
    x, e = rng.standard_normal((MR, k)), rng.standard_normal((NR, k))
    b = rng.standard_normal((MR, NR))
    ext = np.hstack([e, np.eye(NR)])
    X, sdx = packed(np.hstack([x, np.zeros((MR, NR))]))
    B, sdb = packed(b)
    info = compose.kernel_trsm_nt_rl_ppp(CFG.nt_pp, k, 2.0, X, 0, sdx, packed(ext)[0], 0, B, 0, sdb,
                                         False, MR, NR, CFG.new_tile(), stats())
    assert info == 0
    got = np.array([[X[(i // PS) * sdx + (k + j) * PS + i % PS] for j in range(NR)] for i in range(MR)])
    np.testing.assert_allclose(got, 2.0 * b - x @ e.T, rtol=1e-13, atol=1e-13)


def test_fused_syrk_potrf_block_matches_separate(rng):
    k = 6
    a = rng.standard_normal((MR, k))
    m = rng.standard_normal((MR, MR))
    c = m @ m.T + MR * np.eye(MR)
    A, sda = packed(a)
    C, sdc = packed(c[:, :NR])
    D = np.zeros(2 * PS * NR)
    info = compose.kernel_syrk_potrf_nt_l_ppp(CFG.nt_pp, CFG.nt_pp_sub, k, A, 0, sda, A, 0, 0,
                                              D, 0, 0, PS * NR, C, 0, sdc, MR, NR, CFG.new_tile(),
                                              stats())
    assert info == 0
    got = np.array([[D[(i // PS) * PS * NR + j * PS + i % PS] for j in range(NR)] for i in range(MR)])
    full = np.linalg.cholesky(c + a @ a.T)
    np.testing.assert_allclose(np.tril(got), full[:, :NR], rtol=1e-13, atol=1e-13)


def test_mutation_perturbs_inner_results(rng):
    a, b = rng.standard_normal((MR, 3)), rng.standard_normal((NR, 3))
    A, sda = packed(a)
    B, _ = packed(b)
    t0, t1 = CFG.new_tile(), CFG.new_tile()
    so.inner_gemm_nt_pp(CFG.nt_pp, 3, A, 0, sda, MR, B, 0, t0, stats())
    with mutation():
        s = PackStats().raw
    so.inner_gemm_nt_pp(CFG.nt_pp, 3, A, 0, sda, MR, B, 0, t1, s)
    assert t1[0, 0] == t0[0, 0] + so.FAULT_DELTA
    assert PackStats().raw[4] == 0


@pytest.mark.parametrize("mr,nr,ps", [(8, 4, 4), (12, 4, 4), (4, 4, 4), (16, 8, 8)])
def test_kernel_config_valid(mr, nr, ps):
    cfg = KernelConfig(mr, nr, ps)
    assert cfg.new_tile().shape == (mr, nr)


@pytest.mark.parametrize("mr,nr,ps", [(8, 4, 8), (6, 4, 4), (16, 4, 4), (8, 8, 4), (8, 4, 5)])
def test_kernel_config_invalid(mr, nr, ps):
    with pytest.raises(ArgumentError):
        KernelConfig(mr, nr, ps)


def test_kernel_config_from_env():
    assert KernelConfig.from_env({"PANELBLAS_PS": "8"}) == KernelConfig(16, 8, 8)
    assert KernelConfig.from_env({"PANELBLAS_MR": "12"}) == KernelConfig(12, 4, 4)


def test_generated_loops_are_reproducible():
    assert _codegen.TARGET.read_text() == _codegen.generate()
