import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from panelblas.core import ArgumentError, ColMatView, TransOp
from panelblas.engine import (
    VARIANTS,
    EngineConfig,
    GemmVariant,
    ScratchPolicy,
    gemm,
    select_variant,
)
from panelblas.kernels import KernelConfig

from conftest import rel_err

TRANS = ["NN", "NT", "TN", "TT"]


def operands(rng, ta, tb, m, n, k, pad=0):
    a = rng.uniform(-1, 1, (m, k) if ta == "N" else (k, m))
    b = rng.uniform(-1, 1, (k, n) if tb == "N" else (n, k))
    c = rng.uniform(-1, 1, (m, n))
    oa = a if ta == "N" else a.T
    ob = b if tb == "N" else b.T
    views = (ColMatView.from_array(a, a.shape[0] + pad), ColMatView.from_array(b, b.shape[0] + pad),
             ColMatView.from_array(c, m + pad))
    return views, oa, ob, c


def legal_variants(ta, tb):
    return [v for v in GemmVariant if v.legal(TransOp.parse(ta), TransOp.parse(tb))]


@pytest.mark.parametrize("v,expected", [("A", 400), ("B", 200), ("C", 100), ("Ct", 100), ("D", 0)])
def test_packing_formula_at_10(v, expected):
    assert GemmVariant.parse(v).packed_elements(10, 10, 10) == expected


def test_variant_metadata():
    assert GemmVariant.D.scratch is ScratchPolicy.NONE
    assert GemmVariant.C.scratch is ScratchPolicy.BOUNDED
    assert GemmVariant.Ct.scratch is ScratchPolicy.BOUNDED
    assert GemmVariant.A.scratch is ScratchPolicy.DYNAMIC
    assert GemmVariant.B.scratch is ScratchPolicy.DYNAMIC
    assert not GemmVariant.D.legal(TransOp.Trans, TransOp.NoTrans)


def test_planner_examples():
    cfg = EngineConfig()
    assert select_variant("N", "N", 4, 4, 300, cfg).variant is GemmVariant.D
    assert select_variant("T", "N", 4, 4, 8, cfg).variant in (GemmVariant.C, GemmVariant.Ct)
    assert select_variant("N", "T", 500, 500, 500, cfg).variant is GemmVariant.B
    assert select_variant("N", "N", 300, 4, 30, cfg).variant is GemmVariant.B
    assert select_variant("N", "N", 200, 4, 30, cfg).variant is GemmVariant.Ct
    assert select_variant("N", "N", 4, 200, 30, cfg).variant is GemmVariant.C
    plan = select_variant("N", "N", 9, 17, 5, cfg)
    assert plan.predicted_packed == 9 * 5 and plan.scratch is ScratchPolicy.BOUNDED


def test_planner_falls_back_to_b_when_scratch_cap_exceeded():
    cfg = EngineConfig(bounded_scratch_cap=1024)
    assert select_variant("N", "N", 20, 30, 100, cfg).variant is GemmVariant.B


def test_planner_monotone_never_returns_to_d():
    cfg = EngineConfig(switch_dim=32)
    for ta, tb in ("NN", "NT", "TT"):
        seen_b = False
        for s in range(1, 80):
            v = select_variant(ta, tb, s, s, 16, cfg).variant
            seen_b |= v is GemmVariant.B
            assert not (seen_b and v is GemmVariant.D)


def test_engine_config_validation_and_env():
    with pytest.raises(ValueError):
        EngineConfig(switch_dim=0)
    with pytest.raises(ValueError):
        EngineConfig(switch_dim=4)
    cfg = EngineConfig.from_env({"PANELBLAS_SWITCH_DIM": "128", "PANELBLAS_TINY_M": "4",
                                 "PANELBLAS_SCRATCH_CAP": "4096"})
    assert (cfg.switch_dim, cfg.tiny_m, cfg.tiny_n, cfg.bounded_scratch_cap) == (128, 4, 8, 4096)


@pytest.mark.parametrize("v", list(GemmVariant))
def test_forced_variants_exact_counts_and_oracle(rng, v):
    for ta, tb in TRANS:
        if not v.legal(TransOp.parse(ta), TransOp.parse(tb)):
            continue
        (A, B, C), oa, ob, c = operands(rng, ta, tb, 13, 7, 9, pad=2)
        stats = gemm(ta, tb, 13, 7, 9, 1.25, A, B, -0.5, C, variant=v)
        assert stats.variant == v.value
        assert stats.elements_packed == v.packed_elements(13, 7, 9)
        assert rel_err(C.to_array(), 1.25 * oa @ ob - 0.5 * c) <= 1e-13


def test_variant_d_tn_rejected(rng):
    (A, B, C), *_ = operands(rng, "T", "N", 3, 3, 3)
    with pytest.raises(ArgumentError):
        gemm("T", "N", 3, 3, 3, 1.0, A, B, 0.0, C, variant="D")


def test_scratch_accounting(rng):
    (A, B, C), *_ = operands(rng, "N", "N", 20, 20, 20)
    s = {v: gemm("N", "N", 20, 20, 20, 1.0, A, B, 1.0, C, variant=v) for v in GemmVariant}
    assert s[GemmVariant.D].scratch_bytes_dynamic == s[GemmVariant.D].scratch_bytes_bounded == 0
    for v in (GemmVariant.C, GemmVariant.Ct):
        assert s[v].scratch_bytes_dynamic == 0 and s[v].scratch_bytes_bounded > 0
    for v in (GemmVariant.A, GemmVariant.B):
        assert s[v].scratch_bytes_bounded == 0 and s[v].scratch_bytes_dynamic > 0


def test_variant_a_alpha_zero_full_pass(rng):
    (A, B, C), _, _, c = operands(rng, "N", "N", 6, 5, 4)
    stats = VARIANTS[GemmVariant.A]("N", "N", 6, 5, 4, 0.0, A, B, 1.0, C)
    np.testing.assert_array_equal(C.to_array(), c)
    assert stats.elements_packed == 6 * 4 + 5 * 4 + 2 * 6 * 5


def test_variant_d_scalar():
    A, B, C = (ColMatView.from_array([[x]]) for x in (2.0, 3.0, 4.0))
    gemm("N", "N", 1, 1, 1, 1.0, A, B, 1.0, C, variant="D")
    assert C.to_array()[0, 0] == 10.0


def test_identity_a_variant_b(rng):
    b = rng.standard_normal((6, 5))
    C = ColMatView.from_array(np.zeros((6, 5)))
    gemm("N", "N", 6, 5, 6, 1.0, ColMatView.from_array(np.eye(6)), ColMatView.from_array(b), 0.0, C,
         variant="B")
    np.testing.assert_array_equal(C.to_array(), b)


def test_quick_return_m_zero():
    C = ColMatView(np.full(4, np.nan), 0, 2, 2)
    stats = gemm("N", "N", 0, 2, 3, 1.0, ColMatView(np.zeros(1), 0, 3, 1),
                 ColMatView.from_array(np.ones((3, 2))), 0.0, C)
    assert stats.elements_packed == 0 and np.isnan(C.data).all()


@pytest.mark.parametrize("v", ["C", "Ct", "A", "B", "D"])
def test_k_zero_scales_c(rng, v):
    c = rng.standard_normal((5, 4))
    C = ColMatView.from_array(c)
    gemm("N", "N", 5, 4, 0, 1.0, ColMatView(np.zeros(5), 5, 0, 5), ColMatView(np.zeros(1), 0, 4, 1),
         2.0, C, variant=v)
    np.testing.assert_array_equal(C.to_array(), 2.0 * c)


def test_beta_zero_ignores_nan_c(rng):
    (A, B, _), oa, ob, _ = operands(rng, "N", "N", 9, 6, 5)
    for v in legal_variants("N", "N"):
        C = ColMatView(np.full(54, np.nan), 9, 6, 9)
        gemm("N", "N", 9, 6, 5, 1.0, A, B, 0.0, C, variant=v)
        assert rel_err(C.to_array(), oa @ ob) <= 1e-13


@pytest.mark.parametrize("ta,tb", [t for t in TRANS])
def test_all_trans_cases_50x60x70(rng, ta, tb):
    (A, B, C), oa, ob, c = operands(rng, ta, tb, 50, 60, 70, pad=3)
    gemm(ta, tb, 50, 60, 70, 0.5, A, B, 2.0, C)
    assert rel_err(C.to_array(), 0.5 * oa @ ob + 2.0 * c) <= 1e-13


def test_ldc_padding_untouched(rng):
    (A, B, C), *_ = operands(rng, "N", "T", 11, 9, 6, pad=3)
    pad_rows = [C.data[j * C.ld + 11: (j + 1) * C.ld].copy() for j in range(8)]
    for v in GemmVariant:
        gemm("N", "T", 11, 9, 6, 1.0, A, B, 1.0, C, variant=v)
    for j in range(8):
        np.testing.assert_array_equal(C.data[j * C.ld + 11: (j + 1) * C.ld], pad_rows[j])


@pytest.mark.parametrize("mr,ps", [(4, 4), (12, 4), (8, 8), (16, 8), (24, 8)])
def test_other_kernel_shapes(rng, mr, ps):
    cfg = EngineConfig(kernel=KernelConfig(mr, ps, ps), switch_dim=256)
    for v in GemmVariant:
        for ta, tb in ("NN", "TT"):
            (A, B, C), oa, ob, c = operands(rng, ta, tb, 19, 14, 10, pad=1)
            stats = gemm(ta, tb, 19, 14, 10, 1.0, A, B, 1.0, C, cfg=cfg, variant=v)
            assert stats.elements_packed == v.packed_elements(19, 14, 10)
            assert rel_err(C.to_array(), oa @ ob + c) <= 1e-13


@given(st.sampled_from(TRANS), st.integers(1, 40), st.integers(1, 40), st.integers(1, 40),
       st.integers(0, 2**31))
def test_variants_agree_pairwise(tr, m, n, k, seed):
    ta, tb = tr
    r = np.random.default_rng(seed)
    (A, B, C0), oa, ob, c = operands(r, ta, tb, m, n, k)
    out = {}
    for v in legal_variants(ta, tb):
        C = ColMatView.from_array(c)
        stats = gemm(ta, tb, m, n, k, 1.0, A, B, 1.0, C, variant=v)
        assert stats.elements_packed == v.packed_elements(m, n, k)
        out[v] = C.to_array()
    ref = oa @ ob + c
    for v, x in out.items():
        assert rel_err(x, ref) <= 1e-13, v
