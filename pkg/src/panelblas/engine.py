"""General matrix multiply: the five packing variants and the size-based planner.

Every variant computes ``C <- alpha*op(A)*op(B) + beta*C`` on column-major
views.  Operands are described to the compiled loops by strides, so
``op(X)(i, l) = X[i*rs + l*cs]`` and a transposition is only a stride swap.

=======  ==============  ==========  ==============================
variant  packed elems    scratch     kernels
=======  ==============  ==========  ==============================
A        mk + nk + 2mn   dynamic     nt_ppp (C packed and unpacked)
B        mk + nk         dynamic     nt_ppc
C        mk              bounded     nn_pcc / nt_pcc
Ct       nk              bounded     C on the transposed problem
D        0               none        nn_ccc / nt_ccc (TN excluded)
=======  ==============  ==========  ==============================
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .core import ArgumentError, ColMatView, TransOp
from .kernels import KernelConfig
from .kernels.compose import (
    kernel_gemm_ccc,
    kernel_gemm_nt_ppc,
    kernel_gemm_nt_ppp,
    kernel_gemm_pcc,
)
from .kernels.subops import SHAPE_FULL
from .panel import PackStats, aligned_empty, pack_strided, unpack_strided

N, T = TransOp.NoTrans, TransOp.Trans


class ScratchPolicy(enum.Enum):
    NONE = "none"
    BOUNDED = "bounded"
    DYNAMIC = "dynamic"


class GemmVariant(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    Ct = "Ct"
    D = "D"

    def packed_elements(self, m: int, n: int, k: int) -> int:
        return {
            "A": m * k + n * k + 2 * m * n,
            "B": m * k + n * k,
            "C": m * k,
            "Ct": n * k,
            "D": 0,
        }[self.value]

    @property
    def scratch(self) -> ScratchPolicy:
        return {
            "A": ScratchPolicy.DYNAMIC,
            "B": ScratchPolicy.DYNAMIC,
            "C": ScratchPolicy.BOUNDED,
            "Ct": ScratchPolicy.BOUNDED,
            "D": ScratchPolicy.NONE,
        }[self.value]

    def kernel(self, transa: TransOp, transb: TransOp) -> str:
        if self is GemmVariant.A:
            return "nt_ppp"
        if self is GemmVariant.B:
            return "nt_ppc"
        if self is GemmVariant.C:
            return "nn_pcc" if transb is N else "nt_pcc"
        if self is GemmVariant.Ct:
            return "nn_cpc" if transa is T else "nt_cpc"
        if transa is T and transb is T:
            return "nn_ccc^T"
        return "nn_ccc" if transb is N else "nt_ccc"

    def legal(self, transa: TransOp, transb: TransOp) -> bool:
        transa, transb = TransOp.parse(transa, 1), TransOp.parse(transb, 2)
        return not (self is GemmVariant.D and transa is T and transb is N)

    @classmethod
    def parse(cls, value) -> "GemmVariant":
        if isinstance(value, cls):
            return value
        for v in cls:
            if str(value).lower() == v.value.lower():
                return v
        raise ArgumentError(0, f"unknown gemm variant {value!r}")


@dataclass(frozen=True)
class VariantPlan:
    variant: GemmVariant
    kernel: str
    scratch: ScratchPolicy
    predicted_packed: int


def _env_int(env, name, default):
    value = env.get(name)
    return default if value in (None, "") else int(value)


@dataclass(frozen=True)
class EngineConfig:
    """Planner knobs; ``tiny_m``/``tiny_n`` default to ``mr`` and ``2*nr``."""

    switch_dim: int = 256
    tiny_m: int | None = None
    tiny_n: int | None = None
    bounded_scratch_cap: int = 65536
    kernel: KernelConfig = field(default_factory=KernelConfig)

    def __post_init__(self):
        if self.tiny_m is None:
            object.__setattr__(self, "tiny_m", self.kernel.mr)
        if self.tiny_n is None:
            object.__setattr__(self, "tiny_n", 2 * self.kernel.nr)
        for name in ("switch_dim", "tiny_m", "tiny_n", "bounded_scratch_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.switch_dim < max(self.tiny_m, self.tiny_n):
            raise ValueError("switch_dim must be at least the tiny bounds")

    @classmethod
    def from_env(cls, environ=None) -> "EngineConfig":
        """Read PANELBLAS_SWITCH_DIM, PANELBLAS_TINY_M, PANELBLAS_TINY_N,
        PANELBLAS_SCRATCH_CAP, PANELBLAS_MR and PANELBLAS_PS."""
        env = os.environ if environ is None else environ
        return cls(
            switch_dim=_env_int(env, "PANELBLAS_SWITCH_DIM", 256),
            tiny_m=_env_int(env, "PANELBLAS_TINY_M", None),
            tiny_n=_env_int(env, "PANELBLAS_TINY_N", None),
            bounded_scratch_cap=_env_int(env, "PANELBLAS_SCRATCH_CAP", 65536),
            kernel=KernelConfig.from_env(env),
        )


_default_cfg = None


def default_config() -> EngineConfig:
    """Process-wide config read once from the environment."""
    global _default_cfg
    if _default_cfg is None:
        _default_cfg = EngineConfig.from_env()
    return _default_cfg


def bounded_fits(rows: int, k: int, cfg: EngineConfig) -> bool:
    """Whether a ``rows x k`` packed block fits the bounded scratch cap."""
    ps = cfg.kernel.ps
    return -(-rows // ps) * ps * k * 8 <= cfg.bounded_scratch_cap


def select_variant(transa, transb, m: int, n: int, k: int, cfg: EngineConfig | None = None) -> VariantPlan:
    cfg = cfg or default_config()
    transa, transb = TransOp.parse(transa, 1), TransOp.parse(transb, 2)
    tn = transa is T and transb is N
    if m <= cfg.tiny_m and n <= cfg.tiny_n and not tn:
        v = GemmVariant.D
    elif max(m, n, k) <= cfg.switch_dim and bounded_fits(cfg.kernel.mr, k, cfg):
        v = GemmVariant.C if m < n else GemmVariant.Ct
    else:
        v = GemmVariant.B
    return VariantPlan(v, v.kernel(transa, transb), v.scratch, v.packed_elements(m, n, k))


def _strides(view: ColMatView, trans: TransOp):
    return (1, view.ld) if trans is N else (view.ld, 1)


@njit(cache=True)
def _run_A(loop, m, n, k, alpha, Ap, sda, Bp, sdb, beta, Cp, sdc, mr, tile, stats):
    ps = tile.shape[1]
    for i0 in range(0, m, mr):
        ma = min(mr, m - i0)
        aoff = (i0 // ps) * sda
        coff0 = (i0 // ps) * sdc
        for j0 in range(0, n, ps):
            na = min(ps, n - j0)
            coff = coff0 + j0 * ps
            kernel_gemm_nt_ppp(loop, k, alpha, Ap, aoff, sda, Bp, (j0 // ps) * sdb, beta,
                               Cp, coff, sdc, Cp, coff, sdc, ma, na, SHAPE_FULL, 0, tile, stats)


@njit(cache=True)
def _run_B(loop, m, n, k, alpha, A, ars, acs, Bp, sdb, beta, C, crs, ccs, Ab, mr, tile, stats):
    ps = tile.shape[1]
    for i0 in range(0, m, mr):
        ma = min(mr, m - i0)
        pack_strided(ma, k, A, i0 * ars, ars, acs, Ab, 0, ps * k, ps, stats)
        for j0 in range(0, n, ps):
            na = min(ps, n - j0)
            kernel_gemm_nt_ppc(loop, k, alpha, Ab, 0, ps * k, Bp, (j0 // ps) * sdb, beta,
                               C, i0 * crs + j0 * ccs, crs, ccs, ma, na, SHAPE_FULL, 0, tile, stats)


@njit(cache=True)
def _run_C(loop, m, n, k, alpha, A, ars, acs, B, brs, bcs, beta, C, crs, ccs, Ab, mr, tile, stats):
    ps = tile.shape[1]
    for i0 in range(0, m, mr):
        ma = min(mr, m - i0)
        pack_strided(ma, k, A, i0 * ars, ars, acs, Ab, 0, ps * k, ps, stats)
        for j0 in range(0, n, ps):
            na = min(ps, n - j0)
            kernel_gemm_pcc(loop, k, alpha, Ab, 0, ps * k, B, j0 * bcs, bcs, brs, beta,
                            C, i0 * crs + j0 * ccs, crs, ccs, ma, na, SHAPE_FULL, 0, tile, stats)


@njit(cache=True)
def _run_D(loop, m, n, k, alpha, A, ars, acs, B, brs, bcs, beta, C, crs, ccs, mr, tile, stats):
    ps = tile.shape[1]
    for i0 in range(0, m, mr):
        ma = min(mr, m - i0)
        for j0 in range(0, n, ps):
            na = min(ps, n - j0)
            kernel_gemm_ccc(loop, k, alpha, A, i0 * ars, ars, acs, B, j0 * bcs, bcs, brs, beta,
                            C, i0 * crs + j0 * ccs, crs, ccs, ma, na, tile, stats)


def _check(transa, transb, m, n, k, A, B, C):
    transa, transb = TransOp.parse(transa, 1), TransOp.parse(transb, 2)
    if min(m, n, k) < 0:
        raise ArgumentError(3, "negative dimension")
    ashape = (m, k) if transa is N else (k, m)
    bshape = (k, n) if transb is N else (n, k)
    if (A.m, A.n) != ashape:
        raise ArgumentError(7, f"A is {A.m}x{A.n}, expected {ashape[0]}x{ashape[1]}")
    if (B.m, B.n) != bshape:
        raise ArgumentError(9, f"B is {B.m}x{B.n}, expected {bshape[0]}x{bshape[1]}")
    if (C.m, C.n) != (m, n):
        raise ArgumentError(12, f"C is {C.m}x{C.n}, expected {m}x{n}")
    if not C.writable:
        raise ArgumentError(12, "C is read-only")
    return transa, transb


def gemm_variant_A(transa, transb, m, n, k, alpha, A, B, beta, C, cfg=None) -> PackStats:
    """Pack op(A), op(B)^T and C, multiply in panel-major, unpack C."""
    cfg = cfg or default_config()
    transa, transb = _check(transa, transb, m, n, k, A, B, C)
    kc = cfg.kernel
    ps = kc.ps
    stats = PackStats("A")
    if m == 0 or n == 0:
        return stats
    ars, acs = _strides(A, transa)
    brs, bcs = _strides(B, transb)
    pm, pn, pk = (-(-x // ps) * ps for x in (m, n, k))
    sda, sdb, sdc = ps * pk, ps * pk, ps * pn
    Ap = aligned_empty(pm * pk)
    Bp = aligned_empty(pn * pk)
    Cp = aligned_empty(pm * pn)
    stats.add_scratch(8 * (Ap.size + Bp.size + Cp.size), bounded=False)
    raw = stats.raw
    pack_strided(m, k, A.data, 0, ars, acs, Ap, 0, sda, ps, raw)
    pack_strided(n, k, B.data, 0, bcs, brs, Bp, 0, sdb, ps, raw)
    pack_strided(m, n, C.data, 0, 1, C.ld, Cp, 0, sdc, ps, raw)
    _run_A(kc.nt_pp, m, n, k, alpha, Ap, sda, Bp, sdb, beta, Cp, sdc, kc.mr, kc.new_tile(), raw)
    unpack_strided(m, n, Cp, 0, sdc, ps, C.data, 0, 1, C.ld, raw)
    return stats


def gemm_variant_B(transa, transb, m, n, k, alpha, A, B, beta, C, cfg=None) -> PackStats:
    """Pack all of op(B)^T once and op(A) one row block at a time; C used in place."""
    cfg = cfg or default_config()
    transa, transb = _check(transa, transb, m, n, k, A, B, C)
    kc = cfg.kernel
    ps = kc.ps
    stats = PackStats("B")
    if m == 0 or n == 0:
        return stats
    ars, acs = _strides(A, transa)
    brs, bcs = _strides(B, transb)
    pn, pk = -(-n // ps) * ps, -(-k // ps) * ps
    sdb = ps * pk
    Bp = aligned_empty(pn * pk)
    Ab = aligned_empty(kc.mr * k)
    stats.add_scratch(8 * (Bp.size + Ab.size), bounded=False)
    raw = stats.raw
    pack_strided(n, k, B.data, 0, bcs, brs, Bp, 0, sdb, ps, raw)
    _run_B(kc.nt_pp, m, n, k, alpha, A.data, ars, acs, Bp, sdb, beta,
           C.data, 1, C.ld, Ab, kc.mr, kc.new_tile(), raw)
    return stats


def _variant_C_core(m, n, k, alpha, A, ars, acs, B, brs, bcs, beta, C, crs, ccs, cfg, stats):
    kc = cfg.kernel
    if m == 0 or n == 0:
        return
    Ab = aligned_empty(kc.mr * k)
    stats.add_scratch(8 * Ab.size, bounded=True)
    _run_C(kc.pc, m, n, k, alpha, A, ars, acs, B, brs, bcs, beta, C, crs, ccs,
           Ab, kc.mr, kc.new_tile(), stats.raw)


def gemm_variant_C(transa, transb, m, n, k, alpha, A, B, beta, C, cfg=None) -> PackStats:
    """Pack op(A) one row block at a time into bounded scratch; B and C used in place."""
    cfg = cfg or default_config()
    transa, transb = _check(transa, transb, m, n, k, A, B, C)
    stats = PackStats("C")
    ars, acs = _strides(A, transa)
    brs, bcs = _strides(B, transb)
    _variant_C_core(m, n, k, alpha, A.data, ars, acs, B.data, brs, bcs, beta,
                    C.data, 1, C.ld, cfg, stats)
    return stats


def gemm_variant_Ct(transa, transb, m, n, k, alpha, A, B, beta, C, cfg=None) -> PackStats:
    """Variant C applied to ``C^T = op(B)^T * op(A)^T``, so op(B) is the packed factor."""
    cfg = cfg or default_config()
    transa, transb = _check(transa, transb, m, n, k, A, B, C)
    stats = PackStats("Ct")
    ars, acs = _strides(A, transa)
    brs, bcs = _strides(B, transb)
    # op(B)^T(i, l) = op(B)(l, i); op(A)^T(l, j) = op(A)(j, l)
    _variant_C_core(n, m, k, alpha, B.data, bcs, brs, A.data, acs, ars, beta,
                    C.data, C.ld, 1, cfg, stats)
    return stats


def gemm_variant_D(transa, transb, m, n, k, alpha, A, B, beta, C, cfg=None) -> PackStats:
    """No packing; TT is computed as ``C^T = B*A``; TN is not allowed."""
    cfg = cfg or default_config()
    transa, transb = _check(transa, transb, m, n, k, A, B, C)
    if transa is T and transb is N:
        raise ArgumentError(1, "variant D has no kernel for the TN case")
    kc = cfg.kernel
    stats = PackStats("D")
    if m == 0 or n == 0:
        return stats
    tile, raw = kc.new_tile(), stats.raw
    if transa is T:
        # C^T (n x m) = B (n x k, untransposed) * A (k x m, untransposed)
        _run_D(kc.cc, n, m, k, alpha, B.data, 1, B.ld, A.data, 1, A.ld, beta,
               C.data, C.ld, 1, kc.mr, tile, raw)
    else:
        brs, bcs = _strides(B, transb)
        _run_D(kc.cc, m, n, k, alpha, A.data, 1, A.ld, B.data, brs, bcs, beta,
               C.data, 1, C.ld, kc.mr, tile, raw)
    return stats


VARIANTS = {
    GemmVariant.A: gemm_variant_A,
    GemmVariant.B: gemm_variant_B,
    GemmVariant.C: gemm_variant_C,
    GemmVariant.Ct: gemm_variant_Ct,
    GemmVariant.D: gemm_variant_D,
}


@njit(cache=True)
def scale_colmajor(m, n, beta, C, rs, cs):
    """C <- beta*C; beta == 0 writes zeros without reading C."""
    for j in range(n):
        for i in range(m):
            if beta == 0.0:
                C[i * rs + j * cs] = 0.0
            else:
                C[i * rs + j * cs] = beta * C[i * rs + j * cs]


def gemm(transa, transb, m, n, k, alpha, A, B, beta, C, cfg=None, variant=None) -> PackStats:
    """``C <- alpha*op(A)*op(B) + beta*C``; the variant comes from the planner unless forced."""
    cfg = cfg or default_config()
    transa, transb = _check(transa, transb, m, n, k, A, B, C)
    if m == 0 or n == 0:
        return PackStats()
    if k == 0 or alpha == 0.0:
        if beta != 1.0:
            scale_colmajor(m, n, float(beta), C.data, 1, C.ld)
        return PackStats()
    v = select_variant(transa, transb, m, n, k, cfg).variant if variant is None else GemmVariant.parse(variant)
    if not v.legal(transa, transb):
        raise ArgumentError(1, "variant D has no kernel for the TN case")
    return VARIANTS[v](transa, transb, m, n, k, float(alpha), A, B, float(beta), C, cfg)
