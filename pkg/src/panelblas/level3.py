"""syrk, trmm and trsm on column-major views, plus the native panel-major entry points.

Every triangular case is reduced to one canonical form, ``X*U = alpha*B``
(trsm) or ``B <- alpha*B*U`` (trmm) with U upper, using only stride tricks on
the operands (no data moves):

=============  =============================================================
case           reduction
=============  =============================================================
Left           transpose the problem: swap B's strides, flip ``transa``
Trans          swap A's strides and flip ``uplo``
Lower          reverse the order of B's columns and of T's rows and columns
               (``J*L*J`` is upper for the exchange matrix J)
=============  =============================================================

The canonical loops pack one row block of B into panel-major scratch and
sweep its column blocks left to right with the ``pc`` kernels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import ArgumentError, ColMatView, DiagKind, Side, SingularMatrixError, TransOp, Uplo
from .engine import EngineConfig, bounded_fits, default_config, scale_colmajor
from .factor import FactorInfo
from .kernels import KernelConfig
from .kernels.compose import (
    kernel_gemm_nn_ppp,
    kernel_gemm_nt_ppc,
    kernel_gemm_nt_ppp,
    kernel_gemm_pcc,
    kernel_syrk_potrf_nt_l_ppp,
    kernel_syrk_trsm_nt_rl_ppp,
    kernel_trmm_pcc,
    kernel_trsm_nt_rl_ppp,
    kernel_trsm_pcp,
)
from .kernels.subops import SHAPE_FULL, SHAPE_LOWER
from .panel import PackStats, PanelMat, aligned_empty, pack_strided, unpack_strided

N, T = TransOp.NoTrans, TransOp.Trans


@dataclass(frozen=True)
class TriMatView:
    """A square view of which only the ``uplo`` triangle (and the diagonal unless Unit) is read."""

    view: ColMatView
    uplo: Uplo
    diag: DiagKind

    def __post_init__(self):
        object.__setattr__(self, "uplo", Uplo.parse(self.uplo))
        object.__setattr__(self, "diag", DiagKind.parse(self.diag))
        if self.view.m != self.view.n:
            raise ArgumentError(0, "triangular matrix must be square")

    @property
    def n(self) -> int:
        return self.view.m

    def to_array(self) -> np.ndarray:
        a = self.view.to_array()
        t = np.tril(a) if self.uplo is Uplo.Lower else np.triu(a)
        if self.diag is DiagKind.Unit:
            np.fill_diagonal(t, 1.0)
        return t


# ---------------------------------------------------------------- syrk


@njit(cache=True)
def scale_lower(n, beta, C, rs, cs):
    for j in range(n):
        for i in range(j, n):
            if beta == 0.0:
                C[i * rs + j * cs] = 0.0
            else:
                C[i * rs + j * cs] = beta * C[i * rs + j * cs]


@njit(cache=True)
def _syrk_B(loop, n, k, alpha, Ap, sda, beta, C, crs, ccs, mr, tile, stats):
    ps = tile.shape[1]
    for i0 in range(0, n, mr):
        ma = min(mr, n - i0)
        for j0 in range(0, i0 + ma, ps):
            na = min(ps, n - j0)
            kernel_gemm_nt_ppc(loop, k, alpha, Ap, (i0 // ps) * sda, sda, Ap, (j0 // ps) * sda, beta,
                               C, i0 * crs + j0 * ccs, crs, ccs, ma, na, SHAPE_LOWER, i0 - j0,
                               tile, stats)


@njit(cache=True)
def _syrk_C(loop_pp, loop_pc, n, k, alpha, A, ars, acs, beta, C, crs, ccs, Ab, mr, tile, stats):
    ps = tile.shape[1]
    sdb = ps * k
    for i0 in range(0, n, mr):
        ma = min(mr, n - i0)
        pack_strided(ma, k, A, i0 * ars, ars, acs, Ab, 0, sdb, ps, stats)
        for j0 in range(0, i0, ps):
            kernel_gemm_pcc(loop_pc, k, alpha, Ab, 0, sdb, A, j0 * ars, ars, acs, beta,
                            C, i0 * crs + j0 * ccs, crs, ccs, ma, ps, SHAPE_FULL, 0, tile, stats)
        # the packed block is also the right factor of the diagonal tiles
        for j0 in range(i0, i0 + ma, ps):
            na = min(ps, n - j0)
            kernel_gemm_nt_ppc(loop_pp, k, alpha, Ab, 0, sdb, Ab, ((j0 - i0) // ps) * sdb, beta,
                               C, i0 * crs + j0 * ccs, crs, ccs, ma, na, SHAPE_LOWER, i0 - j0,
                               tile, stats)


def syrk(uplo, trans, n, k, alpha, A: ColMatView, beta, C: ColMatView,
         cfg: EngineConfig | None = None, variant=None) -> PackStats:
    """``C <- alpha*op(A)*op(A)^T + beta*C`` on the ``uplo`` triangle of C.

    Upper is the lower case on C's transposed view.  Variant B packs op(A)
    once and uses it for both factors; variant C packs row blocks of op(A)
    into bounded scratch, with diagonal tiles reading both factors from it.
    """
    cfg = cfg or default_config()
    uplo, trans = Uplo.parse(uplo, 1), TransOp.parse(trans, 2)
    if n < 0 or k < 0:
        raise ArgumentError(3 if n < 0 else 4, "negative dimension")
    ashape = (n, k) if trans is N else (k, n)
    if (A.m, A.n) != ashape:
        raise ArgumentError(7, f"A is {A.m}x{A.n}, expected {ashape[0]}x{ashape[1]}")
    if (C.m, C.n) != (n, n) or not C.writable:
        raise ArgumentError(10, "C must be a writable n x n view")
    crs, ccs = (1, C.ld) if uplo is Uplo.Lower else (C.ld, 1)
    if n == 0 or ((alpha == 0.0 or k == 0) and beta == 1.0):
        return PackStats()
    if alpha == 0.0 or k == 0:
        scale_lower(n, float(beta), C.data, crs, ccs)
        return PackStats()
    kc = cfg.kernel
    ps = kc.ps
    if variant is None:
        variant = "C" if n <= cfg.switch_dim and bounded_fits(kc.mr, k, cfg) else "B"
    if variant not in ("B", "C"):
        raise ArgumentError(0, f"syrk has variants B and C, got {variant!r}")
    stats = PackStats(variant)
    ars, acs = (1, A.ld) if trans is N else (A.ld, 1)
    if variant == "B":
        pn, pk = -(-n // ps) * ps, -(-k // ps) * ps
        Ap = aligned_empty(pn * pk)
        stats.add_scratch(8 * Ap.size, bounded=False)
        pack_strided(n, k, A.data, 0, ars, acs, Ap, 0, ps * pk, ps, stats.raw)
        _syrk_B(kc.nt_pp, n, k, float(alpha), Ap, ps * pk, float(beta), C.data, crs, ccs,
                kc.mr, kc.new_tile(), stats.raw)
    else:
        Ab = aligned_empty(kc.mr * k)
        stats.add_scratch(8 * Ab.size, bounded=True)
        _syrk_C(kc.nt_pp, kc.pc, n, k, float(alpha), A.data, ars, acs, float(beta), C.data, crs, ccs,
                Ab, kc.mr, kc.new_tile(), stats.raw)
    return stats


# ------------------------------------------------------- trsm / trmm


@njit(cache=True)
def _trsm_ru_block(loop, ma, c, alpha, Xp, sdx, U, uoff, urs, ucs, unit, tile, stats):
    """Solve ``X*U = alpha*Xp`` in place for one packed row block (U upper, c x c)."""
    ps = tile.shape[1]
    for j0 in range(0, c, ps):
        na = min(ps, c - j0)
        kernel_trsm_pcp(loop, j0, alpha, Xp, 0, sdx, U, uoff + j0 * ucs, ucs, urs,
                        Xp, j0 * ps, sdx, U, uoff + j0 * (urs + ucs), urs, ucs,
                        True, False, unit, ma, na, tile, stats)


@njit(cache=True)
def _trsm_ru(loop, r, c, alpha, B, boff, brs, bcs, U, uoff, urs, ucs, unit, Xp, mr, tile, stats):
    ps = tile.shape[1]
    sdx = ps * c
    for i0 in range(0, r, mr):
        ma = min(mr, r - i0)
        pack_strided(ma, c, B, boff + i0 * brs, brs, bcs, Xp, 0, sdx, ps, stats)
        _trsm_ru_block(loop, ma, c, alpha, Xp, sdx, U, uoff, urs, ucs, unit, tile, stats)
        unpack_strided(ma, c, Xp, 0, sdx, ps, B, boff + i0 * brs, brs, bcs, stats)


@njit(cache=True)
def _trmm_ru(loop, r, c, alpha, B, boff, brs, bcs, U, uoff, urs, ucs, unit, Xp, mr, tile, stats):
    """``B <- alpha*B*U`` (U upper); each row block is packed first, so B can be overwritten."""
    ps = tile.shape[1]
    sdx = ps * c
    for i0 in range(0, r, mr):
        ma = min(mr, r - i0)
        pack_strided(ma, c, B, boff + i0 * brs, brs, bcs, Xp, 0, sdx, ps, stats)
        for j0 in range(0, c, ps):
            na = min(ps, c - j0)
            kernel_trmm_pcc(loop, j0, alpha, Xp, 0, sdx, U, uoff + j0 * ucs, ucs, urs,
                            U, uoff + j0 * (urs + ucs), urs, ucs, True, unit,
                            B, boff + i0 * brs + j0 * bcs, brs, bcs, ma, na, tile, stats)


def _check_tri(side, uplo, transa, diag, m, n, A, B):
    side = Side.parse(side, 1)
    uplo = Uplo.parse(uplo, 2)
    transa = TransOp.parse(transa, 3)
    diag = DiagKind.parse(diag, 4)
    if m < 0:
        raise ArgumentError(5, f"m={m} < 0")
    if n < 0:
        raise ArgumentError(6, f"n={n} < 0")
    na = m if side is Side.Left else n
    if (A.m, A.n) != (na, na):
        raise ArgumentError(9, f"A is {A.m}x{A.n}, expected {na}x{na}")
    if (B.m, B.n) != (m, n) or not B.writable:
        raise ArgumentError(11, "B must be a writable m x n view")
    return side, uplo, transa, diag


def _canonical(side, uplo, transa, m, n, ldb, lda):
    """Strides turning the call into ``X*U = B`` with U upper (see module table)."""
    if side is Side.Left:
        r, c, brs, bcs = n, m, ldb, 1
        trans = transa is N
    else:
        r, c, brs, bcs = m, n, 1, ldb
        trans = transa is T
    boff, uoff, urs, ucs = 0, 0, 1, lda
    upper = uplo is Uplo.Upper
    if trans:
        urs, ucs = ucs, urs
        upper = not upper
    if not upper:
        uoff += (c - 1) * (urs + ucs)
        urs, ucs = -urs, -ucs
        boff += (c - 1) * bcs
        bcs = -bcs
    return r, c, boff, brs, bcs, uoff, urs, ucs


def _row_block_scratch(c, cfg, stats):
    kc = cfg.kernel
    Xp = aligned_empty(kc.mr * c)
    stats.add_scratch(8 * Xp.size, bounded=c <= cfg.switch_dim and bounded_fits(kc.mr, c, cfg))
    return Xp


def first_zero_diagonal(A: ColMatView) -> int:
    """1-based index of the first exact zero on the diagonal, or 0."""
    d = A.data[: A.n * (A.ld + 1): A.ld + 1][: A.n]
    zeros = np.flatnonzero(d == 0.0)
    return int(zeros[0]) + 1 if zeros.size else 0


def trsm(side, uplo, transa, diag, m, n, alpha, A: ColMatView, B: ColMatView,
         cfg: EngineConfig | None = None) -> PackStats:
    """Solve ``op(A)*X = alpha*B`` (Left) or ``X*op(A) = alpha*B`` (Right); X overwrites B.

    An exact zero on A's diagonal (NonUnit) raises SingularMatrixError before
    B is touched.
    """
    cfg = cfg or default_config()
    side, uplo, transa, diag = _check_tri(side, uplo, transa, diag, m, n, A, B)
    stats = PackStats("trsm")
    if m == 0 or n == 0:
        return stats
    if diag is DiagKind.NonUnit:
        p = first_zero_diagonal(A)
        if p:
            raise SingularMatrixError(p)
    if alpha == 0.0:
        scale_colmajor(m, n, 0.0, B.data, 1, B.ld)
        return stats
    r, c, boff, brs, bcs, uoff, urs, ucs = _canonical(side, uplo, transa, m, n, B.ld, A.ld)
    kc = cfg.kernel
    Xp = _row_block_scratch(c, cfg, stats)
    _trsm_ru(kc.pc, r, c, float(alpha), B.data, boff, brs, bcs, A.data, uoff, urs, ucs,
             diag is DiagKind.Unit, Xp, kc.mr, kc.new_tile(), stats.raw)
    return stats


def trmm(side, uplo, transa, diag, m, n, alpha, A: ColMatView, B: ColMatView,
         cfg: EngineConfig | None = None) -> PackStats:
    """``B <- alpha*op(A)*B`` (Left) or ``B <- alpha*B*op(A)`` (Right)."""
    cfg = cfg or default_config()
    side, uplo, transa, diag = _check_tri(side, uplo, transa, diag, m, n, A, B)
    stats = PackStats("trmm")
    if m == 0 or n == 0:
        return stats
    if alpha == 0.0:
        scale_colmajor(m, n, 0.0, B.data, 1, B.ld)
        return stats
    r, c, boff, brs, bcs, uoff, urs, ucs = _canonical(side, uplo, transa, m, n, B.ld, A.ld)
    kc = cfg.kernel
    Xp = _row_block_scratch(c, cfg, stats)
    _trmm_ru(kc.pc, r, c, float(alpha), B.data, boff, brs, bcs, A.data, uoff, urs, ucs,
             diag is DiagKind.Unit, Xp, kc.mr, kc.new_tile(), stats.raw)
    return stats


# ------------------------------------------------------- native API


def _panel_cfg(mats, cfg):
    ps = mats[0].ps
    for idx, p in enumerate(mats[1:], start=2):
        if p.ps != ps:
            raise ArgumentError(idx, f"panel size mismatch: {p.ps} != {ps}")
    if cfg is None:
        return KernelConfig.for_ps(ps)
    if cfg.ps != ps:
        raise ArgumentError(0, "kernel config panel size differs from the operands")
    return cfg


def _check_output(C: PanelMat, D: PanelMat):
    if C is D or C.data is D.data:
        return
    if np.shares_memory(C.data, D.data):
        raise ArgumentError(0, "C and D must alias exactly or not at all")


def _shape(p: PanelMat, m, n, idx, name):
    if (p.m, p.n) != (m, n):
        raise ArgumentError(idx, f"{name} is {p.m}x{p.n}, expected {m}x{n}")


@njit(cache=True)
def _gemm_nd_nn(loop, m, n, k, alpha, A, sda, B, sdb, beta, C, sdc, D, sdd, mr, tile, stats):
    ps = tile.shape[1]
    for i0 in range(0, m, mr):
        ma = min(mr, m - i0)
        for j0 in range(0, n, ps):
            na = min(ps, n - j0)
            kernel_gemm_nn_ppp(loop, k, alpha, A, (i0 // ps) * sda, sda, B, j0 * ps, sdb, beta,
                               C, (i0 // ps) * sdc + j0 * ps, sdc, D, (i0 // ps) * sdd + j0 * ps, sdd,
                               ma, na, tile, stats)


@njit(cache=True)
def _gemm_nd_nt(loop, m, n, k, alpha, A, sda, B, sdb, beta, C, sdc, D, sdd, mr, tile, stats):
    ps = tile.shape[1]
    for i0 in range(0, m, mr):
        ma = min(mr, m - i0)
        for j0 in range(0, n, ps):
            na = min(ps, n - j0)
            kernel_gemm_nt_ppp(loop, k, alpha, A, (i0 // ps) * sda, sda, B, (j0 // ps) * sdb, beta,
                               C, (i0 // ps) * sdc + j0 * ps, sdc, D, (i0 // ps) * sdd + j0 * ps, sdd,
                               ma, na, SHAPE_FULL, 0, tile, stats)


def gemm_nd(transb, m, n, k, alpha, A: PanelMat, B: PanelMat, beta, C: PanelMat, D: PanelMat,
            cfg: KernelConfig | None = None) -> PackStats:
    """``D <- alpha*A*op(B) + beta*C`` on panel-major operands (op(A) is always A)."""
    transb = TransOp.parse(transb, 1)
    kc = _panel_cfg([A, B, C, D], cfg)
    _shape(A, m, k, 6, "A")
    _shape(B, *((k, n) if transb is N else (n, k)), 7, "B")
    _shape(C, m, n, 9, "C")
    _shape(D, m, n, 10, "D")
    _check_output(C, D)
    stats = PackStats("native")
    if m and n:
        run, loop = (_gemm_nd_nn, kc.nn_pp) if transb is N else (_gemm_nd_nt, kc.nt_pp)
        run(loop, m, n, k, float(alpha), A.data, A.sd, B.data, B.sd, float(beta),
                 C.data, C.sd, D.data, D.sd, kc.mr, kc.new_tile(), stats.raw)
    return stats


@njit(cache=True)
def _syrk_nd(loop, n, k, alpha, A, sda, B, sdb, beta, C, sdc, D, sdd, mr, tile, stats):
    ps = tile.shape[1]
    for i0 in range(0, n, mr):
        ma = min(mr, n - i0)
        for j0 in range(0, i0 + ma, ps):
            na = min(ps, n - j0)
            kernel_gemm_nt_ppp(loop, k, alpha, A, (i0 // ps) * sda, sda, B, (j0 // ps) * sdb, beta,
                               C, (i0 // ps) * sdc + j0 * ps, sdc, D, (i0 // ps) * sdd + j0 * ps, sdd,
                               ma, na, SHAPE_LOWER, i0 - j0, tile, stats)


def syrk_nd(n, k, alpha, A: PanelMat, B: PanelMat, beta, C: PanelMat, D: PanelMat,
            cfg: KernelConfig | None = None) -> PackStats:
    """Lower triangle of ``D <- alpha*A*B^T + beta*C``."""
    kc = _panel_cfg([A, B, C, D], cfg)
    _shape(A, n, k, 4, "A")
    _shape(B, n, k, 5, "B")
    _shape(C, n, n, 7, "C")
    _shape(D, n, n, 8, "D")
    _check_output(C, D)
    stats = PackStats("native")
    if n:
        _syrk_nd(kc.nt_pp, n, k, float(alpha), A.data, A.sd, B.data, B.sd, float(beta),
                 C.data, C.sd, D.data, D.sd, kc.mr, kc.new_tile(), stats.raw)
    return stats


@njit(cache=True)
def _trsm_nd(loop, m, n, alpha, E, sde, B, sdb, D, sdd, unit, mr, tile, stats):
    ps = tile.shape[1]
    for i0 in range(0, m, mr):
        ma = min(mr, m - i0)
        for j0 in range(0, n, ps):
            na = min(ps, n - j0)
            kernel_trsm_nt_rl_ppp(loop, j0, alpha, D, (i0 // ps) * sdd, sdd, E, (j0 // ps) * sde,
                                  B, (i0 // ps) * sdb + j0 * ps, sdb, unit, ma, na, tile, stats)


def trsm_nd(diag, m, n, alpha, A: PanelMat, B: PanelMat, D: PanelMat,
            cfg: KernelConfig | None = None) -> PackStats:
    """``D <- alpha*B*A^-T`` with A lower triangular (right, lower, transposed)."""
    diag = DiagKind.parse(diag, 1)
    kc = _panel_cfg([A, B, D], cfg)
    _shape(A, n, n, 5, "A")
    _shape(B, m, n, 6, "B")
    _shape(D, m, n, 7, "D")
    _check_output(B, D)
    stats = PackStats("native")
    if m == 0 or n == 0:
        return stats
    if diag is DiagKind.NonUnit:
        d = np.array([A[i, i] for i in range(n)])
        zeros = np.flatnonzero(d == 0.0)
        if zeros.size:
            raise SingularMatrixError(int(zeros[0]) + 1)
    _trsm_nd(kc.nt_pp, m, n, float(alpha), A.data, A.sd, B.data, B.sd, D.data, D.sd,
             diag is DiagKind.Unit, kc.mr, kc.new_tile(), stats.raw)
    return stats


@njit(cache=True)
def _syrk_potrf_nd(loop, loop_sub, n, k, A, sda, B, sdb, C, sdc, D, sdd, mr, tile, stats):
    ps = tile.shape[1]
    for i0 in range(0, n, mr):
        ma = min(mr, n - i0)
        for j0 in range(0, i0, ps):
            kernel_syrk_trsm_nt_rl_ppp(loop, loop_sub, k, A, (i0 // ps) * sda, sda, B, (j0 // ps) * sdb,
                                       j0, D, (i0 // ps) * sdd, (j0 // ps) * sdd, sdd,
                                       C, (i0 // ps) * sdc + j0 * ps, sdc, ma, ps, tile, stats)
        for j0 in range(i0, i0 + ma, ps):
            na = min(ps, n - j0)
            rj = (j0 // ps)
            info = kernel_syrk_potrf_nt_l_ppp(loop, loop_sub, k, A, rj * sda, sda, B, rj * sdb,
                                              j0, D, rj * sdd, rj * sdd, sdd,
                                              C, rj * sdc + j0 * ps, sdc, i0 + ma - j0, na, tile, stats)
            if info:
                return j0 + info
    return 0


def syrk_potrf_nd(n, k, A: PanelMat, B: PanelMat, C: PanelMat, D: PanelMat,
                  cfg: KernelConfig | None = None) -> FactorInfo:
    """Lower Cholesky factor of ``C + A*B^T`` in a single kernel sweep.

    Only D's lower triangle is written.  A failed pivot ``p`` stops the sweep
    and is reported as ``info = p``.
    """
    kc = _panel_cfg([A, B, C, D], cfg)
    _shape(A, n, k, 3, "A")
    _shape(B, n, k, 4, "B")
    _shape(C, n, n, 5, "C")
    _shape(D, n, n, 6, "D")
    _check_output(C, D)
    stats = PackStats("native")
    info = 0
    if n:
        info = _syrk_potrf_nd(kc.nt_pp, kc.nt_pp_sub, n, k, A.data, A.sd, B.data, B.sd,
                              C.data, C.sd, D.data, D.sd, kc.mr, kc.new_tile(), stats.raw)
    return FactorInfo(int(info), stats)
