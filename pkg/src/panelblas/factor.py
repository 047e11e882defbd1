"""Cholesky (potrf) and partially pivoted LU (getrf) built directly on tile kernels.

potrf is left-looking over row panels of height ``mr``.  Each finished tile
of the factor is also stored into one shared panel-major buffer, which then
provides both operands of every later update, as in syrk.

getrf works on column blocks of width ``nr``.  A block is packed transposed
into a single panel, so the triangular solve and the trailing update run on
the right-side and ``pc`` kernels, and the unblocked LU of the block searches
pivots along contiguous panel columns.  Earlier interchanges reach a block
lazily when it is loaded; a block's own interchanges are applied to the
columns on its left right after it is factorized.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .core import ArgumentError, ColMatView, Uplo
from .kernels.compose import (
    kernel_gemm_pcp,
    kernel_potrf_nt_l_ppc,
    kernel_trsm_nt_rl_inv_ppc,
    kernel_trsm_pcp,
)
from .panel import PACKED, PackStats, aligned_empty, pack_strided, unpack_strided


@dataclass
class FactorInfo:
    """LAPACK-style status: 0 success, ``-j`` bad argument ``j``, ``p`` failed pivot ``p``."""

    info: int
    stats: PackStats = field(default_factory=PackStats, repr=False)

    @property
    def ok(self) -> bool:
        return self.info == 0

    def __int__(self):
        return self.info


def _default_cfg(cfg):
    if cfg is None:
        from .engine import default_config

        cfg = default_config()
    return cfg


@njit(cache=True)
def _potrf_lower(loop, n, A, rs, cs, P, sdp, mr, tile, stats):
    ps = tile.shape[1]
    nlim = n
    info = 0
    for i0 in range(0, n, mr):
        ma = min(mr, n - i0)
        ri = (i0 // ps) * sdp
        for j0 in range(0, min(i0 + ma, nlim), ps):
            na = min(ps, nlim - j0)
            rj = (j0 // ps) * sdp
            if j0 < i0:
                kernel_trsm_nt_rl_inv_ppc(loop, j0, P, ri, rj, sdp, A, i0 * rs + j0 * cs, rs, cs,
                                          j0 * (rs + cs), ri + j0 * ps, ma, na, tile, stats)
            else:
                # the diagonal tile starts at row j0; rows below it in the panel are solved too
                p = kernel_potrf_nt_l_ppc(loop, j0, P, rj, rj, sdp, A, j0 * (rs + cs), rs, cs,
                                          rj + j0 * ps, i0 + ma - j0, na, tile, stats)
                if p:
                    info = j0 + p
                    # keep columns before the pivot valid for the remaining row panels
                    nlim = info - 1
                    break
    return info


def potrf(uplo, n, A: ColMatView, cfg=None) -> FactorInfo:
    """Cholesky factor in the ``uplo`` triangle of A (Upper via the transposed view).

    On failure ``info = p`` and the first ``p - 1`` columns (rows for Upper)
    hold a valid partial factor.
    """
    cfg = _default_cfg(cfg)
    uplo = Uplo.parse(uplo, 1)
    if n < 0:
        raise ArgumentError(2, f"n={n} < 0")
    if (A.m, A.n) != (n, n) or not A.writable:
        raise ArgumentError(3, "A must be a writable n x n view")
    stats = PackStats("potrf")
    if n == 0:
        return FactorInfo(0, stats)
    kc = cfg.kernel
    ps = kc.ps
    pn = -(-n // ps) * ps
    P = aligned_empty(pn * pn)
    stats.add_scratch(8 * P.size, bounded=False)
    rs, cs = (1, A.ld) if uplo is Uplo.Lower else (A.ld, 1)
    info = _potrf_lower(kc.nt_pp, n, A.data, rs, cs, P, ps * pn, kc.mr, kc.new_tile(), stats.raw)
    # every factor element is written once into the shared buffer
    stats.raw[PACKED] += n * (n + 1) // 2
    return FactorInfo(int(info), stats)


@njit(cache=True)
def _swap_rows(A, lda, ipiv, p0, p1, c0, c1):
    for p in range(p0, p1):
        q = ipiv[p] - 1
        if q != p:
            for j in range(c0, c1):
                t = A[p + j * lda]
                A[p + j * lda] = A[q + j * lda]
                A[q + j * lda] = t


@njit(cache=True)
def _block_lu(Tp, ps, j0, nb, m, ipiv):
    """Unblocked LU of the transposed block ``Tp`` (row jj is column j0+jj, column i is row i)."""
    info = 0
    for jj in range(nb):
        j = j0 + jj
        if j >= m:
            break
        p = j
        amax = abs(Tp[jj + j * ps])
        for i in range(j + 1, m):
            v = abs(Tp[jj + i * ps])
            if v > amax:
                amax = v
                p = i
        ipiv[j] = p + 1
        piv = Tp[jj + p * ps]
        if piv == 0.0:
            if info == 0:
                info = j + 1
            continue
        if p != j:
            for r in range(nb):
                t = Tp[r + j * ps]
                Tp[r + j * ps] = Tp[r + p * ps]
                Tp[r + p * ps] = t
        for i in range(j + 1, m):
            Tp[jj + i * ps] /= piv
        for r in range(jj + 1, nb):
            u = Tp[r + j * ps]
            for i in range(j + 1, m):
                Tp[r + i * ps] -= Tp[jj + i * ps] * u
    return info


@njit(cache=True)
def _getrf(loop_pc, m, n, A, lda, ipiv, Tp, tile, stats):
    ps = tile.shape[1]
    sdt = Tp.size
    kmin = min(m, n)
    info = 0
    for j0 in range(0, n, ps):
        nb = min(ps, n - j0)
        jtop = min(j0, m)
        _swap_rows(A, lda, ipiv, 0, jtop, j0, j0 + nb)
        # Tp(jj, i) = A(i, j0 + jj)
        pack_strided(nb, m, A, j0 * lda, lda, 1, Tp, 0, sdt, ps, stats)
        # U12^T = A12^T * L11^-T; L11^T is upper unit with U(l, j) = A(j, l)
        for c0 in range(0, jtop, ps):
            na = min(ps, jtop - c0)
            kernel_trsm_pcp(loop_pc, c0, 1.0, Tp, 0, sdt, A, c0, 1, lda,
                            Tp, c0 * ps, sdt, A, c0 * (lda + 1), lda, 1,
                            True, False, True, nb, na, tile, stats)
        # A22 -= L21 * U12, in transposed form
        for i0 in range(jtop, m, ps):
            na = min(ps, m - i0)
            kernel_gemm_pcp(loop_pc, jtop, -1.0, Tp, 0, sdt, A, i0, 1, lda, 1.0,
                            Tp, i0 * ps, sdt, nb, na, tile, stats)
        p = _block_lu(Tp, ps, j0, nb, m, ipiv)
        if p and info == 0:
            info = p
        unpack_strided(nb, m, Tp, 0, sdt, ps, A, j0 * lda, lda, 1, stats)
        _swap_rows(A, lda, ipiv, j0, min(j0 + nb, kmin), 0, j0)
    return info


def getrf(m, n, A: ColMatView, cfg=None):
    """LU with partial pivoting, ``P*A = L*U``.  Returns ``(ipiv, FactorInfo)`` with 1-based ipiv."""
    cfg = _default_cfg(cfg)
    if m < 0:
        raise ArgumentError(1, f"m={m} < 0")
    if n < 0:
        raise ArgumentError(2, f"n={n} < 0")
    if (A.m, A.n) != (m, n) or not A.writable:
        raise ArgumentError(3, "A must be a writable m x n view")
    stats = PackStats("getrf")
    ipiv = np.zeros(min(m, n), dtype=np.int64)
    if m == 0 or n == 0:
        return ipiv, FactorInfo(0, stats)
    kc = cfg.kernel
    ps = kc.ps
    # one panel, ps rows by m columns
    Tp = aligned_empty(ps * (-(-m // ps) * ps))
    stats.add_scratch(8 * Tp.size, bounded=False)
    info = _getrf(kc.pc, m, n, A.data, A.ld, ipiv, Tp, kc.new_tile(), stats.raw)
    return ipiv, FactorInfo(int(info), stats)

