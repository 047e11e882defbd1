"""Kernels: one tile of a routine, written purely as a chain of inner functions.

Names follow ``kernel_<routine>_<trans>_<layouts>``; the layout letters are
for A_k, B_k and C_k/D_k ('p' panel-major, 'c' column-major or strided).
No kernel does arithmetic of its own.
"""

from numba import njit

from .subops import (
    SHAPE_FULL,
    SHAPE_LOWER,
    edge_potrf,
    edge_trmm_right,
    edge_trsm_right,
    inner_gemm_cc,
    inner_gemm_nn_pp,
    inner_gemm_nt_pp,
    inner_gemm_nt_pp_sub,
    inner_gemm_pc,
    scale_ab_c,
    scale_ab_p,
    scale_m11_c,
    store_c,
    store_p,
    tile_zero,
)


@njit(cache=True)
def kernel_gemm_nt_ppp(loop, kmax, alpha, A, aoff, sda, B, boff, beta,
                       C, coff, sdc, D, doff, sdd, ma, na, shape, dg, tile, stats):
    tile_zero(tile)
    inner_gemm_nt_pp(loop, kmax, A, aoff, sda, ma, B, boff, tile, stats)
    scale_ab_p(alpha, beta, C, coff, sdc, ma, na, tile)
    store_p(tile, D, doff, sdd, ma, na, shape, dg)


@njit(cache=True)
def kernel_gemm_nn_ppp(loop, kmax, alpha, A, aoff, sda, B, boff, sdb, beta,
                       C, coff, sdc, D, doff, sdd, ma, na, tile, stats):
    tile_zero(tile)
    inner_gemm_nn_pp(loop, kmax, A, aoff, sda, ma, B, boff, sdb, tile, stats)
    scale_ab_p(alpha, beta, C, coff, sdc, ma, na, tile)
    store_p(tile, D, doff, sdd, ma, na, SHAPE_FULL, 0)


@njit(cache=True)
def kernel_gemm_nt_ppc(loop, kmax, alpha, A, aoff, sda, B, boff, beta,
                       C, coff, rs, cs, ma, na, shape, dg, tile, stats):
    tile_zero(tile)
    inner_gemm_nt_pp(loop, kmax, A, aoff, sda, ma, B, boff, tile, stats)
    scale_ab_c(alpha, beta, C, coff, rs, cs, ma, na, tile)
    store_c(tile, C, coff, rs, cs, ma, na, shape, dg)


@njit(cache=True)
def kernel_gemm_pcc(loop, kmax, alpha, A, aoff, sda, B, boff, sj, sl, beta,
                    C, coff, rs, cs, ma, na, shape, dg, tile, stats):
    """nn_pcc (``sl == 1``) and nt_pcc (``sj == 1``); transposed C gives the cpc kernels."""
    tile_zero(tile)
    inner_gemm_pc(loop, kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile, stats)
    scale_ab_c(alpha, beta, C, coff, rs, cs, ma, na, tile)
    store_c(tile, C, coff, rs, cs, ma, na, shape, dg)


@njit(cache=True)
def kernel_gemm_pcp(loop, kmax, alpha, A, aoff, sda, B, boff, sj, sl, beta,
                    C, coff, sdc, ma, na, tile, stats):
    tile_zero(tile)
    inner_gemm_pc(loop, kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile, stats)
    scale_ab_p(alpha, beta, C, coff, sdc, ma, na, tile)
    store_p(tile, C, coff, sdc, ma, na, SHAPE_FULL, 0)


@njit(cache=True)
def kernel_gemm_ccc(loop, kmax, alpha, A, aoff, si, sla, B, boff, sj, slb, beta,
                    C, coff, rs, cs, ma, na, tile, stats):
    tile_zero(tile)
    inner_gemm_cc(loop, kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile, stats)
    scale_ab_c(alpha, beta, C, coff, rs, cs, ma, na, tile)
    store_c(tile, C, coff, rs, cs, ma, na, SHAPE_FULL, 0)


@njit(cache=True)
def kernel_potrf_nt_l_ppc(loop, kmax, L, aoff, boff, sdl, C, coff, rs, cs,
                          doff, ma, na, tile, stats):
    """Diagonal tile of a left-looking Cholesky.

    ``L`` is the shared packed factor: the update uses rows at ``aoff`` and
    ``boff`` and the result goes back to it at ``doff`` as well as to C.
    """
    tile_zero(tile)
    inner_gemm_nt_pp(loop, kmax, L, aoff, sdl, ma, L, boff, tile, stats)
    scale_m11_c(C, coff, rs, cs, ma, na, tile)
    info = edge_potrf(tile, na)
    nstore = na if info == 0 else info - 1
    store_c(tile, C, coff, rs, cs, ma, nstore, SHAPE_LOWER, 0)
    store_p(tile, L, doff, sdl, ma, nstore, SHAPE_FULL, 0)
    return info


@njit(cache=True)
def kernel_trsm_nt_rl_inv_ppc(loop, kmax, L, aoff, boff, sdl, C, coff, rs, cs,
                              eoff, doff, ma, na, tile, stats):
    """Off-diagonal tile of a left-looking Cholesky: (C - L_i L_j^T) L_jj^-T."""
    tile_zero(tile)
    inner_gemm_nt_pp(loop, kmax, L, aoff, sdl, ma, L, boff, tile, stats)
    scale_m11_c(C, coff, rs, cs, ma, na, tile)
    edge_trsm_right(tile, C, eoff, rs, cs, False, True, False, ma, na)
    store_c(tile, C, coff, rs, cs, ma, na, SHAPE_FULL, 0)
    store_p(tile, L, doff, sdl, ma, na, SHAPE_FULL, 0)


@njit(cache=True)
def kernel_syrk_potrf_nt_l_ppp(loop, loop_sub, k, A, aoff, sda, B, boff,
                               kd, D, dioff, djoff, sdd, C, coff, sdc, ma, na, tile, stats):
    """Fused diagonal tile: chol(C + A_i B_j^T - D_i D_j^T), written to D at column ``kd``."""
    ps = tile.shape[1]
    tile_zero(tile)
    inner_gemm_nt_pp(loop, k, A, aoff, sda, ma, B, boff, tile, stats)
    inner_gemm_nt_pp_sub(loop_sub, kd, D, dioff, sdd, ma, D, djoff, tile, stats)
    scale_ab_p(1.0, 1.0, C, coff, sdc, ma, na, tile)
    info = edge_potrf(tile, na)
    nstore = na if info == 0 else info - 1
    store_p(tile, D, dioff + kd * ps, sdd, ma, nstore, SHAPE_LOWER, 0)
    return info


@njit(cache=True)
def kernel_syrk_trsm_nt_rl_ppp(loop, loop_sub, k, A, aoff, sda, B, boff,
                               kd, D, dioff, djoff, sdd, C, coff, sdc, ma, na, tile, stats):
    """Fused off-diagonal tile: (C + A_i B_j^T - D_i D_j^T) D_jj^-T."""
    ps = tile.shape[1]
    tile_zero(tile)
    inner_gemm_nt_pp(loop, k, A, aoff, sda, ma, B, boff, tile, stats)
    inner_gemm_nt_pp_sub(loop_sub, kd, D, dioff, sdd, ma, D, djoff, tile, stats)
    scale_ab_p(1.0, 1.0, C, coff, sdc, ma, na, tile)
    edge_trsm_right(tile, D, djoff + kd * ps, 1, ps, False, True, False, ma, na)
    store_p(tile, D, dioff + kd * ps, sdd, ma, na, SHAPE_FULL, 0)


@njit(cache=True)
def kernel_trsm_nt_rl_ppp(loop, kmax, alpha, X, xoff, sdx, E, eoff, B, boff, sdb,
                          unit, ma, na, tile, stats):
    """(alpha*B - X_i E_j^T) E_jj^-T with E lower, all panel-major; X_i receives the result."""
    ps = tile.shape[1]
    tile_zero(tile)
    inner_gemm_nt_pp(loop, kmax, X, xoff, sdx, ma, E, eoff, tile, stats)
    scale_ab_p(-1.0, alpha, B, boff, sdb, ma, na, tile)
    info = edge_trsm_right(tile, E, eoff + kmax * ps, 1, ps, False, True, unit, ma, na)
    store_p(tile, X, xoff + kmax * ps, sdx, ma, na, SHAPE_FULL, 0)
    return info


@njit(cache=True)
def kernel_trsm_pcp(loop, kmax, alpha, X, xoff, sdx, T, toff, sj, sl, B, boff, sdb,
                    E, eoff, ers, ecs, upper, trans, unit, ma, na, tile, stats):
    """Right-side solve tile: (alpha*B - X_k T_k^T) op(E)^-1, result stored to B."""
    tile_zero(tile)
    inner_gemm_pc(loop, kmax, X, xoff, sdx, ma, T, toff, sj, sl, na, tile, stats)
    scale_ab_p(-1.0, alpha, B, boff, sdb, ma, na, tile)
    info = edge_trsm_right(tile, E, eoff, ers, ecs, upper, trans, unit, ma, na)
    store_p(tile, B, boff, sdb, ma, na, SHAPE_FULL, 0)
    return info


@njit(cache=True)
def kernel_trmm_pcc(loop, kmax, alpha, X, xoff, sdx, T, toff, sj, sl,
                    E, eoff, ers, ecs, upper, unit, D, doff, rs, cs, ma, na, tile, stats):
    """alpha * (X_k T_k^T + X_jj op-triangle(E)) stored to the strided D."""
    ps = tile.shape[1]
    tile_zero(tile)
    inner_gemm_pc(loop, kmax, X, xoff, sdx, ma, T, toff, sj, sl, na, tile, stats)
    edge_trmm_right(tile, X, xoff + kmax * ps, sdx, ma, E, eoff, ers, ecs, upper, unit, na)
    scale_ab_c(alpha, 0.0, D, doff, rs, cs, ma, na, tile)
    store_c(tile, D, doff, rs, cs, ma, na, SHAPE_FULL, 0)
