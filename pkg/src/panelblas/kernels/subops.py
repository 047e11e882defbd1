"""Inner functions: the elementary steps every kernel is assembled from.

Argument conventions shared by all compiled code:

* panel window ``(X, xoff, sdx)``: ``xoff`` addresses element (0, 0), which
  sits on a panel boundary; ``sdx`` is the distance between panels.  The
  panel height equals the tile width ``nr``.
* strided window ``(X, xoff, rs, cs)``: element (i, j) at ``xoff + i*rs + j*cs``.
  Plain column-major is ``rs=1, cs=ld``; swapping the strides transposes.
* ``ma``/``na`` are the active rows/columns of the tile (edge masking).
* ``loop`` is the tile-shape index of the generated register-blocked loop.
"""

from numba import njit

from ..panel import FAULT, FLOPS
from . import _inner

SHAPE_FULL, SHAPE_LOWER, SHAPE_UPPER = 0, 1, 2

# perturbation applied by the mutation fixture (see panelblas.kernels.mutation)
FAULT_DELTA = 1e-3


@njit(cache=True)
def _account(kmax, tile, stats):
    stats[FLOPS] += 2 * tile.shape[0] * tile.shape[1] * kmax
    if stats[FAULT] != 0:
        tile[0, 0] += FAULT_DELTA


@njit(cache=True)
def tile_zero(tile):
    for j in range(tile.shape[1]):
        for i in range(tile.shape[0]):
            tile[i, j] = 0.0


@njit(cache=True)
def inner_gemm_nt_pp(loop, kmax, A, aoff, sda, ma, B, boff, tile, stats):
    """tile += A_k * B_k^T, both operands panel-major."""
    if kmax > 0:
        _inner.nt_pp(loop, kmax, A, aoff, sda, ma, B, boff, tile)
        _account(kmax, tile, stats)


@njit(cache=True)
def inner_gemm_nt_pp_sub(loop, kmax, A, aoff, sda, ma, B, boff, tile, stats):
    """tile -= A_k * B_k^T, both operands panel-major."""
    if kmax > 0:
        _inner.nt_pp_sub(loop, kmax, A, aoff, sda, ma, B, boff, tile)
        _account(kmax, tile, stats)


@njit(cache=True)
def inner_gemm_nn_pp(loop, kmax, A, aoff, sda, ma, B, boff, sdb, tile, stats):
    """tile += A_k * B_k with B_k a ``kmax x nr`` panel window."""
    if kmax > 0:
        _inner.nn_pp(loop, kmax, A, aoff, sda, ma, B, boff, sdb, tile)
        _account(kmax, tile, stats)


@njit(cache=True)
def inner_gemm_pc(loop, kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile, stats):
    """tile += A_k * Bt^T, Bt(j, l) = B[boff + j*sj + l*sl]."""
    if kmax > 0:
        _inner.pc(loop, kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile)
        _account(kmax, tile, stats)


@njit(cache=True)
def inner_gemm_nn_pc(loop, kmax, A, aoff, sda, ma, B, boff, ldb, na, tile, stats):
    # B_k is kmax x nr column-major: contiguous along the k-loop
    inner_gemm_pc(loop, kmax, A, aoff, sda, ma, B, boff, ldb, 1, na, tile, stats)


@njit(cache=True)
def inner_gemm_nt_pc(loop, kmax, A, aoff, sda, ma, B, boff, ldb, na, tile, stats):
    # B_k is nr x kmax column-major: accessed across columns
    inner_gemm_pc(loop, kmax, A, aoff, sda, ma, B, boff, 1, ldb, na, tile, stats)


@njit(cache=True)
def inner_gemm_cc(loop, kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile, stats):
    """tile += A_k * Bt^T with both operands strided windows."""
    if kmax > 0:
        _inner.cc(loop, kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile)
        _account(kmax, tile, stats)


@njit(cache=True)
def inner_gemm_nn_cc(loop, kmax, A, aoff, lda, ma, B, boff, ldb, na, tile, stats):
    inner_gemm_cc(loop, kmax, A, aoff, 1, lda, ma, B, boff, ldb, 1, na, tile, stats)


@njit(cache=True)
def inner_gemm_nt_cc(loop, kmax, A, aoff, lda, ma, B, boff, ldb, na, tile, stats):
    inner_gemm_cc(loop, kmax, A, aoff, 1, lda, ma, B, boff, 1, ldb, na, tile, stats)


@njit(cache=True)
def scale_ab_c(alpha, beta, C, coff, rs, cs, ma, na, tile):
    """tile = alpha*tile + beta*C; C is not read when beta == 0."""
    for j in range(tile.shape[1]):
        for i in range(tile.shape[0]):
            tile[i, j] = alpha * tile[i, j]
    if beta != 0.0:
        for j in range(na):
            for i in range(ma):
                tile[i, j] = tile[i, j] + beta * C[coff + i * rs + j * cs]


@njit(cache=True)
def scale_ab_p(alpha, beta, C, coff, sdc, ma, na, tile):
    ps = tile.shape[1]
    for j in range(tile.shape[1]):
        for i in range(tile.shape[0]):
            tile[i, j] = alpha * tile[i, j]
    if beta != 0.0:
        for j in range(na):
            for i in range(ma):
                tile[i, j] = tile[i, j] + beta * C[coff + (i // ps) * sdc + j * ps + i % ps]


@njit(cache=True)
def scale_m11_c(C, coff, rs, cs, ma, na, tile):
    """tile = C - tile."""
    for j in range(na):
        for i in range(ma):
            tile[i, j] = C[coff + i * rs + j * cs] - tile[i, j]


@njit(cache=True)
def scale_m11_p(C, coff, sdc, ma, na, tile):
    ps = tile.shape[1]
    for j in range(na):
        for i in range(ma):
            tile[i, j] = C[coff + (i // ps) * sdc + j * ps + i % ps] - tile[i, j]


@njit(cache=True)
def edge_potrf(tile, na):
    """Lower Cholesky of the leading ``na x na`` block, rows below solved against it.

    Returns 0, or the 1-based column of the first non-positive pivot; columns
    before it are final.
    """
    mr = tile.shape[0]
    for j in range(na):
        d = tile[j, j]
        if not d > 0.0:
            return j + 1
        d = d ** 0.5
        tile[j, j] = d
        for i in range(j + 1, mr):
            tile[i, j] = tile[i, j] / d
        for jj in range(j + 1, na):
            t = tile[jj, j]
            for i in range(jj, mr):
                tile[i, jj] -= tile[i, j] * t
    for j in range(1, na):
        for i in range(j):
            tile[i, j] = 0.0
    return 0


@njit(cache=True)
def edge_trsm_right(tile, E, eoff, ers, ecs, upper, trans, unit, ma, na):
    """tile = tile * op(E)^-1 for the ``na x na`` triangular window E.

    Each tile row is an independent small solve.  Returns 0, or the 1-based
    index of an exact zero diagonal (non-unit case) where solving stopped.
    """
    rs, cs = (ecs, ers) if trans else (ers, ecs)
    forward = upper != trans
    for step in range(na):
        j = step if forward else na - 1 - step
        lo, hi = (0, j) if forward else (j + 1, na)
        for l in range(lo, hi):
            t = E[eoff + l * rs + j * cs]
            for i in range(ma):
                tile[i, j] -= tile[i, l] * t
        if not unit:
            d = E[eoff + j * (rs + cs)]
            if d == 0.0:
                return j + 1
            for i in range(ma):
                tile[i, j] = tile[i, j] / d
    return 0


@njit(cache=True)
def edge_trmm_right(tile, A, aoff, sda, ma, E, eoff, ers, ecs, upper, unit, na):
    """tile += A_k * T for the ``na x na`` triangular window T (upper or lower).

    A_k is a panel window of ``na`` columns; only T's triangle is read, and
    its diagonal is taken as 1 when ``unit``.
    """
    ps = tile.shape[1]
    for j in range(na):
        lo, hi = (0, j + 1) if upper else (j, na)
        for l in range(lo, hi):
            if l == j and unit:
                t = 1.0
            else:
                t = E[eoff + l * ers + j * ecs]
            for i in range(ma):
                tile[i, j] += A[aoff + (i // ps) * sda + l * ps + i % ps] * t


@njit(cache=True)
def store_c(tile, D, doff, rs, cs, ma, na, shape, dg):
    """Masked store; LOWER keeps i + dg >= j, UPPER keeps i + dg <= j."""
    for j in range(na):
        for i in range(ma):
            if shape == SHAPE_LOWER and i + dg < j:
                continue
            if shape == SHAPE_UPPER and i + dg > j:
                continue
            D[doff + i * rs + j * cs] = tile[i, j]


@njit(cache=True)
def store_p(tile, D, doff, sdd, ma, na, shape, dg):
    ps = tile.shape[1]
    for j in range(na):
        for i in range(ma):
            if shape == SHAPE_LOWER and i + dg < j:
                continue
            if shape == SHAPE_UPPER and i + dg > j:
                continue
            D[doff + (i // ps) * sdd + j * ps + i % ps] = tile[i, j]
