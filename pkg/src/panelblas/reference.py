"""Naive reference implementations used as the test oracle.

Plain triple loops in the fixed order (i, j, l), textbook substitution and
unblocked factorizations.  No packing, no tiles.  The calling shape mirrors
the BLAS layer: flat column-major buffers plus leading dimensions, results in
place.
"""

import numpy as np
from numba import njit

from .core import DiagKind, Side, SingularMatrixError, TransOp, Uplo, as_buffer


@njit(cache=True)
def _gemm(ta, tb, m, n, k, alpha, A, lda, B, ldb, beta, C, ldc):
    for i in range(m):
        for j in range(n):
            s = 0.0
            for l in range(k):
                a = A[l + i * lda] if ta else A[i + l * lda]
                b = B[j + l * ldb] if tb else B[l + j * ldb]
                s += a * b
            if beta == 0.0:
                C[i + j * ldc] = alpha * s
            else:
                C[i + j * ldc] = alpha * s + beta * C[i + j * ldc]


def naive_gemm(transa, transb, m, n, k, alpha, A, lda, B, ldb, beta, C, ldc):
    ta = TransOp.parse(transa, 1) is TransOp.Trans
    tb = TransOp.parse(transb, 2) is TransOp.Trans
    _gemm(ta, tb, m, n, k, float(alpha), as_buffer(A), lda, as_buffer(B), ldb, float(beta),
          as_buffer(C), ldc)


@njit(cache=True)
def _syrk(lower, trans, n, k, alpha, A, lda, beta, C, ldc):
    for i in range(n):
        for j in range(n):
            if (lower and i < j) or (not lower and i > j):
                continue
            s = 0.0
            for l in range(k):
                if trans:
                    s += A[l + i * lda] * A[l + j * lda]
                else:
                    s += A[i + l * lda] * A[j + l * lda]
            if beta == 0.0:
                C[i + j * ldc] = alpha * s
            else:
                C[i + j * ldc] = alpha * s + beta * C[i + j * ldc]


def naive_syrk(uplo, trans, n, k, alpha, A, lda, beta, C, ldc):
    lower = Uplo.parse(uplo, 1) is Uplo.Lower
    trans = TransOp.parse(trans, 2) is TransOp.Trans
    _syrk(lower, trans, n, k, float(alpha), as_buffer(A), lda, float(beta), as_buffer(C), ldc)


@njit(cache=True)
def _op_tri(A, lda, i, j, lower, trans, unit):
    """Element (i, j) of op(T) for the triangle of A."""
    if trans:
        i, j = j, i
    if i == j:
        return 1.0 if unit else A[i + j * lda]
    if (lower and i > j) or (not lower and i < j):
        return A[i + j * lda]
    return 0.0


@njit(cache=True)
def _trmm(left, lower, trans, unit, m, n, alpha, A, lda, B, ldb):
    B0 = np.empty(m * n)
    for j in range(n):
        for i in range(m):
            B0[i + j * m] = B[i + j * ldb]
    for i in range(m):
        for j in range(n):
            s = 0.0
            if left:
                for l in range(m):
                    s += _op_tri(A, lda, i, l, lower, trans, unit) * B0[l + j * m]
            else:
                for l in range(n):
                    s += B0[i + l * m] * _op_tri(A, lda, l, j, lower, trans, unit)
            B[i + j * ldb] = alpha * s


@njit(cache=True)
def _trsm(left, lower, trans, unit, m, n, alpha, A, lda, B, ldb):
    # op(T) is lower exactly when lower != trans
    forward = lower != trans
    if left:
        for j in range(n):
            for step in range(m):
                i = step if forward else m - 1 - step
                s = alpha * B[i + j * ldb]
                lo, hi = (0, i) if forward else (i + 1, m)
                for l in range(lo, hi):
                    s -= _op_tri(A, lda, i, l, lower, trans, unit) * B[l + j * ldb]
                B[i + j * ldb] = s / _op_tri(A, lda, i, i, lower, trans, unit)
    else:
        # X op(T) = alpha B: column j of X needs columns l with op(T)(l, j) != 0
        for i in range(m):
            for step in range(n):
                j = n - 1 - step if forward else step
                s = alpha * B[i + j * ldb]
                lo, hi = (j + 1, n) if forward else (0, j)
                for l in range(lo, hi):
                    s -= B[i + l * ldb] * _op_tri(A, lda, l, j, lower, trans, unit)
                B[i + j * ldb] = s / _op_tri(A, lda, j, j, lower, trans, unit)


def _tri_flags(side, uplo, transa, diag):
    return (
        Side.parse(side, 1) is Side.Left,
        Uplo.parse(uplo, 2) is Uplo.Lower,
        TransOp.parse(transa, 3) is TransOp.Trans,
        DiagKind.parse(diag, 4) is DiagKind.Unit,
    )


def naive_trmm(side, uplo, transa, diag, m, n, alpha, A, lda, B, ldb):
    left, lower, trans, unit = _tri_flags(side, uplo, transa, diag)
    _trmm(left, lower, trans, unit, m, n, float(alpha), as_buffer(A), lda, as_buffer(B), ldb)


def naive_trsm(side, uplo, transa, diag, m, n, alpha, A, lda, B, ldb):
    left, lower, trans, unit = _tri_flags(side, uplo, transa, diag)
    A = as_buffer(A)
    if not unit:
        for i in range(m if left else n):
            if A[i + i * lda] == 0.0:
                raise SingularMatrixError(i + 1)
    _trsm(left, lower, trans, unit, m, n, float(alpha), A, lda, as_buffer(B), ldb)


@njit(cache=True)
def _potrf(lower, n, A, lda):
    # element (i, j) of the lower factor lives at (i, j) or, for Upper, at (j, i)
    rs, cs = (1, lda) if lower else (lda, 1)
    for i in range(n):
        for j in range(i + 1):
            s = A[i * rs + j * cs]
            for l in range(j):
                s -= A[i * rs + l * cs] * A[j * rs + l * cs]
            if i == j:
                if not s > 0.0:
                    return i + 1
                A[i * rs + i * cs] = np.sqrt(s)
            else:
                A[i * rs + j * cs] = s / A[j * rs + j * cs]
    return 0


def naive_potrf(uplo, n, A, lda) -> int:
    lower = Uplo.parse(uplo, 1) is Uplo.Lower
    return int(_potrf(lower, n, as_buffer(A), lda))


@njit(cache=True)
def _getrf(m, n, A, lda, ipiv):
    info = 0
    for j in range(min(m, n)):
        p = j
        amax = abs(A[j + j * lda])
        for i in range(j + 1, m):
            if abs(A[i + j * lda]) > amax:
                amax = abs(A[i + j * lda])
                p = i
        ipiv[j] = p + 1
        if A[p + j * lda] == 0.0:
            if info == 0:
                info = j + 1
            continue
        if p != j:
            for c in range(n):
                t = A[j + c * lda]
                A[j + c * lda] = A[p + c * lda]
                A[p + c * lda] = t
        for i in range(j + 1, m):
            A[i + j * lda] /= A[j + j * lda]
        for i in range(j + 1, m):
            for c in range(j + 1, n):
                A[i + c * lda] -= A[i + j * lda] * A[j + c * lda]
    return info


def naive_getrf(m, n, A, lda):
    """Returns ``(ipiv, info)`` with 1-based ipiv."""
    ipiv = np.zeros(min(m, n), dtype=np.int64)
    info = _getrf(m, n, as_buffer(A), lda, ipiv)
    return ipiv, int(info)
