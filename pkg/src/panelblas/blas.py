"""netlib-shaped entry points: dgemm, dsyrk, dtrmm, dtrsm, dpotrf, dgetrf.

Matrices are flat float64 buffers (or Fortran-ordered 2-D arrays) with
explicit leading dimensions, flags are single characters, and arguments are
validated in Fortran order.  The first invalid argument raises
``BlasCallError`` with its 1-based position; in abort mode it instead prints
the reference xerbla message and aborts the process.
"""

from __future__ import annotations

import os
import sys

import numpy as np

from . import engine, factor, level3
from .core import ArgumentError, ColMatView, DiagKind, Side, TransOp, Uplo, as_buffer, required_length

_mode = {"abort": False}


class BlasCallError(ArgumentError):
    """Invalid argument to a BLAS/LAPACK routine."""

    def __init__(self, routine: str, index: int, message: str = ""):
        super().__init__(index, message or "illegal value")
        self.routine = routine
        self.args = (f"{routine}: parameter {index} had an illegal value ({self.message})",)


def set_abort_on_error(enabled: bool):
    """Mimic reference xerbla: print and abort instead of raising."""
    _mode["abort"] = bool(enabled)


def _fail(routine, index, message):
    if _mode["abort"]:
        print(f" ** On entry to {routine.upper()} parameter number {index:2d} had an illegal value",
              file=sys.stderr, flush=True)
        os.abort()
    raise BlasCallError(routine, index, message)


def _flag(routine, cls, value, index):
    try:
        return cls.parse(value, index)
    except ArgumentError as e:
        _fail(routine, index, e.message)


def _buffer(routine, buf, rows, cols, ld, index, writable=False):
    try:
        data = as_buffer(buf)
    except (TypeError, ValueError) as e:
        _fail(routine, index, str(e))
    if data.size < required_length(rows, cols, ld):
        _fail(routine, index, f"buffer holds {data.size} elements, needs {required_length(rows, cols, ld)}")
    if writable and not data.flags.writeable:
        _fail(routine, index, "buffer is read-only")
    return ColMatView(data, rows, cols, ld, writable)


def _translate(routine, call):
    try:
        return call()
    except BlasCallError:
        raise
    except ArgumentError as e:
        _fail(routine, e.index, e.message)


def dgemm(transa, transb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc, *, cfg=None, variant=None):
    """``C <- alpha*op(A)*op(B) + beta*C``.  Returns the call's PackStats."""
    r = "dgemm"
    ta = _flag(r, TransOp, transa, 1)
    tb = _flag(r, TransOp, transb, 2)
    nrowa, ncola = (m, k) if ta is TransOp.NoTrans else (k, m)
    nrowb, ncolb = (k, n) if tb is TransOp.NoTrans else (n, k)
    if m < 0:
        _fail(r, 3, f"m={m} < 0")
    if n < 0:
        _fail(r, 4, f"n={n} < 0")
    if k < 0:
        _fail(r, 5, f"k={k} < 0")
    if lda < max(1, nrowa):
        _fail(r, 8, f"lda={lda} < max(1, {nrowa})")
    if ldb < max(1, nrowb):
        _fail(r, 10, f"ldb={ldb} < max(1, {nrowb})")
    if ldc < max(1, m):
        _fail(r, 13, f"ldc={ldc} < max(1, {m})")
    A = _buffer(r, a, nrowa, ncola, lda, 7)
    B = _buffer(r, b, nrowb, ncolb, ldb, 9)
    C = _buffer(r, c, m, n, ldc, 12, writable=True)
    return _translate(r, lambda: engine.gemm(ta, tb, m, n, k, alpha, A, B, beta, C, cfg, variant))


def dsyrk(uplo, trans, n, k, alpha, a, lda, beta, c, ldc, *, cfg=None, variant=None):
    """``C <- alpha*op(A)*op(A)^T + beta*C`` on the ``uplo`` triangle."""
    r = "dsyrk"
    ul = _flag(r, Uplo, uplo, 1)
    tr = _flag(r, TransOp, trans, 2)
    nrowa, ncola = (n, k) if tr is TransOp.NoTrans else (k, n)
    if n < 0:
        _fail(r, 3, f"n={n} < 0")
    if k < 0:
        _fail(r, 4, f"k={k} < 0")
    if lda < max(1, nrowa):
        _fail(r, 7, f"lda={lda} < max(1, {nrowa})")
    if ldc < max(1, n):
        _fail(r, 10, f"ldc={ldc} < max(1, {n})")
    A = _buffer(r, a, nrowa, ncola, lda, 6)
    C = _buffer(r, c, n, n, ldc, 9, writable=True)
    return _translate(r, lambda: level3.syrk(ul, tr, n, k, alpha, A, beta, C, cfg, variant))


def _tri_args(r, side, uplo, transa, diag, m, n, a, lda, b, ldb):
    sd = _flag(r, Side, side, 1)
    ul = _flag(r, Uplo, uplo, 2)
    ta = _flag(r, TransOp, transa, 3)
    dg = _flag(r, DiagKind, diag, 4)
    nrowa = m if sd is Side.Left else n
    if m < 0:
        _fail(r, 5, f"m={m} < 0")
    if n < 0:
        _fail(r, 6, f"n={n} < 0")
    if lda < max(1, nrowa):
        _fail(r, 9, f"lda={lda} < max(1, {nrowa})")
    if ldb < max(1, m):
        _fail(r, 11, f"ldb={ldb} < max(1, {m})")
    A = _buffer(r, a, nrowa, nrowa, lda, 8)
    B = _buffer(r, b, m, n, ldb, 10, writable=True)
    return sd, ul, ta, dg, A, B


def dtrmm(side, uplo, transa, diag, m, n, alpha, a, lda, b, ldb, *, cfg=None):
    """``B <- alpha*op(A)*B`` or ``B <- alpha*B*op(A)`` with A triangular."""
    r = "dtrmm"
    sd, ul, ta, dg, A, B = _tri_args(r, side, uplo, transa, diag, m, n, a, lda, b, ldb)
    return _translate(r, lambda: level3.trmm(sd, ul, ta, dg, m, n, alpha, A, B, cfg))


def dtrsm(side, uplo, transa, diag, m, n, alpha, a, lda, b, ldb, *, cfg=None):
    """Solve ``op(A)*X = alpha*B`` or ``X*op(A) = alpha*B``; X overwrites B."""
    r = "dtrsm"
    sd, ul, ta, dg, A, B = _tri_args(r, side, uplo, transa, diag, m, n, a, lda, b, ldb)
    return _translate(r, lambda: level3.trsm(sd, ul, ta, dg, m, n, alpha, A, B, cfg))


def dpotrf(uplo, n, a, lda, *, cfg=None) -> int:
    """Cholesky factorization; returns LAPACK ``info`` (0 or the failed pivot)."""
    r = "dpotrf"
    ul = _flag(r, Uplo, uplo, 1)
    if n < 0:
        _fail(r, 2, f"n={n} < 0")
    if lda < max(1, n):
        _fail(r, 4, f"lda={lda} < max(1, {n})")
    A = _buffer(r, a, n, n, lda, 3, writable=True)
    return _translate(r, lambda: factor.potrf(ul, n, A, cfg)).info


def dgetrf(m, n, a, lda, ipiv=None, *, cfg=None):
    """LU with partial pivoting.  Returns ``(ipiv, info)``; ipiv is 1-based.

    When an ``ipiv`` array is passed it is filled in place as well.
    """
    r = "dgetrf"
    if m < 0:
        _fail(r, 1, f"m={m} < 0")
    if n < 0:
        _fail(r, 2, f"n={n} < 0")
    if lda < max(1, m):
        _fail(r, 4, f"lda={lda} < max(1, {m})")
    A = _buffer(r, a, m, n, lda, 3, writable=True)
    if ipiv is not None and np.asarray(ipiv).size < min(m, n):
        _fail(r, 5, "ipiv is shorter than min(m, n)")
    piv, info = _translate(r, lambda: factor.getrf(m, n, A, cfg))
    if ipiv is not None:
        ipiv[: piv.size] = piv
    return piv, info.info
