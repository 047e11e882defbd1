"""Backward Riccati recursion of an LQ optimal control problem in factorized form.

Stage ``n`` has dynamics ``x+ = A x + B u`` and cost blocks Q (nx x nx),
R (nu x nu) and S (nu x nx).  With ``P_{n+1} = calL calL^T`` one step is::

    C = [B^T; A^T] * calL                              (trmm, right lower)
    [[Lam, 0], [L, calL_n]] = chol([[R, S], [S^T, Q]] + C C^T)

so that ``P_n = calL_n calL_n^T`` equals the classic recursion
``Q + A^T P A - (S^T + A^T P B) (R + B^T P B)^-1 (S + B^T P A)``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .blas import dpotrf, dsyrk, dtrmm
from .core import NotPositiveDefiniteError
from .level3 import gemm_nd, syrk_potrf_nd
from .panel import PanelMat

IMPLS = ("blas_path", "fused_native_path", "oracle")


@dataclass(frozen=True)
class OcpDims:
    nx: int
    nu: int
    N: int = 10

    def __post_init__(self):
        if self.nx < 1 or self.nu < 0 or self.N < 1:
            raise ValueError(f"invalid dimensions {self}")


@dataclass
class OcpData:
    dims: OcpDims
    A: list
    B: list
    Q: list
    R: list
    S: list
    QN: np.ndarray


def random_problem(dims: OcpDims, seed: int = 0) -> OcpData:
    """Random stage data with ``[[R, S], [S^T, Q]]`` positive definite."""
    rng = np.random.default_rng(seed)
    nx, nu = dims.nx, dims.nu

    def spd(n):
        M = rng.standard_normal((n, n))
        return M.T @ M + n * np.eye(n)

    A = [rng.standard_normal((nx, nx)) / np.sqrt(nx) for _ in range(dims.N)]
    B = [rng.standard_normal((nx, nu)) / np.sqrt(nx) for _ in range(dims.N)]
    Q = [spd(nx) for _ in range(dims.N)]
    R = [spd(nu) for _ in range(dims.N)]
    S = [0.1 * rng.standard_normal((nu, nx)) for _ in range(dims.N)]
    return OcpData(dims, A, B, Q, R, S, spd(nx))


class RiccatiFactors(NamedTuple):
    Lam: np.ndarray
    L: np.ndarray
    calL: np.ndarray


def _split(M, nu):
    return RiccatiFactors(np.tril(M[:nu, :nu]), M[nu:, :nu].copy(), np.tril(M[nu:, nu:]))


def riccati_step(calL, A, B, Q, R, S, fused: bool = False) -> RiccatiFactors:
    """One backward step from the factor ``calL`` of ``P_{n+1}``.

    ``fused=False`` runs dtrmm, dsyrk and dpotrf on column-major data;
    ``fused=True`` runs gemm_nd and the fused syrk_potrf_nd on panel-major data.
    """
    nx, nu = A.shape[0], B.shape[1]
    nz = nx + nu
    BAt = np.vstack([B.T, A.T])
    M = np.zeros((nz, nz))
    M[:nu, :nu] = R
    M[nu:, :nu] = S.T
    M[nu:, nu:] = Q
    if not fused:
        C = np.asfortranarray(BAt)
        L = np.asfortranarray(calL, dtype=np.float64)
        Mf = np.asfortranarray(M)
        dtrmm("R", "L", "N", "N", nz, nx, 1.0, L, nx, C, nz)
        dsyrk("L", "N", nz, nx, 1.0, C, nz, 1.0, Mf, nz)
        info = dpotrf("L", nz, Mf, nz)
        if info:
            raise NotPositiveDefiniteError(info)
        return _split(Mf, nu)
    Cp = PanelMat.zeros(nz, nx)
    gemm_nd("N", nz, nx, nx, 1.0, PanelMat.from_array(BAt), PanelMat.from_array(np.tril(calL)),
            0.0, Cp, Cp)
    D = PanelMat.zeros(nz, nz)
    fi = syrk_potrf_nd(nz, nx, Cp, Cp, PanelMat.from_array(M), D)
    if fi.info:
        raise NotPositiveDefiniteError(fi.info)
    return _split(D.to_array(), nu)


def oracle_sequence(data: OcpData) -> list:
    """``P_0 .. P_N`` from the classic recursion, computed with numpy."""
    P = data.QN
    seq = [P]
    for n in reversed(range(data.dims.N)):
        A, B, Q, R, S = data.A[n], data.B[n], data.Q[n], data.R[n], data.S[n]
        G = S + B.T @ P @ A
        H = R + B.T @ P @ B
        P = Q + A.T @ P @ A - G.T @ np.linalg.solve(H, G)
        P = 0.5 * (P + P.T)
        seq.append(P)
    return seq[::-1]


def _native_recursion(data: OcpData) -> list:
    """The factorized recursion entirely on panel-major data (stage data packed up front)."""
    nx, nu, N = data.dims.nx, data.dims.nu, data.dims.N
    nz = nx + nu
    BAt, Mp = [], []
    for n in range(N):
        BAt.append(PanelMat.from_array(np.vstack([data.B[n].T, data.A[n].T])))
        M = np.zeros((nz, nz))
        M[:nu, :nu] = data.R[n]
        M[nu:, :nu] = data.S[n].T
        M[nu:, nu:] = data.Q[n]
        Mp.append(PanelMat.from_array(M))
    calL = PanelMat.from_array(np.linalg.cholesky(data.QN))
    out = [calL]
    Cp = PanelMat.zeros(nz, nx)
    for n in reversed(range(N)):
        D = PanelMat.zeros(nz, nz)
        gemm_nd("N", nz, nx, nx, 1.0, BAt[n], calL, 0.0, Cp, Cp)
        fi = syrk_potrf_nd(nz, nx, Cp, Cp, Mp[n], D)
        if fi.info:
            raise NotPositiveDefiniteError(fi.info, f"stage {n}")
        calL = D.block(nu, nu, nx, nx)
        out.append(calL)
    return [np.tril(c.to_array()) for c in out[::-1]]


def _blas_recursion(data: OcpData) -> list:
    calL = np.linalg.cholesky(data.QN)
    out = [calL]
    for n in reversed(range(data.dims.N)):
        calL = riccati_step(calL, data.A[n], data.B[n], data.Q[n], data.R[n], data.S[n]).calL
        out.append(calL)
    return out[::-1]


def factor_sequence(data: OcpData, impl: str) -> list:
    """``calL_0 .. calL_N`` for the given implementation."""
    if impl == "blas_path":
        return _blas_recursion(data)
    if impl == "fused_native_path":
        return _native_recursion(data)
    if impl == "oracle":
        return [np.linalg.cholesky(P) for P in oracle_sequence(data)]
    raise ValueError(f"unknown implementation {impl!r}; expected one of {IMPLS}")


def residual(factors: list, Ps: list) -> float:
    """Max over stages of ``||calL calL^T - P||_F / ||P||_F``."""
    return max(np.linalg.norm(L @ L.T - P) / np.linalg.norm(P) for L, P in zip(factors, Ps))


class RiccatiRun(NamedTuple):
    seconds: float
    residual: float


def riccati_run(dims: OcpDims, impl: str = "blas_path", seed: int = 0) -> RiccatiRun:
    data = random_problem(dims, seed)
    t0 = time.perf_counter()
    factors = factor_sequence(data, impl)
    seconds = time.perf_counter() - t0
    return RiccatiRun(seconds, float(residual(factors, oracle_sequence(data))))
