"""Differential suite: fast routines against the naive reference implementations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import blas, reference

TOL = 1e-13
FACTOR_TOL = 1e-12
ROUTINES = ("dgemm", "dsyrk", "dtrmm", "dtrsm", "dpotrf", "dgetrf")


def cases(routine: str):
    """Flag strings exercised per routine: 4 + 4 + 16 + 16 + 2 + 1."""
    if routine == "dgemm":
        return ["".join(p) for p in itertools.product("nt", "nt")]
    if routine == "dsyrk":
        return ["".join(p) for p in itertools.product("ul", "nt")]
    if routine in ("dtrmm", "dtrsm"):
        return ["".join(p) for p in itertools.product("lr", "ul", "nt", "nu")]
    if routine == "dpotrf":
        return ["l", "u"]
    if routine == "dgetrf":
        return [""]
    raise ValueError(f"unknown routine {routine!r}")


def rel_error(x, ref) -> float:
    """``max|x - ref| / max|ref|`` (absolute when ref is zero)."""
    scale = np.max(np.abs(ref)) if ref.size else 0.0
    err = np.max(np.abs(x - ref)) if ref.size else 0.0
    return float(err / scale) if scale > 0 else float(err)


def _padded(rng, rows, cols):
    """Random column-major buffer with a random leading-dimension pad."""
    ld = max(1, rows) + int(rng.integers(0, 4))
    full = rng.uniform(-1, 1, (ld, cols))
    return full, ld


def _tri(rng, n, ld):
    a = rng.uniform(-1, 1, (ld, n)) / max(n, 1)
    idx = np.arange(n)
    a[idx, idx] = rng.choice([-1.0, 1.0], n) * rng.uniform(1, 2, n)
    return a


def _flat(a):
    return a.flatten(order="F")


def _check_gemm(rng, flags, max_dim):
    m, n, k = (int(x) for x in rng.integers(1, max_dim + 1, 3))
    ra, ca = (m, k) if flags[0] == "n" else (k, m)
    rb, cb = (k, n) if flags[1] == "n" else (n, k)
    A, lda = _padded(rng, ra, ca)
    B, ldb = _padded(rng, rb, cb)
    C, ldc = _padded(rng, m, n)
    alpha, beta = rng.uniform(-2, 2, 2)
    a, b, c, cref = _flat(A), _flat(B), _flat(C), _flat(C)
    blas.dgemm(flags[0], flags[1], m, n, k, alpha, a, lda, b, ldb, beta, c, ldc)
    reference.naive_gemm(flags[0], flags[1], m, n, k, alpha, a, lda, b, ldb, beta, cref, ldc)
    return rel_error(c, cref), (m, n, k)


def _check_syrk(rng, flags, max_dim):
    n, k = (int(x) for x in rng.integers(1, max_dim + 1, 2))
    ra, ca = (n, k) if flags[1] == "n" else (k, n)
    A, lda = _padded(rng, ra, ca)
    C, ldc = _padded(rng, n, n)
    alpha, beta = rng.uniform(-2, 2, 2)
    a, c, cref = _flat(A), _flat(C), _flat(C)
    blas.dsyrk(flags[0], flags[1], n, k, alpha, a, lda, beta, c, ldc)
    reference.naive_syrk(flags[0], flags[1], n, k, alpha, a, lda, beta, cref, ldc)
    return rel_error(c, cref), (n, n, k)


def _check_tri(routine, rng, flags, max_dim):
    m, n = (int(x) for x in rng.integers(1, max_dim + 1, 2))
    na = m if flags[0] == "l" else n
    lda = na + int(rng.integers(0, 4))
    A = _tri(rng, na, lda)
    B, ldb = _padded(rng, m, n)
    alpha = float(rng.uniform(-2, 2))
    a, b, bref = _flat(A), _flat(B), _flat(B)
    getattr(blas, routine)(*flags, m, n, alpha, a, lda, b, ldb)
    getattr(reference, "naive_" + routine[1:])(*flags, m, n, alpha, a, lda, bref, ldb)
    return rel_error(b, bref), (m, n, 0)


def _check_potrf(rng, flags, max_dim):
    n = int(rng.integers(1, max_dim + 1))
    M = rng.uniform(-1, 1, (n, n))
    S = M @ M.T + n * np.eye(n)
    lda = n + int(rng.integers(0, 4))
    A = np.zeros((lda, n))
    A[:n] = S
    a, aref = _flat(A), _flat(A)
    info = blas.dpotrf(flags, n, a, lda)
    info_ref = reference.naive_potrf(flags, n, aref, lda)
    if info != info_ref:
        return np.inf, (n, n, n)
    F = a.reshape(lda, n, order="F")[:n]
    L = np.tril(F) if flags == "l" else np.triu(F).T
    return np.linalg.norm(L @ L.T - S) / np.linalg.norm(S) * (TOL / FACTOR_TOL), (n, n, n)


def _check_getrf(rng, flags, max_dim):
    m, n = (int(x) for x in rng.integers(1, max_dim + 1, 2))
    S, lda = _padded(rng, m, n)
    a, aref = _flat(S), _flat(S)
    ipiv, info = blas.dgetrf(m, n, a, lda)
    _, info_ref = reference.naive_getrf(m, n, aref, lda)
    if info != info_ref:
        return np.inf, (m, n, 0)
    F = a.reshape(lda, n, order="F")[:m]
    r = min(m, n)
    L = np.tril(F[:, :r], -1) + np.eye(m, r)
    U = np.triu(F[:r, :])
    PA = S[:m].copy()
    for i, p in enumerate(ipiv):
        PA[[i, p - 1]] = PA[[p - 1, i]]
    return np.linalg.norm(L @ U - PA) / np.linalg.norm(S[:m]) * (TOL / FACTOR_TOL), (m, n, 0)


def check_one(routine, rng, flags, max_dim=96):
    """Returns ``(scaled_error, shape)``; the case passes when scaled_error <= TOL.

    Factorizations report their reconstruction residual rescaled so the
    ``FACTOR_TOL * ||A||_F`` bound maps onto ``TOL``.
    """
    if routine == "dgemm":
        return _check_gemm(rng, flags, max_dim)
    if routine == "dsyrk":
        return _check_syrk(rng, flags, max_dim)
    if routine in ("dtrmm", "dtrsm"):
        return _check_tri(routine, rng, flags, max_dim)
    if routine == "dpotrf":
        return _check_potrf(rng, flags, max_dim)
    if routine == "dgetrf":
        return _check_getrf(rng, flags, max_dim)
    raise ValueError(f"unknown routine {routine!r}")


@dataclass
class CaseResult:
    routine: str
    flags: str
    count: int
    worst: float
    worst_shape: tuple | None

    @property
    def passed(self) -> bool:
        return self.worst <= TOL


@dataclass
class VerifyReport:
    seed: int
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self):
        for r in self.results:
            tag = "PASS" if r.passed else "FAIL"
            yield f"{tag} {r.routine} {r.flags or '-'} n={r.count} worst={r.worst:.3e} at {r.worst_shape}"
        yield f"{'PASS' if self.passed else 'FAIL'} overall seed={self.seed}"


def verify(routines=ROUTINES, seed: int = 0, count: int = 20, max_dim: int = 96,
           mutate: bool = False) -> VerifyReport:
    """Run ``count`` random instances of every flag case of each routine."""
    from .kernels import mutation

    unknown = [r for r in routines if r not in ROUTINES]
    if unknown:
        raise ValueError(f"unknown routine(s) {unknown}")
    rng = np.random.default_rng(seed)
    report = VerifyReport(seed)
    with mutation(mutate):
        for routine in routines:
            for flags in cases(routine):
                worst, where = 0.0, None
                for _ in range(count):
                    err, shape = check_one(routine, rng, flags, max_dim)
                    if not err <= worst:
                        worst, where = err, shape
                report.results.append(CaseResult(routine, flags, count, worst, where))
    return report
