"""Size sweeps with Gflops, packing counters and a stable CSV schema."""

from __future__ import annotations

import csv
import io
import platform
import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from . import blas, factor
from .core import ColMatView

ROUTINES = ("dgemm", "dsyrk", "dtrmm", "dtrsm", "dpotrf", "dgetrf")
FLAG_LENGTH = {"dgemm": 2, "dsyrk": 2, "dtrmm": 4, "dtrsm": 4, "dpotrf": 1, "dgetrf": 0}
DEFAULT_FLAGS = {"dgemm": "nn", "dsyrk": "ln", "dtrmm": "rlnn", "dtrsm": "rltu", "dpotrf": "l", "dgetrf": ""}
SHAPES = ("square", "m4", "n4", "k4")
CSV_FIELDS = ("routine", "flags", "m", "n", "k", "variant", "median_seconds", "gflops", "elements_packed")
_FLAG_ALPHABET = {
    "dgemm": ("nt", "nt"),
    "dsyrk": ("ul", "nt"),
    "dtrmm": ("lr", "ul", "nt", "nu"),
    "dtrsm": ("lr", "ul", "nt", "nu"),
    "dpotrf": ("ul",),
    "dgetrf": (),
}


class UsageError(ValueError):
    """Bad routine, flags or sweep parameters (CLI exit status 2)."""


def check_flags(routine: str, flags: str) -> str:
    if routine not in ROUTINES:
        raise UsageError(f"unknown routine {routine!r}; expected one of {', '.join(ROUTINES)}")
    flags = flags.lower()
    alphabet = _FLAG_ALPHABET[routine]
    if len(flags) != len(alphabet) or any(f not in a for f, a in zip(flags, alphabet)):
        raise UsageError(f"bad flags {flags!r} for {routine}")
    return flags


def flops_model(routine: str, flags: str, m: int, n: int, k: int) -> float:
    """Flop counts: gemm 2mnk, syrk n^2 k, trmm/trsm m^2 n (left) or m n^2 (right),
    potrf n^3/3, getrf mn^2 - n^3/3 for m >= n (2n^3/3 when square)."""
    if routine == "dgemm":
        return 2.0 * m * n * k
    if routine == "dsyrk":
        return float(n) * n * k
    if routine in ("dtrmm", "dtrsm"):
        return float(m) * m * n if flags[0] == "l" else float(m) * n * n
    if routine == "dpotrf":
        return n ** 3 / 3.0
    if routine == "dgetrf":
        big, small = max(m, n), min(m, n)
        return float(big) * small * small - small ** 3 / 3.0
    raise UsageError(f"unknown routine {routine!r}")


def gflops(flops: float, seconds: float) -> float:
    return flops / seconds / 1e9


@dataclass(frozen=True)
class SweepSpec:
    routine: str = "dgemm"
    flags: str = ""
    shape: str = "square"
    start: int = 4
    stop: int = 300
    step: int = 4
    reps: int = 5
    variant: str | None = None
    warm: bool = True
    seed: int = 0
    triples: tuple = field(default=())

    def __post_init__(self):
        flags = self.flags if self.flags else DEFAULT_FLAGS.get(self.routine, "")
        object.__setattr__(self, "flags", check_flags(self.routine, flags))
        if self.shape not in SHAPES + ("custom",):
            raise UsageError(f"unknown shape rule {self.shape!r}")
        if self.reps < 1:
            raise UsageError("reps must be at least 1")
        if not self.triples and (self.start < 1 or self.stop < self.start or self.step < 1):
            raise UsageError("sizes must satisfy 1 <= start <= stop and step >= 1")
        if self.variant is not None and self.routine not in ("dgemm", "dsyrk"):
            raise UsageError("only dgemm and dsyrk take a forced variant")

    def shapes(self):
        if self.triples:
            return [tuple(t) for t in self.triples]
        out = []
        for s in range(self.start, self.stop + 1, self.step):
            out.append({"square": (s, s, s), "m4": (4, s, s), "n4": (s, 4, s), "k4": (s, s, 4)}[self.shape])
        return out


@dataclass(frozen=True)
class BenchRecord:
    routine: str
    flags: str
    m: int
    n: int
    k: int
    variant: str
    median_seconds: float
    gflops: float
    elements_packed: int

    def row(self):
        return [self.routine, self.flags, self.m, self.n, self.k, self.variant,
                repr(self.median_seconds), repr(self.gflops), self.elements_packed]


def _well_conditioned_tri(rng, n):
    a = rng.uniform(-1, 1, (n, n)) / max(n, 1)
    a[np.diag_indices(n)] = rng.uniform(1, 2, n)
    return np.asfortranarray(a)


def make_call(routine: str, flags: str, m: int, n: int, k: int, rng, variant=None):
    """Returns ``(reset, call)``: ``reset`` restores the inputs, ``call`` runs once and returns PackStats."""
    f = flags
    if routine == "dgemm":
        a = np.asfortranarray(rng.uniform(-1, 1, (m, k) if f[0] == "n" else (k, m)))
        b = np.asfortranarray(rng.uniform(-1, 1, (k, n) if f[1] == "n" else (n, k)))
        c0 = np.asfortranarray(rng.uniform(-1, 1, (m, n)))
        c = c0.copy(order="F")
        call = lambda: blas.dgemm(f[0], f[1], m, n, k, 1.0, a, a.shape[0], b, b.shape[0], 1.0, c, m,
                                  variant=variant)
        return (lambda: np.copyto(c, c0)), call
    if routine == "dsyrk":
        a = np.asfortranarray(rng.uniform(-1, 1, (n, k) if f[1] == "n" else (k, n)))
        c0 = np.asfortranarray(rng.uniform(-1, 1, (n, n)))
        c = c0.copy(order="F")
        call = lambda: blas.dsyrk(f[0], f[1], n, k, 1.0, a, a.shape[0], 1.0, c, n, variant=variant)
        return (lambda: np.copyto(c, c0)), call
    if routine in ("dtrmm", "dtrsm"):
        na = m if f[0] == "l" else n
        a = _well_conditioned_tri(rng, na)
        b0 = np.asfortranarray(rng.uniform(-1, 1, (m, n)))
        b = b0.copy(order="F")
        fn = getattr(blas, routine)
        call = lambda: fn(f[0], f[1], f[2], f[3], m, n, 1.0, a, na, b, m)
        return (lambda: np.copyto(b, b0)), call
    if routine == "dpotrf":
        M = rng.uniform(-1, 1, (n, n))
        a0 = np.asfortranarray(M @ M.T + n * np.eye(n))
        a = a0.copy(order="F")
        view = ColMatView(a.reshape(-1, order="F"), n, n, n)
        return (lambda: np.copyto(a, a0)), (lambda: factor.potrf(f[0], n, view).stats)
    if routine == "dgetrf":
        a0 = np.asfortranarray(rng.uniform(-1, 1, (m, n)))
        a = a0.copy(order="F")
        view = ColMatView(a.reshape(-1, order="F"), m, n, m)
        return (lambda: np.copyto(a, a0)), (lambda: factor.getrf(m, n, view)[1].stats)
    raise UsageError(f"unknown routine {routine!r}")


def _dims(routine, m, n, k):
    # syrk and potrf are n x n; syrk uses k as the inner size
    if routine == "dsyrk":
        return n, n, k
    if routine == "dpotrf":
        return n, n, n
    if routine in ("dtrmm", "dtrsm", "dgetrf"):
        return m, n, 0
    return m, n, k


def time_call(reset, call, reps: int, warm: bool = True):
    """Median wall time over ``reps`` runs (monotonic clock) and the last call's stats."""
    if warm:
        reset()
        call()
    times, stats = [], None
    for _ in range(reps):
        reset()
        t0 = time.perf_counter()
        stats = call()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), stats


def run_sweep(spec: SweepSpec):
    """One BenchRecord per size of the sweep."""
    rng = np.random.default_rng(spec.seed)
    records = []
    for m, n, k in spec.shapes():
        m, n, k = _dims(spec.routine, m, n, k)
        reset, call = make_call(spec.routine, spec.flags, m, n, k, rng, spec.variant)
        seconds, stats = time_call(reset, call, spec.reps, spec.warm)
        fl = flops_model(spec.routine, spec.flags, m, n, k)
        records.append(BenchRecord(spec.routine, spec.flags, m, n, k, stats.variant or "-", seconds,
                                   gflops(fl, seconds), stats.elements_packed))
    return records


def metadata_line(spec: SweepSpec) -> str:
    return (f"# panelblas sweep routine={spec.routine} flags={spec.flags} shape={spec.shape} "
            f"reps={spec.reps} warm={int(spec.warm)} variant={spec.variant or 'auto'} seed={spec.seed} "
            f"python={platform.python_version()} numpy={np.__version__}")


def write_csv(records, out, spec: SweepSpec | None = None):
    if spec is not None:
        out.write(metadata_line(spec) + "\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow(r.row())


def read_csv(text: str):
    """Parse CSV produced by :func:`write_csv` back into BenchRecords."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.DictReader(io.StringIO("\n".join(lines)))
    if tuple(reader.fieldnames or ()) != CSV_FIELDS:
        raise ValueError(f"unexpected header {reader.fieldnames}")
    return [
        BenchRecord(r["routine"], r["flags"], int(r["m"]), int(r["n"]), int(r["k"]), r["variant"],
                    float(r["median_seconds"]), float(r["gflops"]), int(r["elements_packed"]))
        for r in reader
    ]
