"""Panel-major packed matrices and the pack/unpack routines.

Layout of a ``PanelMat`` with panel height ``ps``: rows are grouped into
panels of ``ps`` rows, each panel is stored column by column, and panels
follow each other.  Element (i, j) lives at::

    (i // ps) * ps * cn + j * ps + (i % ps)

with ``pm = ceil(m/ps)*ps`` padded rows and ``cn = ceil(n/ps)*ps`` padded
columns.  Padding is left uninitialised; kernels never let it reach a
stored result.  Buffers are allocated 64-byte aligned, but nothing relies on
the alignment.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import ArgumentError, ColMatView, TransOp

PANEL_SIZES = (4, 8)
ALIGNMENT = 64

# slots of the per-call counter array shared with the compiled loops
PACKED, SCRATCH_DYNAMIC, SCRATCH_BOUNDED, FLOPS, FAULT = range(5)

_mutation = {"enabled": False}


class PackStats:
    """Per-call counters: packed elements, scratch bytes, and kernel flops.

    The live values sit in a small int64 array (``raw``) that compiled loops
    update in place; a fresh instance is created for every routine call.
    """

    __slots__ = ("raw", "variant")

    def __init__(self, variant: str = ""):
        self.raw = np.zeros(5, dtype=np.int64)
        self.raw[FAULT] = 1 if _mutation["enabled"] else 0
        self.variant = variant

    @property
    def elements_packed(self) -> int:
        return int(self.raw[PACKED])

    @property
    def scratch_bytes_dynamic(self) -> int:
        return int(self.raw[SCRATCH_DYNAMIC])

    @property
    def scratch_bytes_bounded(self) -> int:
        return int(self.raw[SCRATCH_BOUNDED])

    @property
    def flops(self) -> int:
        return int(self.raw[FLOPS])

    def add_scratch(self, nbytes: int, bounded: bool):
        self.raw[SCRATCH_BOUNDED if bounded else SCRATCH_DYNAMIC] += nbytes

    def as_dict(self) -> dict:
        return {
            "variant": self.variant,
            "elements_packed": self.elements_packed,
            "scratch_bytes_dynamic": self.scratch_bytes_dynamic,
            "scratch_bytes_bounded": self.scratch_bytes_bounded,
            "flops": self.flops,
        }

    def __repr__(self):
        fields = ", ".join(f"{k}={v!r}" for k, v in self.as_dict().items())
        return f"PackStats({fields})"


def _ceil_to(x: int, q: int) -> int:
    return -(-x // q) * q


def _check_ps(ps: int):
    if ps not in PANEL_SIZES:
        raise ArgumentError(3, f"panel size must be one of {PANEL_SIZES}, got {ps}")


def aligned_empty(n: int, align: int = ALIGNMENT) -> np.ndarray:
    raw = np.empty(n + align // 8)
    shift = (-raw.ctypes.data % align) // 8
    return raw[shift: shift + n]


def memsize(m: int, n: int, ps: int = 4) -> int:
    """Bytes needed by an ``m x n`` panel-major matrix (buffer start should be 64-byte aligned)."""
    _check_ps(ps)
    if m == 0 or n == 0:
        return 0
    return _ceil_to(m, ps) * _ceil_to(n, ps) * 8


@dataclass
class PanelMat:
    m: int
    n: int
    ps: int
    data: np.ndarray

    @property
    def pm(self) -> int:
        return _ceil_to(self.m, self.ps)

    @property
    def cn(self) -> int:
        return _ceil_to(self.n, self.ps)

    @property
    def sd(self) -> int:
        """Distance between consecutive panels."""
        return self.ps * self.cn

    @classmethod
    def empty(cls, m: int, n: int, ps: int = 4) -> "PanelMat":
        _check_ps(ps)
        return cls(m, n, ps, aligned_empty(memsize(m, n, ps) // 8))

    @classmethod
    def zeros(cls, m: int, n: int, ps: int = 4) -> "PanelMat":
        pmat = cls.empty(m, n, ps)
        pmat.data[:] = 0.0
        return pmat

    @classmethod
    def from_array(cls, a, ps: int = 4) -> "PanelMat":
        src = ColMatView.from_array(a)
        out = cls.empty(src.m, src.n, ps)
        pack_from_colmajor(src, out)
        return out

    def offset(self, i: int, j: int) -> int:
        ps = self.ps
        return (i // ps) * ps * self.cn + j * ps + (i % ps)

    def row_offset(self, i: int) -> int:
        """Offset of element (i, 0); ``i`` must be a multiple of ``ps``."""
        return (i // self.ps) * self.sd

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise IndexError((i, j))
        return self.data[self.offset(i, j)]

    def __setitem__(self, ij, value):
        i, j = ij
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise IndexError((i, j))
        self.data[self.offset(i, j)] = value

    def to_array(self) -> np.ndarray:
        out = ColMatView.from_array(np.zeros((self.m, self.n)))
        unpack_to_colmajor(self, out)
        return out.to_array()

    def block(self, i: int, j: int, m: int, n: int) -> "PanelMat":
        """Copy of the ``m x n`` sub-matrix at (i, j) as a fresh panel matrix."""
        if i < 0 or j < 0 or m < 0 or n < 0 or i + m > self.m or j + n > self.n:
            raise IndexError("block out of range")
        out = PanelMat.empty(m, n, self.ps)
        if m and n:
            _copy_pp(m, n, self.data, i, j, self.sd, out.data, out.sd, self.ps)
        return out


@njit(cache=True)
def _copy_pp(m, n, src, i0, j0, ssd, dst, dsd, ps):
    for j in range(n):
        for i in range(m):
            si, sj = i0 + i, j0 + j
            dst[(i // ps) * dsd + j * ps + i % ps] = src[(si // ps) * ssd + sj * ps + si % ps]


@njit(cache=True)
def pack_strided(m, n, src, soff, srs, scs, dst, doff, sd, ps, stats):
    """Copy the strided ``m x n`` source into a panel window starting at a panel boundary."""
    for i0 in range(0, m, ps):
        base = doff + (i0 // ps) * sd
        h = min(ps, m - i0)
        for j in range(n):
            s = soff + i0 * srs + j * scs
            d = base + j * ps
            for ii in range(h):
                dst[d + ii] = src[s + ii * srs]
    stats[PACKED] += m * n


@njit(cache=True)
def unpack_strided(m, n, src, soff, sd, ps, dst, doff, drs, dcs, stats):
    for i0 in range(0, m, ps):
        base = soff + (i0 // ps) * sd
        h = min(ps, m - i0)
        for j in range(n):
            s = base + j * ps
            d = doff + i0 * drs + j * dcs
            for ii in range(h):
                dst[d + ii * drs] = src[s + ii]
    stats[PACKED] += m * n


def _stats(stats):
    return PackStats() if stats is None else stats


def pack_from_colmajor(src: ColMatView, dst: PanelMat, transpose=TransOp.NoTrans, stats=None):
    """Pack ``src`` (or its transpose) into ``dst``."""
    transpose = TransOp.parse(transpose, 3)
    stats = _stats(stats)
    if transpose is TransOp.NoTrans:
        m, n, rs, cs = src.m, src.n, 1, src.ld
    else:
        m, n, rs, cs = src.n, src.m, src.ld, 1
    if (dst.m, dst.n) != (m, n):
        raise ArgumentError(2, f"destination is {dst.m}x{dst.n}, source gives {m}x{n}")
    if m and n:
        pack_strided(m, n, src.data, 0, rs, cs, dst.data, 0, dst.sd, dst.ps, stats.raw)
    return stats


def unpack_to_colmajor(src: PanelMat, dst: ColMatView, stats=None):
    """Inverse of :func:`pack_from_colmajor` without transposition."""
    stats = _stats(stats)
    if (dst.m, dst.n) != (src.m, src.n):
        raise ArgumentError(2, f"destination is {dst.m}x{dst.n}, source is {src.m}x{src.n}")
    if not dst.writable:
        raise ArgumentError(2, "destination view is read-only")
    if src.m and src.n:
        unpack_strided(src.m, src.n, src.data, 0, src.sd, src.ps, dst.data, 0, 1, dst.ld, stats.raw)
    return stats


def pack_row_block(src: ColMatView, i0: int, mr: int, k: int, dst: np.ndarray,
                   transpose=TransOp.NoTrans, ps: int = 4, stats=None):
    """Pack rows ``i0 .. i0+mr`` and columns ``0 .. k`` of ``op(src)`` into ``dst``.

    ``dst`` is a flat buffer holding consecutive panels of height ``ps`` and
    ``k`` columns (panel stride ``ps*k``).  Rows past the end of ``op(src)``
    are skipped; their padding slots keep whatever ``dst`` held.
    """
    transpose = TransOp.parse(transpose, 6)
    _check_ps(ps)
    stats = _stats(stats)
    if transpose is TransOp.NoTrans:
        rows, cols, rs, cs = src.m, src.n, 1, src.ld
    else:
        rows, cols, rs, cs = src.n, src.m, src.ld, 1
    if mr < 0 or mr > 3 * ps:
        raise ArgumentError(3, f"block height {mr} outside [0, {3 * ps}]")
    if i0 < 0 or i0 >= max(rows, 1) or k < 0 or k > cols:
        raise ArgumentError(2, "block out of range")
    h = min(mr, rows - i0)
    if dst.size < _ceil_to(mr, ps) * k:
        raise ArgumentError(5, "destination buffer too small")
    if h > 0 and k > 0:
        pack_strided(h, k, src.data, i0 * rs, rs, cs, dst, 0, ps * k, ps, stats.raw)
    return stats
