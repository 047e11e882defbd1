"""Tile kernels assembled from inner sub-operations.

``KernelConfig`` fixes the tile shape and resolves the generated register
loops for it.  ``kernel_gemm`` is a Python-level entry point for one gemm tile
in any supported layout combination, mainly for tests and experiments; the
routines call the compiled kernels in :mod:`.compose` directly.
"""

from __future__ import annotations

import contextlib
import enum
import os
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .. import panel
from ..core import ArgumentError
from ..panel import PANEL_SIZES, PackStats
from ._codegen import TILE_SHAPES
from . import _inner, compose
from .subops import SHAPE_FULL, SHAPE_LOWER, SHAPE_UPPER


class LayoutTag(enum.Enum):
    P = "p"
    C = "c"


@dataclass(frozen=True)
class KernelConfig:
    """Tile shape: ``mr x nr`` accumulator, panel height ``ps`` (always ``nr``)."""

    mr: int = 8
    nr: int = 4
    ps: int = 4

    def __post_init__(self):
        if self.ps not in PANEL_SIZES:
            raise ArgumentError(3, f"panel size must be one of {PANEL_SIZES}")
        if self.nr != self.ps:
            raise ArgumentError(2, f"nr must equal ps ({self.ps}), got {self.nr}")
        if self.mr not in (self.ps, 2 * self.ps, 3 * self.ps):
            raise ArgumentError(1, f"mr must be 1, 2 or 3 times ps, got {self.mr}")

    @classmethod
    def for_ps(cls, ps: int) -> "KernelConfig":
        return cls(2 * ps, ps, ps)

    @classmethod
    def from_env(cls, environ=None) -> "KernelConfig":
        env = os.environ if environ is None else environ
        ps = int(env.get("PANELBLAS_PS", 4))
        mr = int(env.get("PANELBLAS_MR", 2 * ps))
        return cls(mr, ps, ps)

    def _loop(self, kind):
        # selector index understood by the generated ``_inner.<kind>`` loops
        return TILE_SHAPES.index((self.mr, self.nr))

    @property
    def nt_pp(self):
        return self._loop("nt_pp")

    @property
    def nt_pp_sub(self):
        return self._loop("nt_pp_sub")

    @property
    def nn_pp(self):
        return self._loop("nn_pp")

    @property
    def pc(self):
        return self._loop("pc")

    @property
    def cc(self):
        return self._loop("cc")

    def new_tile(self) -> np.ndarray:
        return np.zeros((self.mr, self.nr), order="F")


def new_tile(cfg: KernelConfig | None = None) -> np.ndarray:
    return (cfg or KernelConfig()).new_tile()


class PanelWin(NamedTuple):
    """Panel-major window: element (i, j) at ``off + (i//ps)*sd + j*ps + i%ps``."""

    data: np.ndarray
    off: int
    sd: int


class StridedWin(NamedTuple):
    """Strided window: element (i, j) at ``off + i*rs + j*cs``."""

    data: np.ndarray
    off: int
    rs: int
    cs: int


_SHAPES = {"full": SHAPE_FULL, "lower": SHAPE_LOWER, "upper": SHAPE_UPPER}


def kernel_gemm(layouts: str, inner: str, kmax: int, A, B, alpha: float, beta: float,
                C, D, ma: int, na: int, shape: str = "full", cfg: KernelConfig | None = None,
                stats: PackStats | None = None) -> np.ndarray:
    """One tile of ``D = alpha*A*op(B) + beta*C`` (``op`` given by ``inner``).

    ``layouts`` tags A, B and C/D: ``ppp``, ``ppc``, ``pcc`` or ``ccc``.  In
    the ``nt`` case B holds ``nr x kmax`` (rows of B^T); in ``nn`` it holds
    ``kmax x nr``.  For ``ppc``/``pcc``/``ccc`` C and D must be the same
    window.  Returns the final tile.
    """
    cfg = cfg or KernelConfig()
    stats = stats or PackStats()
    tile = cfg.new_tile()
    if inner not in ("nn", "nt"):
        raise ArgumentError(2, f"inner must be 'nn' or 'nt', got {inner!r}")
    if not (0 <= ma <= cfg.mr and 0 <= na <= cfg.nr):
        raise ArgumentError(10, "active tile size exceeds kernel tile")
    shp = _SHAPES[shape]
    raw = stats.raw
    if layouts == "ppp":
        if inner == "nt":
            compose.kernel_gemm_nt_ppp(cfg.nt_pp, kmax, alpha, A.data, A.off, A.sd, B.data, B.off,
                                       beta, C.data, C.off, C.sd, D.data, D.off, D.sd, ma, na,
                                       shp, 0, tile, raw)
        else:
            if shp != SHAPE_FULL:
                raise ArgumentError(12, "masked shapes need the nt kernel")
            compose.kernel_gemm_nn_ppp(cfg.nn_pp, kmax, alpha, A.data, A.off, A.sd, B.data, B.off,
                                       B.sd, beta, C.data, C.off, C.sd, D.data, D.off, D.sd, ma, na,
                                       tile, raw)
        return tile
    if not (C.data is D.data and C.off == D.off and C.rs == D.rs and C.cs == D.cs):
        raise ArgumentError(9, "column-major kernels update C in place (D must be C)")
    if layouts == "ppc":
        if inner != "nt":
            raise ArgumentError(2, "ppc is only available with the nt inner loop")
        compose.kernel_gemm_nt_ppc(cfg.nt_pp, kmax, alpha, A.data, A.off, A.sd, B.data, B.off, beta,
                                   C.data, C.off, C.rs, C.cs, ma, na, shp, 0, tile, raw)
    elif layouts == "pcc":
        sj, sl = (B.cs, B.rs) if inner == "nn" else (B.rs, B.cs)
        compose.kernel_gemm_pcc(cfg.pc, kmax, alpha, A.data, A.off, A.sd, B.data, B.off, sj, sl,
                                beta, C.data, C.off, C.rs, C.cs, ma, na, shp, 0, tile, raw)
    elif layouts == "ccc":
        if shp != SHAPE_FULL:
            raise ArgumentError(12, "ccc stores the full tile")
        sj, sl = (B.cs, B.rs) if inner == "nn" else (B.rs, B.cs)
        compose.kernel_gemm_ccc(cfg.cc, kmax, alpha, A.data, A.off, A.rs, A.cs, B.data, B.off,
                                sj, sl, beta, C.data, C.off, C.rs, C.cs, ma, na, tile, raw)
    else:
        raise ArgumentError(1, f"unsupported layout combination {layouts!r}")
    return tile


@contextlib.contextmanager
def mutation(enabled: bool = True):
    """Perturb every inner gemm result while active (negative control for ``verify``)."""
    old = panel._mutation["enabled"]
    panel._mutation["enabled"] = enabled
    try:
        yield
    finally:
        panel._mutation["enabled"] = old


__all__ = [
    "KernelConfig",
    "LayoutTag",
    "PanelWin",
    "StridedWin",
    "kernel_gemm",
    "mutation",
    "new_tile",
]
