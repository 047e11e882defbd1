"""Panel-major dense linear algebra with a netlib-shaped BLAS/LAPACK subset."""

from .blas import BlasCallError, dgemm, dgetrf, dpotrf, dsyrk, dtrmm, dtrsm, set_abort_on_error
from .core import (
    ArgumentError,
    ColMatView,
    DiagKind,
    NotPositiveDefiniteError,
    Side,
    SingularMatrixError,
    TransOp,
    Uplo,
)
from .engine import EngineConfig, GemmVariant, gemm, select_variant
from .factor import FactorInfo, getrf, potrf
from .kernels import KernelConfig
from .level3 import gemm_nd, syrk, syrk_nd, syrk_potrf_nd, trmm, trsm, trsm_nd
from .panel import PackStats, PanelMat, pack_from_colmajor, unpack_to_colmajor

__version__ = "0.1.0"

__all__ = [
    "ArgumentError", "BlasCallError", "ColMatView", "DiagKind", "EngineConfig", "FactorInfo",
    "GemmVariant", "KernelConfig", "NotPositiveDefiniteError", "PackStats", "PanelMat", "Side",
    "SingularMatrixError", "TransOp", "Uplo", "dgemm", "dgetrf", "dpotrf", "dsyrk", "dtrmm", "dtrsm",
    "gemm", "gemm_nd", "getrf", "pack_from_colmajor", "potrf", "select_variant", "set_abort_on_error",
    "syrk", "syrk_nd", "syrk_potrf_nd", "trmm", "trsm", "trsm_nd", "unpack_to_colmajor",
]
