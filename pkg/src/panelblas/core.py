"""Column-major matrix views and the flag enumerations shared by every routine."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class ArgumentError(ValueError):
    """Invalid argument, tagged with its 1-based position (xerbla style)."""

    def __init__(self, index: int, message: str):
        super().__init__(f"argument {index}: {message}")
        self.index = index
        self.message = message


class SingularMatrixError(ArithmeticError):
    """Exact zero on the diagonal of a triangular factor (1-based index)."""

    def __init__(self, index: int):
        super().__init__(f"triangular matrix is singular: zero diagonal at {index}")
        self.index = index


class NotPositiveDefiniteError(ArithmeticError):
    """Cholesky pivot ``index`` (1-based) was not positive."""

    def __init__(self, index: int, context: str = ""):
        msg = f"matrix is not positive definite: pivot {index} failed"
        super().__init__(f"{msg} ({context})" if context else msg)
        self.index = index


class _Flag(enum.Enum):
    @classmethod
    def parse(cls, value, index: int = 0):
        if isinstance(value, cls):
            return value
        if isinstance(value, str) and len(value) == 1:
            key = value.upper()
            for member in cls:
                if key in member.value:
                    return member
        raise ArgumentError(index, f"invalid {cls.__name__} flag {value!r}")

    @property
    def char(self) -> str:
        return self.value[0]


class TransOp(_Flag):
    # 'C' is accepted as an alias of 'T' for real data, as in reference BLAS
    NoTrans = "N"
    Trans = "TC"


class Side(_Flag):
    Left = "L"
    Right = "R"


class Uplo(_Flag):
    Upper = "U"
    Lower = "L"


class DiagKind(_Flag):
    Unit = "U"
    NonUnit = "N"


@dataclass(frozen=True)
class ColMatView:
    """An ``m x n`` window over a flat float64 buffer; (i, j) lives at ``i + j*ld``.

    Views never own storage.  Sub-windows are views of sliced buffers, so no
    offset field is needed.
    """

    data: np.ndarray
    m: int
    n: int
    ld: int
    writable: bool = True

    def offset(self, i: int, j: int) -> int:
        return i + j * self.ld

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise IndexError((i, j))
        return self.data[i + j * self.ld]

    def __setitem__(self, ij, value):
        if not self.writable:
            raise ValueError("view is read-only")
        i, j = ij
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise IndexError((i, j))
        self.data[i + j * self.ld] = value

    def window(self, i: int, j: int, m: int, n: int) -> "ColMatView":
        if i < 0 or j < 0 or m < 0 or n < 0 or i + m > self.m or j + n > self.n:
            raise IndexError("window out of range")
        start = i + j * self.ld if m and n else 0
        return ColMatView(self.data[start:], m, n, self.ld, self.writable)

    def readonly(self) -> "ColMatView":
        return ColMatView(self.data, self.m, self.n, self.ld, False)

    def to_array(self) -> np.ndarray:
        """Dense ``(m, n)`` copy."""
        out = np.empty((self.m, self.n))
        for j in range(self.n):
            out[:, j] = self.data[j * self.ld: j * self.ld + self.m]
        return out

    @classmethod
    def from_array(cls, a, ld: int | None = None) -> "ColMatView":
        """Copy a 2-D array into fresh column-major storage (optionally padded ``ld``)."""
        a = np.asarray(a, dtype=np.float64)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        m, n = a.shape
        ld = max(1, m) if ld is None else ld
        if ld < max(1, m):
            raise ArgumentError(2, f"ld={ld} < max(1, m={m})")
        buf = np.zeros(required_length(m, n, ld))
        for j in range(n):
            buf[j * ld: j * ld + m] = a[:, j]
        return cls(buf, m, n, ld)


def required_length(m: int, n: int, ld: int) -> int:
    if m == 0 or n == 0:
        return 0
    return ld * (n - 1) + m


def as_buffer(buffer) -> np.ndarray:
    """Flat float64 view of ``buffer``; 2-D Fortran arrays are flattened without copying."""
    buf = np.asarray(buffer)
    if buf.dtype != np.float64:
        raise TypeError(f"expected float64 data, got {buf.dtype}")
    if buf.ndim == 1:
        return buf
    if buf.flags.f_contiguous:
        return buf.reshape(-1, order="F")
    raise ValueError("matrix buffers must be 1-D or Fortran-contiguous")


def make_view(buffer, m: int, n: int, ld: int, writable: bool = True) -> ColMatView:
    """Wrap ``buffer`` as an ``m x n`` column-major view with leading dimension ``ld``."""
    buf = as_buffer(buffer)
    if m < 0:
        raise ArgumentError(2, f"m={m} < 0")
    if n < 0:
        raise ArgumentError(3, f"n={n} < 0")
    if ld < max(1, m):
        raise ArgumentError(4, f"ld={ld} < max(1, m={m})")
    if buf.size < required_length(m, n, ld):
        raise ArgumentError(1, f"buffer holds {buf.size} elements, needs {required_length(m, n, ld)}")
    return ColMatView(buf, m, n, ld, writable)


def transpose_copy(src: ColMatView) -> ColMatView:
    """Fresh ``n x m`` view holding the transpose of ``src``."""
    m, n = src.m, src.n
    ld = max(1, n)
    out = np.empty(required_length(n, m, ld))
    for j in range(n):
        out[j: j + ld * m: ld][:m] = src.data[j * src.ld: j * src.ld + m]
    return ColMatView(out, n, m, ld)
