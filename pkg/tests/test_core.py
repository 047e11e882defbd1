import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from panelblas.core import (
    ArgumentError,
    ColMatView,
    DiagKind,
    Side,
    TransOp,
    Uplo,
    make_view,
    required_length,
    transpose_copy,
)


def test_make_view_offset():
    v = make_view(np.arange(6.0), 2, 3, 2)
    assert v[1, 2] == 5.0
    assert v.offset(1, 2) == 5


def test_make_view_empty():
    v = make_view(np.zeros(0), 0, 0, 1)
    assert (v.m, v.n) == (0, 0)
    assert v.to_array().shape == (0, 0)


def test_make_view_ld_too_small():
    with pytest.raises(ArgumentError) as e:
        make_view(np.zeros(10), 3, 2, 2)
    assert e.value.index == 4


def test_make_view_short_buffer():
    with pytest.raises(ArgumentError) as e:
        make_view(np.zeros(4), 3, 2, 3)
    assert e.value.index == 1


def test_make_view_shares_storage():
    buf = np.zeros(4)
    v = make_view(buf, 2, 2, 2)
    v[1, 1] = 3.0
    assert buf[3] == 3.0


def test_readonly_view_rejects_writes():
    v = make_view(np.zeros(4), 2, 2, 2).readonly()
    with pytest.raises(ValueError):
        v[0, 0] = 1.0


def test_transpose_copy_2x2():
    v = make_view(np.array([1.0, 3.0, 2.0, 4.0]), 2, 2, 2)
    t = transpose_copy(v)
    np.testing.assert_array_equal(t.to_array(), [[1.0, 3.0], [2.0, 4.0]])


def test_transpose_copy_scalar():
    t = transpose_copy(make_view(np.array([5.0]), 1, 1, 1))
    assert t.to_array().tolist() == [[5.0]]


def test_transpose_copy_twice(rng):
    v = ColMatView.from_array(rng.uniform(-1, 1, (3, 5)), ld=4)
    back = transpose_copy(transpose_copy(v))
    np.testing.assert_array_equal(back.to_array(), v.to_array())


@given(st.integers(0, 9), st.integers(0, 9), st.integers(0, 4))
def test_view_offsets_distinct_and_in_bounds(m, n, pad):
    ld = max(1, m) + pad
    v = make_view(np.zeros(required_length(m, n, ld)), m, n, ld)
    offs = {v.offset(i, j) for i in range(m) for j in range(n)}
    assert len(offs) == m * n
    assert all(0 <= o < max(required_length(m, n, ld), 1) for o in offs)


@given(st.integers(1, 8), st.integers(1, 8), st.integers(0, 3), st.integers(0, 2**31))
def test_transpose_involution_bit_exact(m, n, pad, seed):
    a = np.random.default_rng(seed).standard_normal((m, n))
    v = ColMatView.from_array(a, ld=m + pad)
    assert transpose_copy(transpose_copy(v)).to_array().tobytes() == a.tobytes()


@pytest.mark.parametrize(
    "cls,char,member",
    [
        (TransOp, "n", TransOp.NoTrans),
        (TransOp, "T", TransOp.Trans),
        (TransOp, "c", TransOp.Trans),
        (Side, "l", Side.Left),
        (Side, "R", Side.Right),
        (Uplo, "u", Uplo.Upper),
        (Uplo, "L", Uplo.Lower),
        (DiagKind, "u", DiagKind.Unit),
        (DiagKind, "N", DiagKind.NonUnit),
    ],
)
def test_flag_parsing(cls, char, member):
    assert cls.parse(char) is member


@pytest.mark.parametrize("bad", ["x", "", "NN", None, 1])
def test_flag_parsing_rejects(bad):
    with pytest.raises(ArgumentError) as e:
        TransOp.parse(bad, 7)
    assert e.value.index == 7
