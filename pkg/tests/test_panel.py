import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from panelblas.core import ArgumentError, ColMatView, TransOp, transpose_copy
from panelblas.panel import (
    PackStats,
    PanelMat,
    memsize,
    pack_from_colmajor,
    pack_row_block,
    unpack_to_colmajor,
)


@pytest.mark.parametrize("m,n,ps,expected", [(10, 10, 4, 1152), (0, 5, 4, 0), (300, 300, 4, 720000),
                                             (10, 10, 8, 2048)])
def test_memsize(m, n, ps, expected):
    assert memsize(m, n, ps) == expected


def test_memsize_rejects_bad_ps():
    with pytest.raises(ArgumentError):
        memsize(4, 4, 6)


def test_panel_buffer_aligned():
    p = PanelMat.empty(13, 7)
    assert p.data.ctypes.data % 64 == 0


@given(st.integers(0, 17), st.integers(0, 17), st.sampled_from([4, 8]))
def test_offset_map_is_a_permutation(m, n, ps):
    p = PanelMat.empty(m, n, ps)
    offs = sorted(p.offset(i, j) for i in range(p.pm) for j in range(p.cn))
    assert offs == list(range(p.pm * p.cn))


def test_offset_formula():
    p = PanelMat.empty(9, 6, 4)
    assert (p.pm, p.cn, p.sd) == (12, 8, 32)
    assert p.offset(5, 3) == 1 * 4 * 8 + 3 * 4 + 1


def test_pack_scalar():
    p = PanelMat.empty(1, 1)
    stats = pack_from_colmajor(ColMatView.from_array([[7.0]]), p)
    assert p.data[0] == 7.0
    assert stats.elements_packed == 1


def test_pack_unpack_round_trip(rng):
    a = rng.uniform(-1, 1, (7, 9))
    src = ColMatView.from_array(a, ld=10)
    p = PanelMat.empty(7, 9)
    pack_from_colmajor(src, p)
    dst = ColMatView.from_array(np.zeros((7, 9)))
    unpack_to_colmajor(p, dst)
    assert dst.to_array().tobytes() == a.tobytes()


def test_pack_transposed_matches_transpose_copy(rng):
    src = ColMatView.from_array(rng.uniform(-1, 1, (2, 3)))
    p = PanelMat.empty(3, 2)
    pack_from_colmajor(src, p, TransOp.Trans)
    np.testing.assert_array_equal(p.to_array(), transpose_copy(src).to_array())


def test_pack_dimension_mismatch():
    with pytest.raises(ArgumentError):
        pack_from_colmajor(ColMatView.from_array(np.zeros((2, 3))), PanelMat.empty(3, 3))


def test_unpack_empty_is_noop():
    stats = unpack_to_colmajor(PanelMat.empty(0, 0), ColMatView.from_array(np.zeros((0, 0))))
    assert stats.elements_packed == 0


def test_unpack_identity():
    p = PanelMat.from_array(np.eye(4))
    dst = ColMatView.from_array(np.zeros((4, 4)))
    unpack_to_colmajor(p, dst)
    np.testing.assert_array_equal(dst.to_array(), np.eye(4))


def test_pack_row_block_one_panel():
    src = ColMatView.from_array([[1.0, 2.0], [3.0, 4.0], [5.0, 6.0], [7.0, 8.0]])
    dst = np.zeros(8)
    stats = pack_row_block(src, 0, 4, 2, dst)
    assert dst.tolist() == [1.0, 3.0, 5.0, 7.0, 2.0, 4.0, 6.0, 8.0]
    assert stats.elements_packed == 8


def test_pack_row_block_edge_counts_actual_rows(rng):
    src = ColMatView.from_array(rng.uniform(-1, 1, (6, 3)))
    dst = np.full(2 * 4 * 3, -9.0)
    stats = pack_row_block(src, 4, 8, 3, dst)
    assert stats.elements_packed == 2 * 3
    got = dst[:12].reshape(3, 4).T
    np.testing.assert_array_equal(got[:2], src.to_array()[4:6])


def test_pack_row_block_transposed_equals_packing_transpose(rng):
    a = rng.uniform(-1, 1, (5, 8))
    d1, d2 = np.zeros(8 * 5), np.zeros(8 * 5)
    pack_row_block(ColMatView.from_array(a), 0, 8, 5, d1, TransOp.Trans)
    pack_row_block(ColMatView.from_array(a.T.copy()), 0, 8, 5, d2)
    np.testing.assert_array_equal(d1, d2)


def test_pack_row_block_rejects_tall_block():
    with pytest.raises(ArgumentError):
        pack_row_block(ColMatView.from_array(np.zeros((20, 2))), 0, 13, 2, np.zeros(64))


def test_panel_block_copy(rng):
    a = rng.uniform(-1, 1, (11, 9))
    p = PanelMat.from_array(a)
    np.testing.assert_array_equal(p.block(3, 2, 6, 5).to_array(), a[3:9, 2:7])


@given(st.integers(1, 21), st.integers(1, 21), st.integers(0, 5), st.sampled_from([4, 8]),
       st.integers(0, 2**31))
def test_round_trip_bit_exact_and_counted(m, n, pad, ps, seed):
    a = np.random.default_rng(seed).standard_normal((m, n))
    p = PanelMat.empty(m, n, ps)
    stats = PackStats()
    pack_from_colmajor(ColMatView.from_array(a, ld=m + pad), p, stats=stats)
    assert stats.elements_packed == m * n
    dst = ColMatView.from_array(np.zeros((m, n)), ld=m + pad)
    unpack_to_colmajor(p, dst)
    assert dst.to_array().tobytes() == a.tobytes()
