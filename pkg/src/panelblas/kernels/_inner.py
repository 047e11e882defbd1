"""Register-blocked inner gemm loops.  GENERATED by _codegen.py, do not edit.

Accumulation order is fixed: l outermost, then tile columns, then tile rows.
Edge rows/columns are clamped onto the last valid one, so the loops never read
outside the operand while the extra tile entries stay masked by the caller.
"""

from numba import njit


@njit(cache=True)
def nt_pp_4x4(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        b = B[boff + l * 4 + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        b = B[boff + l * 4 + 1]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        b = B[boff + l * 4 + 2]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        b = B[boff + l * 4 + 3]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3


@njit(cache=True)
def nt_pp_8x4(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        a4 = A[pa1 + l * 4 + 0]
        a5 = A[pa1 + l * 4 + 1]
        a6 = A[pa1 + l * 4 + 2]
        a7 = A[pa1 + l * 4 + 3]
        b = B[boff + l * 4 + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        b = B[boff + l * 4 + 1]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        b = B[boff + l * 4 + 2]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        b = B[boff + l * 4 + 3]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3


@njit(cache=True)
def nt_pp_12x4(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    pa2 = aoff + min(2, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        a4 = A[pa1 + l * 4 + 0]
        a5 = A[pa1 + l * 4 + 1]
        a6 = A[pa1 + l * 4 + 2]
        a7 = A[pa1 + l * 4 + 3]
        a8 = A[pa2 + l * 4 + 0]
        a9 = A[pa2 + l * 4 + 1]
        a10 = A[pa2 + l * 4 + 2]
        a11 = A[pa2 + l * 4 + 3]
        b = B[boff + l * 4 + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        b = B[boff + l * 4 + 1]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        b = B[boff + l * 4 + 2]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        b = B[boff + l * 4 + 3]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3


@njit(cache=True)
def nt_pp_8x8(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        b = B[boff + l * 8 + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        b = B[boff + l * 8 + 1]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        b = B[boff + l * 8 + 2]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        b = B[boff + l * 8 + 3]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        b = B[boff + l * 8 + 4]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        b = B[boff + l * 8 + 5]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        b = B[boff + l * 8 + 6]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        b = B[boff + l * 8 + 7]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7


@njit(cache=True)
def nt_pp_16x8(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c12_0 = tile[12, 0]
    c13_0 = tile[13, 0]
    c14_0 = tile[14, 0]
    c15_0 = tile[15, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c12_1 = tile[12, 1]
    c13_1 = tile[13, 1]
    c14_1 = tile[14, 1]
    c15_1 = tile[15, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c12_2 = tile[12, 2]
    c13_2 = tile[13, 2]
    c14_2 = tile[14, 2]
    c15_2 = tile[15, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    c12_3 = tile[12, 3]
    c13_3 = tile[13, 3]
    c14_3 = tile[14, 3]
    c15_3 = tile[15, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c8_4 = tile[8, 4]
    c9_4 = tile[9, 4]
    c10_4 = tile[10, 4]
    c11_4 = tile[11, 4]
    c12_4 = tile[12, 4]
    c13_4 = tile[13, 4]
    c14_4 = tile[14, 4]
    c15_4 = tile[15, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c8_5 = tile[8, 5]
    c9_5 = tile[9, 5]
    c10_5 = tile[10, 5]
    c11_5 = tile[11, 5]
    c12_5 = tile[12, 5]
    c13_5 = tile[13, 5]
    c14_5 = tile[14, 5]
    c15_5 = tile[15, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c8_6 = tile[8, 6]
    c9_6 = tile[9, 6]
    c10_6 = tile[10, 6]
    c11_6 = tile[11, 6]
    c12_6 = tile[12, 6]
    c13_6 = tile[13, 6]
    c14_6 = tile[14, 6]
    c15_6 = tile[15, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    c8_7 = tile[8, 7]
    c9_7 = tile[9, 7]
    c10_7 = tile[10, 7]
    c11_7 = tile[11, 7]
    c12_7 = tile[12, 7]
    c13_7 = tile[13, 7]
    c14_7 = tile[14, 7]
    c15_7 = tile[15, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        a8 = A[pa1 + l * 8 + 0]
        a9 = A[pa1 + l * 8 + 1]
        a10 = A[pa1 + l * 8 + 2]
        a11 = A[pa1 + l * 8 + 3]
        a12 = A[pa1 + l * 8 + 4]
        a13 = A[pa1 + l * 8 + 5]
        a14 = A[pa1 + l * 8 + 6]
        a15 = A[pa1 + l * 8 + 7]
        b = B[boff + l * 8 + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        c12_0 += a12 * b
        c13_0 += a13 * b
        c14_0 += a14 * b
        c15_0 += a15 * b
        b = B[boff + l * 8 + 1]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        c12_1 += a12 * b
        c13_1 += a13 * b
        c14_1 += a14 * b
        c15_1 += a15 * b
        b = B[boff + l * 8 + 2]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        c12_2 += a12 * b
        c13_2 += a13 * b
        c14_2 += a14 * b
        c15_2 += a15 * b
        b = B[boff + l * 8 + 3]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
        c12_3 += a12 * b
        c13_3 += a13 * b
        c14_3 += a14 * b
        c15_3 += a15 * b
        b = B[boff + l * 8 + 4]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        c8_4 += a8 * b
        c9_4 += a9 * b
        c10_4 += a10 * b
        c11_4 += a11 * b
        c12_4 += a12 * b
        c13_4 += a13 * b
        c14_4 += a14 * b
        c15_4 += a15 * b
        b = B[boff + l * 8 + 5]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        c8_5 += a8 * b
        c9_5 += a9 * b
        c10_5 += a10 * b
        c11_5 += a11 * b
        c12_5 += a12 * b
        c13_5 += a13 * b
        c14_5 += a14 * b
        c15_5 += a15 * b
        b = B[boff + l * 8 + 6]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        c8_6 += a8 * b
        c9_6 += a9 * b
        c10_6 += a10 * b
        c11_6 += a11 * b
        c12_6 += a12 * b
        c13_6 += a13 * b
        c14_6 += a14 * b
        c15_6 += a15 * b
        b = B[boff + l * 8 + 7]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
        c8_7 += a8 * b
        c9_7 += a9 * b
        c10_7 += a10 * b
        c11_7 += a11 * b
        c12_7 += a12 * b
        c13_7 += a13 * b
        c14_7 += a14 * b
        c15_7 += a15 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[12, 0] = c12_0
    tile[13, 0] = c13_0
    tile[14, 0] = c14_0
    tile[15, 0] = c15_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[12, 1] = c12_1
    tile[13, 1] = c13_1
    tile[14, 1] = c14_1
    tile[15, 1] = c15_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[12, 2] = c12_2
    tile[13, 2] = c13_2
    tile[14, 2] = c14_2
    tile[15, 2] = c15_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3
    tile[12, 3] = c12_3
    tile[13, 3] = c13_3
    tile[14, 3] = c14_3
    tile[15, 3] = c15_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[8, 4] = c8_4
    tile[9, 4] = c9_4
    tile[10, 4] = c10_4
    tile[11, 4] = c11_4
    tile[12, 4] = c12_4
    tile[13, 4] = c13_4
    tile[14, 4] = c14_4
    tile[15, 4] = c15_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[8, 5] = c8_5
    tile[9, 5] = c9_5
    tile[10, 5] = c10_5
    tile[11, 5] = c11_5
    tile[12, 5] = c12_5
    tile[13, 5] = c13_5
    tile[14, 5] = c14_5
    tile[15, 5] = c15_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[8, 6] = c8_6
    tile[9, 6] = c9_6
    tile[10, 6] = c10_6
    tile[11, 6] = c11_6
    tile[12, 6] = c12_6
    tile[13, 6] = c13_6
    tile[14, 6] = c14_6
    tile[15, 6] = c15_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7
    tile[8, 7] = c8_7
    tile[9, 7] = c9_7
    tile[10, 7] = c10_7
    tile[11, 7] = c11_7
    tile[12, 7] = c12_7
    tile[13, 7] = c13_7
    tile[14, 7] = c14_7
    tile[15, 7] = c15_7


@njit(cache=True)
def nt_pp_24x8(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    pa2 = aoff + min(2, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c12_0 = tile[12, 0]
    c13_0 = tile[13, 0]
    c14_0 = tile[14, 0]
    c15_0 = tile[15, 0]
    c16_0 = tile[16, 0]
    c17_0 = tile[17, 0]
    c18_0 = tile[18, 0]
    c19_0 = tile[19, 0]
    c20_0 = tile[20, 0]
    c21_0 = tile[21, 0]
    c22_0 = tile[22, 0]
    c23_0 = tile[23, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c12_1 = tile[12, 1]
    c13_1 = tile[13, 1]
    c14_1 = tile[14, 1]
    c15_1 = tile[15, 1]
    c16_1 = tile[16, 1]
    c17_1 = tile[17, 1]
    c18_1 = tile[18, 1]
    c19_1 = tile[19, 1]
    c20_1 = tile[20, 1]
    c21_1 = tile[21, 1]
    c22_1 = tile[22, 1]
    c23_1 = tile[23, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c12_2 = tile[12, 2]
    c13_2 = tile[13, 2]
    c14_2 = tile[14, 2]
    c15_2 = tile[15, 2]
    c16_2 = tile[16, 2]
    c17_2 = tile[17, 2]
    c18_2 = tile[18, 2]
    c19_2 = tile[19, 2]
    c20_2 = tile[20, 2]
    c21_2 = tile[21, 2]
    c22_2 = tile[22, 2]
    c23_2 = tile[23, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    c12_3 = tile[12, 3]
    c13_3 = tile[13, 3]
    c14_3 = tile[14, 3]
    c15_3 = tile[15, 3]
    c16_3 = tile[16, 3]
    c17_3 = tile[17, 3]
    c18_3 = tile[18, 3]
    c19_3 = tile[19, 3]
    c20_3 = tile[20, 3]
    c21_3 = tile[21, 3]
    c22_3 = tile[22, 3]
    c23_3 = tile[23, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c8_4 = tile[8, 4]
    c9_4 = tile[9, 4]
    c10_4 = tile[10, 4]
    c11_4 = tile[11, 4]
    c12_4 = tile[12, 4]
    c13_4 = tile[13, 4]
    c14_4 = tile[14, 4]
    c15_4 = tile[15, 4]
    c16_4 = tile[16, 4]
    c17_4 = tile[17, 4]
    c18_4 = tile[18, 4]
    c19_4 = tile[19, 4]
    c20_4 = tile[20, 4]
    c21_4 = tile[21, 4]
    c22_4 = tile[22, 4]
    c23_4 = tile[23, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c8_5 = tile[8, 5]
    c9_5 = tile[9, 5]
    c10_5 = tile[10, 5]
    c11_5 = tile[11, 5]
    c12_5 = tile[12, 5]
    c13_5 = tile[13, 5]
    c14_5 = tile[14, 5]
    c15_5 = tile[15, 5]
    c16_5 = tile[16, 5]
    c17_5 = tile[17, 5]
    c18_5 = tile[18, 5]
    c19_5 = tile[19, 5]
    c20_5 = tile[20, 5]
    c21_5 = tile[21, 5]
    c22_5 = tile[22, 5]
    c23_5 = tile[23, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c8_6 = tile[8, 6]
    c9_6 = tile[9, 6]
    c10_6 = tile[10, 6]
    c11_6 = tile[11, 6]
    c12_6 = tile[12, 6]
    c13_6 = tile[13, 6]
    c14_6 = tile[14, 6]
    c15_6 = tile[15, 6]
    c16_6 = tile[16, 6]
    c17_6 = tile[17, 6]
    c18_6 = tile[18, 6]
    c19_6 = tile[19, 6]
    c20_6 = tile[20, 6]
    c21_6 = tile[21, 6]
    c22_6 = tile[22, 6]
    c23_6 = tile[23, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    c8_7 = tile[8, 7]
    c9_7 = tile[9, 7]
    c10_7 = tile[10, 7]
    c11_7 = tile[11, 7]
    c12_7 = tile[12, 7]
    c13_7 = tile[13, 7]
    c14_7 = tile[14, 7]
    c15_7 = tile[15, 7]
    c16_7 = tile[16, 7]
    c17_7 = tile[17, 7]
    c18_7 = tile[18, 7]
    c19_7 = tile[19, 7]
    c20_7 = tile[20, 7]
    c21_7 = tile[21, 7]
    c22_7 = tile[22, 7]
    c23_7 = tile[23, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        a8 = A[pa1 + l * 8 + 0]
        a9 = A[pa1 + l * 8 + 1]
        a10 = A[pa1 + l * 8 + 2]
        a11 = A[pa1 + l * 8 + 3]
        a12 = A[pa1 + l * 8 + 4]
        a13 = A[pa1 + l * 8 + 5]
        a14 = A[pa1 + l * 8 + 6]
        a15 = A[pa1 + l * 8 + 7]
        a16 = A[pa2 + l * 8 + 0]
        a17 = A[pa2 + l * 8 + 1]
        a18 = A[pa2 + l * 8 + 2]
        a19 = A[pa2 + l * 8 + 3]
        a20 = A[pa2 + l * 8 + 4]
        a21 = A[pa2 + l * 8 + 5]
        a22 = A[pa2 + l * 8 + 6]
        a23 = A[pa2 + l * 8 + 7]
        b = B[boff + l * 8 + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        c12_0 += a12 * b
        c13_0 += a13 * b
        c14_0 += a14 * b
        c15_0 += a15 * b
        c16_0 += a16 * b
        c17_0 += a17 * b
        c18_0 += a18 * b
        c19_0 += a19 * b
        c20_0 += a20 * b
        c21_0 += a21 * b
        c22_0 += a22 * b
        c23_0 += a23 * b
        b = B[boff + l * 8 + 1]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        c12_1 += a12 * b
        c13_1 += a13 * b
        c14_1 += a14 * b
        c15_1 += a15 * b
        c16_1 += a16 * b
        c17_1 += a17 * b
        c18_1 += a18 * b
        c19_1 += a19 * b
        c20_1 += a20 * b
        c21_1 += a21 * b
        c22_1 += a22 * b
        c23_1 += a23 * b
        b = B[boff + l * 8 + 2]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        c12_2 += a12 * b
        c13_2 += a13 * b
        c14_2 += a14 * b
        c15_2 += a15 * b
        c16_2 += a16 * b
        c17_2 += a17 * b
        c18_2 += a18 * b
        c19_2 += a19 * b
        c20_2 += a20 * b
        c21_2 += a21 * b
        c22_2 += a22 * b
        c23_2 += a23 * b
        b = B[boff + l * 8 + 3]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
        c12_3 += a12 * b
        c13_3 += a13 * b
        c14_3 += a14 * b
        c15_3 += a15 * b
        c16_3 += a16 * b
        c17_3 += a17 * b
        c18_3 += a18 * b
        c19_3 += a19 * b
        c20_3 += a20 * b
        c21_3 += a21 * b
        c22_3 += a22 * b
        c23_3 += a23 * b
        b = B[boff + l * 8 + 4]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        c8_4 += a8 * b
        c9_4 += a9 * b
        c10_4 += a10 * b
        c11_4 += a11 * b
        c12_4 += a12 * b
        c13_4 += a13 * b
        c14_4 += a14 * b
        c15_4 += a15 * b
        c16_4 += a16 * b
        c17_4 += a17 * b
        c18_4 += a18 * b
        c19_4 += a19 * b
        c20_4 += a20 * b
        c21_4 += a21 * b
        c22_4 += a22 * b
        c23_4 += a23 * b
        b = B[boff + l * 8 + 5]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        c8_5 += a8 * b
        c9_5 += a9 * b
        c10_5 += a10 * b
        c11_5 += a11 * b
        c12_5 += a12 * b
        c13_5 += a13 * b
        c14_5 += a14 * b
        c15_5 += a15 * b
        c16_5 += a16 * b
        c17_5 += a17 * b
        c18_5 += a18 * b
        c19_5 += a19 * b
        c20_5 += a20 * b
        c21_5 += a21 * b
        c22_5 += a22 * b
        c23_5 += a23 * b
        b = B[boff + l * 8 + 6]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        c8_6 += a8 * b
        c9_6 += a9 * b
        c10_6 += a10 * b
        c11_6 += a11 * b
        c12_6 += a12 * b
        c13_6 += a13 * b
        c14_6 += a14 * b
        c15_6 += a15 * b
        c16_6 += a16 * b
        c17_6 += a17 * b
        c18_6 += a18 * b
        c19_6 += a19 * b
        c20_6 += a20 * b
        c21_6 += a21 * b
        c22_6 += a22 * b
        c23_6 += a23 * b
        b = B[boff + l * 8 + 7]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
        c8_7 += a8 * b
        c9_7 += a9 * b
        c10_7 += a10 * b
        c11_7 += a11 * b
        c12_7 += a12 * b
        c13_7 += a13 * b
        c14_7 += a14 * b
        c15_7 += a15 * b
        c16_7 += a16 * b
        c17_7 += a17 * b
        c18_7 += a18 * b
        c19_7 += a19 * b
        c20_7 += a20 * b
        c21_7 += a21 * b
        c22_7 += a22 * b
        c23_7 += a23 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[12, 0] = c12_0
    tile[13, 0] = c13_0
    tile[14, 0] = c14_0
    tile[15, 0] = c15_0
    tile[16, 0] = c16_0
    tile[17, 0] = c17_0
    tile[18, 0] = c18_0
    tile[19, 0] = c19_0
    tile[20, 0] = c20_0
    tile[21, 0] = c21_0
    tile[22, 0] = c22_0
    tile[23, 0] = c23_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[12, 1] = c12_1
    tile[13, 1] = c13_1
    tile[14, 1] = c14_1
    tile[15, 1] = c15_1
    tile[16, 1] = c16_1
    tile[17, 1] = c17_1
    tile[18, 1] = c18_1
    tile[19, 1] = c19_1
    tile[20, 1] = c20_1
    tile[21, 1] = c21_1
    tile[22, 1] = c22_1
    tile[23, 1] = c23_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[12, 2] = c12_2
    tile[13, 2] = c13_2
    tile[14, 2] = c14_2
    tile[15, 2] = c15_2
    tile[16, 2] = c16_2
    tile[17, 2] = c17_2
    tile[18, 2] = c18_2
    tile[19, 2] = c19_2
    tile[20, 2] = c20_2
    tile[21, 2] = c21_2
    tile[22, 2] = c22_2
    tile[23, 2] = c23_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3
    tile[12, 3] = c12_3
    tile[13, 3] = c13_3
    tile[14, 3] = c14_3
    tile[15, 3] = c15_3
    tile[16, 3] = c16_3
    tile[17, 3] = c17_3
    tile[18, 3] = c18_3
    tile[19, 3] = c19_3
    tile[20, 3] = c20_3
    tile[21, 3] = c21_3
    tile[22, 3] = c22_3
    tile[23, 3] = c23_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[8, 4] = c8_4
    tile[9, 4] = c9_4
    tile[10, 4] = c10_4
    tile[11, 4] = c11_4
    tile[12, 4] = c12_4
    tile[13, 4] = c13_4
    tile[14, 4] = c14_4
    tile[15, 4] = c15_4
    tile[16, 4] = c16_4
    tile[17, 4] = c17_4
    tile[18, 4] = c18_4
    tile[19, 4] = c19_4
    tile[20, 4] = c20_4
    tile[21, 4] = c21_4
    tile[22, 4] = c22_4
    tile[23, 4] = c23_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[8, 5] = c8_5
    tile[9, 5] = c9_5
    tile[10, 5] = c10_5
    tile[11, 5] = c11_5
    tile[12, 5] = c12_5
    tile[13, 5] = c13_5
    tile[14, 5] = c14_5
    tile[15, 5] = c15_5
    tile[16, 5] = c16_5
    tile[17, 5] = c17_5
    tile[18, 5] = c18_5
    tile[19, 5] = c19_5
    tile[20, 5] = c20_5
    tile[21, 5] = c21_5
    tile[22, 5] = c22_5
    tile[23, 5] = c23_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[8, 6] = c8_6
    tile[9, 6] = c9_6
    tile[10, 6] = c10_6
    tile[11, 6] = c11_6
    tile[12, 6] = c12_6
    tile[13, 6] = c13_6
    tile[14, 6] = c14_6
    tile[15, 6] = c15_6
    tile[16, 6] = c16_6
    tile[17, 6] = c17_6
    tile[18, 6] = c18_6
    tile[19, 6] = c19_6
    tile[20, 6] = c20_6
    tile[21, 6] = c21_6
    tile[22, 6] = c22_6
    tile[23, 6] = c23_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7
    tile[8, 7] = c8_7
    tile[9, 7] = c9_7
    tile[10, 7] = c10_7
    tile[11, 7] = c11_7
    tile[12, 7] = c12_7
    tile[13, 7] = c13_7
    tile[14, 7] = c14_7
    tile[15, 7] = c15_7
    tile[16, 7] = c16_7
    tile[17, 7] = c17_7
    tile[18, 7] = c18_7
    tile[19, 7] = c19_7
    tile[20, 7] = c20_7
    tile[21, 7] = c21_7
    tile[22, 7] = c22_7
    tile[23, 7] = c23_7


@njit(cache=True)
def nt_pp(sel, kmax, A, aoff, sda, ma, B, boff, tile):
    if sel == 0:
        nt_pp_4x4(kmax, A, aoff, sda, ma, B, boff, tile)
    elif sel == 1:
        nt_pp_8x4(kmax, A, aoff, sda, ma, B, boff, tile)
    elif sel == 2:
        nt_pp_12x4(kmax, A, aoff, sda, ma, B, boff, tile)
    elif sel == 3:
        nt_pp_8x8(kmax, A, aoff, sda, ma, B, boff, tile)
    elif sel == 4:
        nt_pp_16x8(kmax, A, aoff, sda, ma, B, boff, tile)
    elif sel == 5:
        nt_pp_24x8(kmax, A, aoff, sda, ma, B, boff, tile)


@njit(cache=True)
def nt_pp_sub_4x4(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        b = B[boff + l * 4 + 0]
        c0_0 -= a0 * b
        c1_0 -= a1 * b
        c2_0 -= a2 * b
        c3_0 -= a3 * b
        b = B[boff + l * 4 + 1]
        c0_1 -= a0 * b
        c1_1 -= a1 * b
        c2_1 -= a2 * b
        c3_1 -= a3 * b
        b = B[boff + l * 4 + 2]
        c0_2 -= a0 * b
        c1_2 -= a1 * b
        c2_2 -= a2 * b
        c3_2 -= a3 * b
        b = B[boff + l * 4 + 3]
        c0_3 -= a0 * b
        c1_3 -= a1 * b
        c2_3 -= a2 * b
        c3_3 -= a3 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3


@njit(cache=True)
def nt_pp_sub_8x4(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        a4 = A[pa1 + l * 4 + 0]
        a5 = A[pa1 + l * 4 + 1]
        a6 = A[pa1 + l * 4 + 2]
        a7 = A[pa1 + l * 4 + 3]
        b = B[boff + l * 4 + 0]
        c0_0 -= a0 * b
        c1_0 -= a1 * b
        c2_0 -= a2 * b
        c3_0 -= a3 * b
        c4_0 -= a4 * b
        c5_0 -= a5 * b
        c6_0 -= a6 * b
        c7_0 -= a7 * b
        b = B[boff + l * 4 + 1]
        c0_1 -= a0 * b
        c1_1 -= a1 * b
        c2_1 -= a2 * b
        c3_1 -= a3 * b
        c4_1 -= a4 * b
        c5_1 -= a5 * b
        c6_1 -= a6 * b
        c7_1 -= a7 * b
        b = B[boff + l * 4 + 2]
        c0_2 -= a0 * b
        c1_2 -= a1 * b
        c2_2 -= a2 * b
        c3_2 -= a3 * b
        c4_2 -= a4 * b
        c5_2 -= a5 * b
        c6_2 -= a6 * b
        c7_2 -= a7 * b
        b = B[boff + l * 4 + 3]
        c0_3 -= a0 * b
        c1_3 -= a1 * b
        c2_3 -= a2 * b
        c3_3 -= a3 * b
        c4_3 -= a4 * b
        c5_3 -= a5 * b
        c6_3 -= a6 * b
        c7_3 -= a7 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3


@njit(cache=True)
def nt_pp_sub_12x4(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    pa2 = aoff + min(2, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        a4 = A[pa1 + l * 4 + 0]
        a5 = A[pa1 + l * 4 + 1]
        a6 = A[pa1 + l * 4 + 2]
        a7 = A[pa1 + l * 4 + 3]
        a8 = A[pa2 + l * 4 + 0]
        a9 = A[pa2 + l * 4 + 1]
        a10 = A[pa2 + l * 4 + 2]
        a11 = A[pa2 + l * 4 + 3]
        b = B[boff + l * 4 + 0]
        c0_0 -= a0 * b
        c1_0 -= a1 * b
        c2_0 -= a2 * b
        c3_0 -= a3 * b
        c4_0 -= a4 * b
        c5_0 -= a5 * b
        c6_0 -= a6 * b
        c7_0 -= a7 * b
        c8_0 -= a8 * b
        c9_0 -= a9 * b
        c10_0 -= a10 * b
        c11_0 -= a11 * b
        b = B[boff + l * 4 + 1]
        c0_1 -= a0 * b
        c1_1 -= a1 * b
        c2_1 -= a2 * b
        c3_1 -= a3 * b
        c4_1 -= a4 * b
        c5_1 -= a5 * b
        c6_1 -= a6 * b
        c7_1 -= a7 * b
        c8_1 -= a8 * b
        c9_1 -= a9 * b
        c10_1 -= a10 * b
        c11_1 -= a11 * b
        b = B[boff + l * 4 + 2]
        c0_2 -= a0 * b
        c1_2 -= a1 * b
        c2_2 -= a2 * b
        c3_2 -= a3 * b
        c4_2 -= a4 * b
        c5_2 -= a5 * b
        c6_2 -= a6 * b
        c7_2 -= a7 * b
        c8_2 -= a8 * b
        c9_2 -= a9 * b
        c10_2 -= a10 * b
        c11_2 -= a11 * b
        b = B[boff + l * 4 + 3]
        c0_3 -= a0 * b
        c1_3 -= a1 * b
        c2_3 -= a2 * b
        c3_3 -= a3 * b
        c4_3 -= a4 * b
        c5_3 -= a5 * b
        c6_3 -= a6 * b
        c7_3 -= a7 * b
        c8_3 -= a8 * b
        c9_3 -= a9 * b
        c10_3 -= a10 * b
        c11_3 -= a11 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3


@njit(cache=True)
def nt_pp_sub_8x8(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        b = B[boff + l * 8 + 0]
        c0_0 -= a0 * b
        c1_0 -= a1 * b
        c2_0 -= a2 * b
        c3_0 -= a3 * b
        c4_0 -= a4 * b
        c5_0 -= a5 * b
        c6_0 -= a6 * b
        c7_0 -= a7 * b
        b = B[boff + l * 8 + 1]
        c0_1 -= a0 * b
        c1_1 -= a1 * b
        c2_1 -= a2 * b
        c3_1 -= a3 * b
        c4_1 -= a4 * b
        c5_1 -= a5 * b
        c6_1 -= a6 * b
        c7_1 -= a7 * b
        b = B[boff + l * 8 + 2]
        c0_2 -= a0 * b
        c1_2 -= a1 * b
        c2_2 -= a2 * b
        c3_2 -= a3 * b
        c4_2 -= a4 * b
        c5_2 -= a5 * b
        c6_2 -= a6 * b
        c7_2 -= a7 * b
        b = B[boff + l * 8 + 3]
        c0_3 -= a0 * b
        c1_3 -= a1 * b
        c2_3 -= a2 * b
        c3_3 -= a3 * b
        c4_3 -= a4 * b
        c5_3 -= a5 * b
        c6_3 -= a6 * b
        c7_3 -= a7 * b
        b = B[boff + l * 8 + 4]
        c0_4 -= a0 * b
        c1_4 -= a1 * b
        c2_4 -= a2 * b
        c3_4 -= a3 * b
        c4_4 -= a4 * b
        c5_4 -= a5 * b
        c6_4 -= a6 * b
        c7_4 -= a7 * b
        b = B[boff + l * 8 + 5]
        c0_5 -= a0 * b
        c1_5 -= a1 * b
        c2_5 -= a2 * b
        c3_5 -= a3 * b
        c4_5 -= a4 * b
        c5_5 -= a5 * b
        c6_5 -= a6 * b
        c7_5 -= a7 * b
        b = B[boff + l * 8 + 6]
        c0_6 -= a0 * b
        c1_6 -= a1 * b
        c2_6 -= a2 * b
        c3_6 -= a3 * b
        c4_6 -= a4 * b
        c5_6 -= a5 * b
        c6_6 -= a6 * b
        c7_6 -= a7 * b
        b = B[boff + l * 8 + 7]
        c0_7 -= a0 * b
        c1_7 -= a1 * b
        c2_7 -= a2 * b
        c3_7 -= a3 * b
        c4_7 -= a4 * b
        c5_7 -= a5 * b
        c6_7 -= a6 * b
        c7_7 -= a7 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7


@njit(cache=True)
def nt_pp_sub_16x8(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c12_0 = tile[12, 0]
    c13_0 = tile[13, 0]
    c14_0 = tile[14, 0]
    c15_0 = tile[15, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c12_1 = tile[12, 1]
    c13_1 = tile[13, 1]
    c14_1 = tile[14, 1]
    c15_1 = tile[15, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c12_2 = tile[12, 2]
    c13_2 = tile[13, 2]
    c14_2 = tile[14, 2]
    c15_2 = tile[15, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    c12_3 = tile[12, 3]
    c13_3 = tile[13, 3]
    c14_3 = tile[14, 3]
    c15_3 = tile[15, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c8_4 = tile[8, 4]
    c9_4 = tile[9, 4]
    c10_4 = tile[10, 4]
    c11_4 = tile[11, 4]
    c12_4 = tile[12, 4]
    c13_4 = tile[13, 4]
    c14_4 = tile[14, 4]
    c15_4 = tile[15, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c8_5 = tile[8, 5]
    c9_5 = tile[9, 5]
    c10_5 = tile[10, 5]
    c11_5 = tile[11, 5]
    c12_5 = tile[12, 5]
    c13_5 = tile[13, 5]
    c14_5 = tile[14, 5]
    c15_5 = tile[15, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c8_6 = tile[8, 6]
    c9_6 = tile[9, 6]
    c10_6 = tile[10, 6]
    c11_6 = tile[11, 6]
    c12_6 = tile[12, 6]
    c13_6 = tile[13, 6]
    c14_6 = tile[14, 6]
    c15_6 = tile[15, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    c8_7 = tile[8, 7]
    c9_7 = tile[9, 7]
    c10_7 = tile[10, 7]
    c11_7 = tile[11, 7]
    c12_7 = tile[12, 7]
    c13_7 = tile[13, 7]
    c14_7 = tile[14, 7]
    c15_7 = tile[15, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        a8 = A[pa1 + l * 8 + 0]
        a9 = A[pa1 + l * 8 + 1]
        a10 = A[pa1 + l * 8 + 2]
        a11 = A[pa1 + l * 8 + 3]
        a12 = A[pa1 + l * 8 + 4]
        a13 = A[pa1 + l * 8 + 5]
        a14 = A[pa1 + l * 8 + 6]
        a15 = A[pa1 + l * 8 + 7]
        b = B[boff + l * 8 + 0]
        c0_0 -= a0 * b
        c1_0 -= a1 * b
        c2_0 -= a2 * b
        c3_0 -= a3 * b
        c4_0 -= a4 * b
        c5_0 -= a5 * b
        c6_0 -= a6 * b
        c7_0 -= a7 * b
        c8_0 -= a8 * b
        c9_0 -= a9 * b
        c10_0 -= a10 * b
        c11_0 -= a11 * b
        c12_0 -= a12 * b
        c13_0 -= a13 * b
        c14_0 -= a14 * b
        c15_0 -= a15 * b
        b = B[boff + l * 8 + 1]
        c0_1 -= a0 * b
        c1_1 -= a1 * b
        c2_1 -= a2 * b
        c3_1 -= a3 * b
        c4_1 -= a4 * b
        c5_1 -= a5 * b
        c6_1 -= a6 * b
        c7_1 -= a7 * b
        c8_1 -= a8 * b
        c9_1 -= a9 * b
        c10_1 -= a10 * b
        c11_1 -= a11 * b
        c12_1 -= a12 * b
        c13_1 -= a13 * b
        c14_1 -= a14 * b
        c15_1 -= a15 * b
        b = B[boff + l * 8 + 2]
        c0_2 -= a0 * b
        c1_2 -= a1 * b
        c2_2 -= a2 * b
        c3_2 -= a3 * b
        c4_2 -= a4 * b
        c5_2 -= a5 * b
        c6_2 -= a6 * b
        c7_2 -= a7 * b
        c8_2 -= a8 * b
        c9_2 -= a9 * b
        c10_2 -= a10 * b
        c11_2 -= a11 * b
        c12_2 -= a12 * b
        c13_2 -= a13 * b
        c14_2 -= a14 * b
        c15_2 -= a15 * b
        b = B[boff + l * 8 + 3]
        c0_3 -= a0 * b
        c1_3 -= a1 * b
        c2_3 -= a2 * b
        c3_3 -= a3 * b
        c4_3 -= a4 * b
        c5_3 -= a5 * b
        c6_3 -= a6 * b
        c7_3 -= a7 * b
        c8_3 -= a8 * b
        c9_3 -= a9 * b
        c10_3 -= a10 * b
        c11_3 -= a11 * b
        c12_3 -= a12 * b
        c13_3 -= a13 * b
        c14_3 -= a14 * b
        c15_3 -= a15 * b
        b = B[boff + l * 8 + 4]
        c0_4 -= a0 * b
        c1_4 -= a1 * b
        c2_4 -= a2 * b
        c3_4 -= a3 * b
        c4_4 -= a4 * b
        c5_4 -= a5 * b
        c6_4 -= a6 * b
        c7_4 -= a7 * b
        c8_4 -= a8 * b
        c9_4 -= a9 * b
        c10_4 -= a10 * b
        c11_4 -= a11 * b
        c12_4 -= a12 * b
        c13_4 -= a13 * b
        c14_4 -= a14 * b
        c15_4 -= a15 * b
        b = B[boff + l * 8 + 5]
        c0_5 -= a0 * b
        c1_5 -= a1 * b
        c2_5 -= a2 * b
        c3_5 -= a3 * b
        c4_5 -= a4 * b
        c5_5 -= a5 * b
        c6_5 -= a6 * b
        c7_5 -= a7 * b
        c8_5 -= a8 * b
        c9_5 -= a9 * b
        c10_5 -= a10 * b
        c11_5 -= a11 * b
        c12_5 -= a12 * b
        c13_5 -= a13 * b
        c14_5 -= a14 * b
        c15_5 -= a15 * b
        b = B[boff + l * 8 + 6]
        c0_6 -= a0 * b
        c1_6 -= a1 * b
        c2_6 -= a2 * b
        c3_6 -= a3 * b
        c4_6 -= a4 * b
        c5_6 -= a5 * b
        c6_6 -= a6 * b
        c7_6 -= a7 * b
        c8_6 -= a8 * b
        c9_6 -= a9 * b
        c10_6 -= a10 * b
        c11_6 -= a11 * b
        c12_6 -= a12 * b
        c13_6 -= a13 * b
        c14_6 -= a14 * b
        c15_6 -= a15 * b
        b = B[boff + l * 8 + 7]
        c0_7 -= a0 * b
        c1_7 -= a1 * b
        c2_7 -= a2 * b
        c3_7 -= a3 * b
        c4_7 -= a4 * b
        c5_7 -= a5 * b
        c6_7 -= a6 * b
        c7_7 -= a7 * b
        c8_7 -= a8 * b
        c9_7 -= a9 * b
        c10_7 -= a10 * b
        c11_7 -= a11 * b
        c12_7 -= a12 * b
        c13_7 -= a13 * b
        c14_7 -= a14 * b
        c15_7 -= a15 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[12, 0] = c12_0
    tile[13, 0] = c13_0
    tile[14, 0] = c14_0
    tile[15, 0] = c15_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[12, 1] = c12_1
    tile[13, 1] = c13_1
    tile[14, 1] = c14_1
    tile[15, 1] = c15_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[12, 2] = c12_2
    tile[13, 2] = c13_2
    tile[14, 2] = c14_2
    tile[15, 2] = c15_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3
    tile[12, 3] = c12_3
    tile[13, 3] = c13_3
    tile[14, 3] = c14_3
    tile[15, 3] = c15_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[8, 4] = c8_4
    tile[9, 4] = c9_4
    tile[10, 4] = c10_4
    tile[11, 4] = c11_4
    tile[12, 4] = c12_4
    tile[13, 4] = c13_4
    tile[14, 4] = c14_4
    tile[15, 4] = c15_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[8, 5] = c8_5
    tile[9, 5] = c9_5
    tile[10, 5] = c10_5
    tile[11, 5] = c11_5
    tile[12, 5] = c12_5
    tile[13, 5] = c13_5
    tile[14, 5] = c14_5
    tile[15, 5] = c15_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[8, 6] = c8_6
    tile[9, 6] = c9_6
    tile[10, 6] = c10_6
    tile[11, 6] = c11_6
    tile[12, 6] = c12_6
    tile[13, 6] = c13_6
    tile[14, 6] = c14_6
    tile[15, 6] = c15_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7
    tile[8, 7] = c8_7
    tile[9, 7] = c9_7
    tile[10, 7] = c10_7
    tile[11, 7] = c11_7
    tile[12, 7] = c12_7
    tile[13, 7] = c13_7
    tile[14, 7] = c14_7
    tile[15, 7] = c15_7


@njit(cache=True)
def nt_pp_sub_24x8(kmax, A, aoff, sda, ma, B, boff, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    pa2 = aoff + min(2, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c12_0 = tile[12, 0]
    c13_0 = tile[13, 0]
    c14_0 = tile[14, 0]
    c15_0 = tile[15, 0]
    c16_0 = tile[16, 0]
    c17_0 = tile[17, 0]
    c18_0 = tile[18, 0]
    c19_0 = tile[19, 0]
    c20_0 = tile[20, 0]
    c21_0 = tile[21, 0]
    c22_0 = tile[22, 0]
    c23_0 = tile[23, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c12_1 = tile[12, 1]
    c13_1 = tile[13, 1]
    c14_1 = tile[14, 1]
    c15_1 = tile[15, 1]
    c16_1 = tile[16, 1]
    c17_1 = tile[17, 1]
    c18_1 = tile[18, 1]
    c19_1 = tile[19, 1]
    c20_1 = tile[20, 1]
    c21_1 = tile[21, 1]
    c22_1 = tile[22, 1]
    c23_1 = tile[23, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c12_2 = tile[12, 2]
    c13_2 = tile[13, 2]
    c14_2 = tile[14, 2]
    c15_2 = tile[15, 2]
    c16_2 = tile[16, 2]
    c17_2 = tile[17, 2]
    c18_2 = tile[18, 2]
    c19_2 = tile[19, 2]
    c20_2 = tile[20, 2]
    c21_2 = tile[21, 2]
    c22_2 = tile[22, 2]
    c23_2 = tile[23, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    c12_3 = tile[12, 3]
    c13_3 = tile[13, 3]
    c14_3 = tile[14, 3]
    c15_3 = tile[15, 3]
    c16_3 = tile[16, 3]
    c17_3 = tile[17, 3]
    c18_3 = tile[18, 3]
    c19_3 = tile[19, 3]
    c20_3 = tile[20, 3]
    c21_3 = tile[21, 3]
    c22_3 = tile[22, 3]
    c23_3 = tile[23, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c8_4 = tile[8, 4]
    c9_4 = tile[9, 4]
    c10_4 = tile[10, 4]
    c11_4 = tile[11, 4]
    c12_4 = tile[12, 4]
    c13_4 = tile[13, 4]
    c14_4 = tile[14, 4]
    c15_4 = tile[15, 4]
    c16_4 = tile[16, 4]
    c17_4 = tile[17, 4]
    c18_4 = tile[18, 4]
    c19_4 = tile[19, 4]
    c20_4 = tile[20, 4]
    c21_4 = tile[21, 4]
    c22_4 = tile[22, 4]
    c23_4 = tile[23, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c8_5 = tile[8, 5]
    c9_5 = tile[9, 5]
    c10_5 = tile[10, 5]
    c11_5 = tile[11, 5]
    c12_5 = tile[12, 5]
    c13_5 = tile[13, 5]
    c14_5 = tile[14, 5]
    c15_5 = tile[15, 5]
    c16_5 = tile[16, 5]
    c17_5 = tile[17, 5]
    c18_5 = tile[18, 5]
    c19_5 = tile[19, 5]
    c20_5 = tile[20, 5]
    c21_5 = tile[21, 5]
    c22_5 = tile[22, 5]
    c23_5 = tile[23, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c8_6 = tile[8, 6]
    c9_6 = tile[9, 6]
    c10_6 = tile[10, 6]
    c11_6 = tile[11, 6]
    c12_6 = tile[12, 6]
    c13_6 = tile[13, 6]
    c14_6 = tile[14, 6]
    c15_6 = tile[15, 6]
    c16_6 = tile[16, 6]
    c17_6 = tile[17, 6]
    c18_6 = tile[18, 6]
    c19_6 = tile[19, 6]
    c20_6 = tile[20, 6]
    c21_6 = tile[21, 6]
    c22_6 = tile[22, 6]
    c23_6 = tile[23, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    c8_7 = tile[8, 7]
    c9_7 = tile[9, 7]
    c10_7 = tile[10, 7]
    c11_7 = tile[11, 7]
    c12_7 = tile[12, 7]
    c13_7 = tile[13, 7]
    c14_7 = tile[14, 7]
    c15_7 = tile[15, 7]
    c16_7 = tile[16, 7]
    c17_7 = tile[17, 7]
    c18_7 = tile[18, 7]
    c19_7 = tile[19, 7]
    c20_7 = tile[20, 7]
    c21_7 = tile[21, 7]
    c22_7 = tile[22, 7]
    c23_7 = tile[23, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        a8 = A[pa1 + l * 8 + 0]
        a9 = A[pa1 + l * 8 + 1]
        a10 = A[pa1 + l * 8 + 2]
        a11 = A[pa1 + l * 8 + 3]
        a12 = A[pa1 + l * 8 + 4]
        a13 = A[pa1 + l * 8 + 5]
        a14 = A[pa1 + l * 8 + 6]
        a15 = A[pa1 + l * 8 + 7]
        a16 = A[pa2 + l * 8 + 0]
        a17 = A[pa2 + l * 8 + 1]
        a18 = A[pa2 + l * 8 + 2]
        a19 = A[pa2 + l * 8 + 3]
        a20 = A[pa2 + l * 8 + 4]
        a21 = A[pa2 + l * 8 + 5]
        a22 = A[pa2 + l * 8 + 6]
        a23 = A[pa2 + l * 8 + 7]
        b = B[boff + l * 8 + 0]
        c0_0 -= a0 * b
        c1_0 -= a1 * b
        c2_0 -= a2 * b
        c3_0 -= a3 * b
        c4_0 -= a4 * b
        c5_0 -= a5 * b
        c6_0 -= a6 * b
        c7_0 -= a7 * b
        c8_0 -= a8 * b
        c9_0 -= a9 * b
        c10_0 -= a10 * b
        c11_0 -= a11 * b
        c12_0 -= a12 * b
        c13_0 -= a13 * b
        c14_0 -= a14 * b
        c15_0 -= a15 * b
        c16_0 -= a16 * b
        c17_0 -= a17 * b
        c18_0 -= a18 * b
        c19_0 -= a19 * b
        c20_0 -= a20 * b
        c21_0 -= a21 * b
        c22_0 -= a22 * b
        c23_0 -= a23 * b
        b = B[boff + l * 8 + 1]
        c0_1 -= a0 * b
        c1_1 -= a1 * b
        c2_1 -= a2 * b
        c3_1 -= a3 * b
        c4_1 -= a4 * b
        c5_1 -= a5 * b
        c6_1 -= a6 * b
        c7_1 -= a7 * b
        c8_1 -= a8 * b
        c9_1 -= a9 * b
        c10_1 -= a10 * b
        c11_1 -= a11 * b
        c12_1 -= a12 * b
        c13_1 -= a13 * b
        c14_1 -= a14 * b
        c15_1 -= a15 * b
        c16_1 -= a16 * b
        c17_1 -= a17 * b
        c18_1 -= a18 * b
        c19_1 -= a19 * b
        c20_1 -= a20 * b
        c21_1 -= a21 * b
        c22_1 -= a22 * b
        c23_1 -= a23 * b
        b = B[boff + l * 8 + 2]
        c0_2 -= a0 * b
        c1_2 -= a1 * b
        c2_2 -= a2 * b
        c3_2 -= a3 * b
        c4_2 -= a4 * b
        c5_2 -= a5 * b
        c6_2 -= a6 * b
        c7_2 -= a7 * b
        c8_2 -= a8 * b
        c9_2 -= a9 * b
        c10_2 -= a10 * b
        c11_2 -= a11 * b
        c12_2 -= a12 * b
        c13_2 -= a13 * b
        c14_2 -= a14 * b
        c15_2 -= a15 * b
        c16_2 -= a16 * b
        c17_2 -= a17 * b
        c18_2 -= a18 * b
        c19_2 -= a19 * b
        c20_2 -= a20 * b
        c21_2 -= a21 * b
        c22_2 -= a22 * b
        c23_2 -= a23 * b
        b = B[boff + l * 8 + 3]
        c0_3 -= a0 * b
        c1_3 -= a1 * b
        c2_3 -= a2 * b
        c3_3 -= a3 * b
        c4_3 -= a4 * b
        c5_3 -= a5 * b
        c6_3 -= a6 * b
        c7_3 -= a7 * b
        c8_3 -= a8 * b
        c9_3 -= a9 * b
        c10_3 -= a10 * b
        c11_3 -= a11 * b
        c12_3 -= a12 * b
        c13_3 -= a13 * b
        c14_3 -= a14 * b
        c15_3 -= a15 * b
        c16_3 -= a16 * b
        c17_3 -= a17 * b
        c18_3 -= a18 * b
        c19_3 -= a19 * b
        c20_3 -= a20 * b
        c21_3 -= a21 * b
        c22_3 -= a22 * b
        c23_3 -= a23 * b
        b = B[boff + l * 8 + 4]
        c0_4 -= a0 * b
        c1_4 -= a1 * b
        c2_4 -= a2 * b
        c3_4 -= a3 * b
        c4_4 -= a4 * b
        c5_4 -= a5 * b
        c6_4 -= a6 * b
        c7_4 -= a7 * b
        c8_4 -= a8 * b
        c9_4 -= a9 * b
        c10_4 -= a10 * b
        c11_4 -= a11 * b
        c12_4 -= a12 * b
        c13_4 -= a13 * b
        c14_4 -= a14 * b
        c15_4 -= a15 * b
        c16_4 -= a16 * b
        c17_4 -= a17 * b
        c18_4 -= a18 * b
        c19_4 -= a19 * b
        c20_4 -= a20 * b
        c21_4 -= a21 * b
        c22_4 -= a22 * b
        c23_4 -= a23 * b
        b = B[boff + l * 8 + 5]
        c0_5 -= a0 * b
        c1_5 -= a1 * b
        c2_5 -= a2 * b
        c3_5 -= a3 * b
        c4_5 -= a4 * b
        c5_5 -= a5 * b
        c6_5 -= a6 * b
        c7_5 -= a7 * b
        c8_5 -= a8 * b
        c9_5 -= a9 * b
        c10_5 -= a10 * b
        c11_5 -= a11 * b
        c12_5 -= a12 * b
        c13_5 -= a13 * b
        c14_5 -= a14 * b
        c15_5 -= a15 * b
        c16_5 -= a16 * b
        c17_5 -= a17 * b
        c18_5 -= a18 * b
        c19_5 -= a19 * b
        c20_5 -= a20 * b
        c21_5 -= a21 * b
        c22_5 -= a22 * b
        c23_5 -= a23 * b
        b = B[boff + l * 8 + 6]
        c0_6 -= a0 * b
        c1_6 -= a1 * b
        c2_6 -= a2 * b
        c3_6 -= a3 * b
        c4_6 -= a4 * b
        c5_6 -= a5 * b
        c6_6 -= a6 * b
        c7_6 -= a7 * b
        c8_6 -= a8 * b
        c9_6 -= a9 * b
        c10_6 -= a10 * b
        c11_6 -= a11 * b
        c12_6 -= a12 * b
        c13_6 -= a13 * b
        c14_6 -= a14 * b
        c15_6 -= a15 * b
        c16_6 -= a16 * b
        c17_6 -= a17 * b
        c18_6 -= a18 * b
        c19_6 -= a19 * b
        c20_6 -= a20 * b
        c21_6 -= a21 * b
        c22_6 -= a22 * b
        c23_6 -= a23 * b
        b = B[boff + l * 8 + 7]
        c0_7 -= a0 * b
        c1_7 -= a1 * b
        c2_7 -= a2 * b
        c3_7 -= a3 * b
        c4_7 -= a4 * b
        c5_7 -= a5 * b
        c6_7 -= a6 * b
        c7_7 -= a7 * b
        c8_7 -= a8 * b
        c9_7 -= a9 * b
        c10_7 -= a10 * b
        c11_7 -= a11 * b
        c12_7 -= a12 * b
        c13_7 -= a13 * b
        c14_7 -= a14 * b
        c15_7 -= a15 * b
        c16_7 -= a16 * b
        c17_7 -= a17 * b
        c18_7 -= a18 * b
        c19_7 -= a19 * b
        c20_7 -= a20 * b
        c21_7 -= a21 * b
        c22_7 -= a22 * b
        c23_7 -= a23 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[12, 0] = c12_0
    tile[13, 0] = c13_0
    tile[14, 0] = c14_0
    tile[15, 0] = c15_0
    tile[16, 0] = c16_0
    tile[17, 0] = c17_0
    tile[18, 0] = c18_0
    tile[19, 0] = c19_0
    tile[20, 0] = c20_0
    tile[21, 0] = c21_0
    tile[22, 0] = c22_0
    tile[23, 0] = c23_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[12, 1] = c12_1
    tile[13, 1] = c13_1
    tile[14, 1] = c14_1
    tile[15, 1] = c15_1
    tile[16, 1] = c16_1
    tile[17, 1] = c17_1
    tile[18, 1] = c18_1
    tile[19, 1] = c19_1
    tile[20, 1] = c20_1
    tile[21, 1] = c21_1
    tile[22, 1] = c22_1
    tile[23, 1] = c23_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[12, 2] = c12_2
    tile[13, 2] = c13_2
    tile[14, 2] = c14_2
    tile[15, 2] = c15_2
    tile[16, 2] = c16_2
    tile[17, 2] = c17_2
    tile[18, 2] = c18_2
    tile[19, 2] = c19_2
    tile[20, 2] = c20_2
    tile[21, 2] = c21_2
    tile[22, 2] = c22_2
    tile[23, 2] = c23_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3
    tile[12, 3] = c12_3
    tile[13, 3] = c13_3
    tile[14, 3] = c14_3
    tile[15, 3] = c15_3
    tile[16, 3] = c16_3
    tile[17, 3] = c17_3
    tile[18, 3] = c18_3
    tile[19, 3] = c19_3
    tile[20, 3] = c20_3
    tile[21, 3] = c21_3
    tile[22, 3] = c22_3
    tile[23, 3] = c23_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[8, 4] = c8_4
    tile[9, 4] = c9_4
    tile[10, 4] = c10_4
    tile[11, 4] = c11_4
    tile[12, 4] = c12_4
    tile[13, 4] = c13_4
    tile[14, 4] = c14_4
    tile[15, 4] = c15_4
    tile[16, 4] = c16_4
    tile[17, 4] = c17_4
    tile[18, 4] = c18_4
    tile[19, 4] = c19_4
    tile[20, 4] = c20_4
    tile[21, 4] = c21_4
    tile[22, 4] = c22_4
    tile[23, 4] = c23_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[8, 5] = c8_5
    tile[9, 5] = c9_5
    tile[10, 5] = c10_5
    tile[11, 5] = c11_5
    tile[12, 5] = c12_5
    tile[13, 5] = c13_5
    tile[14, 5] = c14_5
    tile[15, 5] = c15_5
    tile[16, 5] = c16_5
    tile[17, 5] = c17_5
    tile[18, 5] = c18_5
    tile[19, 5] = c19_5
    tile[20, 5] = c20_5
    tile[21, 5] = c21_5
    tile[22, 5] = c22_5
    tile[23, 5] = c23_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[8, 6] = c8_6
    tile[9, 6] = c9_6
    tile[10, 6] = c10_6
    tile[11, 6] = c11_6
    tile[12, 6] = c12_6
    tile[13, 6] = c13_6
    tile[14, 6] = c14_6
    tile[15, 6] = c15_6
    tile[16, 6] = c16_6
    tile[17, 6] = c17_6
    tile[18, 6] = c18_6
    tile[19, 6] = c19_6
    tile[20, 6] = c20_6
    tile[21, 6] = c21_6
    tile[22, 6] = c22_6
    tile[23, 6] = c23_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7
    tile[8, 7] = c8_7
    tile[9, 7] = c9_7
    tile[10, 7] = c10_7
    tile[11, 7] = c11_7
    tile[12, 7] = c12_7
    tile[13, 7] = c13_7
    tile[14, 7] = c14_7
    tile[15, 7] = c15_7
    tile[16, 7] = c16_7
    tile[17, 7] = c17_7
    tile[18, 7] = c18_7
    tile[19, 7] = c19_7
    tile[20, 7] = c20_7
    tile[21, 7] = c21_7
    tile[22, 7] = c22_7
    tile[23, 7] = c23_7


@njit(cache=True)
def nt_pp_sub(sel, kmax, A, aoff, sda, ma, B, boff, tile):
    if sel == 0:
        nt_pp_sub_4x4(kmax, A, aoff, sda, ma, B, boff, tile)
    elif sel == 1:
        nt_pp_sub_8x4(kmax, A, aoff, sda, ma, B, boff, tile)
    elif sel == 2:
        nt_pp_sub_12x4(kmax, A, aoff, sda, ma, B, boff, tile)
    elif sel == 3:
        nt_pp_sub_8x8(kmax, A, aoff, sda, ma, B, boff, tile)
    elif sel == 4:
        nt_pp_sub_16x8(kmax, A, aoff, sda, ma, B, boff, tile)
    elif sel == 5:
        nt_pp_sub_24x8(kmax, A, aoff, sda, ma, B, boff, tile)


@njit(cache=True)
def nn_pp_4x4(kmax, A, aoff, sda, ma, B, boff, sdb, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        pb = boff + (l // 4) * sdb + (l % 4)
        b = B[pb + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        b = B[pb + 4]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        b = B[pb + 8]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        b = B[pb + 12]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3


@njit(cache=True)
def nn_pp_8x4(kmax, A, aoff, sda, ma, B, boff, sdb, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        a4 = A[pa1 + l * 4 + 0]
        a5 = A[pa1 + l * 4 + 1]
        a6 = A[pa1 + l * 4 + 2]
        a7 = A[pa1 + l * 4 + 3]
        pb = boff + (l // 4) * sdb + (l % 4)
        b = B[pb + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        b = B[pb + 4]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        b = B[pb + 8]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        b = B[pb + 12]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3


@njit(cache=True)
def nn_pp_12x4(kmax, A, aoff, sda, ma, B, boff, sdb, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    pa2 = aoff + min(2, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        a4 = A[pa1 + l * 4 + 0]
        a5 = A[pa1 + l * 4 + 1]
        a6 = A[pa1 + l * 4 + 2]
        a7 = A[pa1 + l * 4 + 3]
        a8 = A[pa2 + l * 4 + 0]
        a9 = A[pa2 + l * 4 + 1]
        a10 = A[pa2 + l * 4 + 2]
        a11 = A[pa2 + l * 4 + 3]
        pb = boff + (l // 4) * sdb + (l % 4)
        b = B[pb + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        b = B[pb + 4]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        b = B[pb + 8]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        b = B[pb + 12]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3


@njit(cache=True)
def nn_pp_8x8(kmax, A, aoff, sda, ma, B, boff, sdb, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        pb = boff + (l // 8) * sdb + (l % 8)
        b = B[pb + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        b = B[pb + 8]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        b = B[pb + 16]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        b = B[pb + 24]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        b = B[pb + 32]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        b = B[pb + 40]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        b = B[pb + 48]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        b = B[pb + 56]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7


@njit(cache=True)
def nn_pp_16x8(kmax, A, aoff, sda, ma, B, boff, sdb, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c12_0 = tile[12, 0]
    c13_0 = tile[13, 0]
    c14_0 = tile[14, 0]
    c15_0 = tile[15, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c12_1 = tile[12, 1]
    c13_1 = tile[13, 1]
    c14_1 = tile[14, 1]
    c15_1 = tile[15, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c12_2 = tile[12, 2]
    c13_2 = tile[13, 2]
    c14_2 = tile[14, 2]
    c15_2 = tile[15, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    c12_3 = tile[12, 3]
    c13_3 = tile[13, 3]
    c14_3 = tile[14, 3]
    c15_3 = tile[15, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c8_4 = tile[8, 4]
    c9_4 = tile[9, 4]
    c10_4 = tile[10, 4]
    c11_4 = tile[11, 4]
    c12_4 = tile[12, 4]
    c13_4 = tile[13, 4]
    c14_4 = tile[14, 4]
    c15_4 = tile[15, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c8_5 = tile[8, 5]
    c9_5 = tile[9, 5]
    c10_5 = tile[10, 5]
    c11_5 = tile[11, 5]
    c12_5 = tile[12, 5]
    c13_5 = tile[13, 5]
    c14_5 = tile[14, 5]
    c15_5 = tile[15, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c8_6 = tile[8, 6]
    c9_6 = tile[9, 6]
    c10_6 = tile[10, 6]
    c11_6 = tile[11, 6]
    c12_6 = tile[12, 6]
    c13_6 = tile[13, 6]
    c14_6 = tile[14, 6]
    c15_6 = tile[15, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    c8_7 = tile[8, 7]
    c9_7 = tile[9, 7]
    c10_7 = tile[10, 7]
    c11_7 = tile[11, 7]
    c12_7 = tile[12, 7]
    c13_7 = tile[13, 7]
    c14_7 = tile[14, 7]
    c15_7 = tile[15, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        a8 = A[pa1 + l * 8 + 0]
        a9 = A[pa1 + l * 8 + 1]
        a10 = A[pa1 + l * 8 + 2]
        a11 = A[pa1 + l * 8 + 3]
        a12 = A[pa1 + l * 8 + 4]
        a13 = A[pa1 + l * 8 + 5]
        a14 = A[pa1 + l * 8 + 6]
        a15 = A[pa1 + l * 8 + 7]
        pb = boff + (l // 8) * sdb + (l % 8)
        b = B[pb + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        c12_0 += a12 * b
        c13_0 += a13 * b
        c14_0 += a14 * b
        c15_0 += a15 * b
        b = B[pb + 8]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        c12_1 += a12 * b
        c13_1 += a13 * b
        c14_1 += a14 * b
        c15_1 += a15 * b
        b = B[pb + 16]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        c12_2 += a12 * b
        c13_2 += a13 * b
        c14_2 += a14 * b
        c15_2 += a15 * b
        b = B[pb + 24]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
        c12_3 += a12 * b
        c13_3 += a13 * b
        c14_3 += a14 * b
        c15_3 += a15 * b
        b = B[pb + 32]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        c8_4 += a8 * b
        c9_4 += a9 * b
        c10_4 += a10 * b
        c11_4 += a11 * b
        c12_4 += a12 * b
        c13_4 += a13 * b
        c14_4 += a14 * b
        c15_4 += a15 * b
        b = B[pb + 40]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        c8_5 += a8 * b
        c9_5 += a9 * b
        c10_5 += a10 * b
        c11_5 += a11 * b
        c12_5 += a12 * b
        c13_5 += a13 * b
        c14_5 += a14 * b
        c15_5 += a15 * b
        b = B[pb + 48]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        c8_6 += a8 * b
        c9_6 += a9 * b
        c10_6 += a10 * b
        c11_6 += a11 * b
        c12_6 += a12 * b
        c13_6 += a13 * b
        c14_6 += a14 * b
        c15_6 += a15 * b
        b = B[pb + 56]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
        c8_7 += a8 * b
        c9_7 += a9 * b
        c10_7 += a10 * b
        c11_7 += a11 * b
        c12_7 += a12 * b
        c13_7 += a13 * b
        c14_7 += a14 * b
        c15_7 += a15 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[12, 0] = c12_0
    tile[13, 0] = c13_0
    tile[14, 0] = c14_0
    tile[15, 0] = c15_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[12, 1] = c12_1
    tile[13, 1] = c13_1
    tile[14, 1] = c14_1
    tile[15, 1] = c15_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[12, 2] = c12_2
    tile[13, 2] = c13_2
    tile[14, 2] = c14_2
    tile[15, 2] = c15_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3
    tile[12, 3] = c12_3
    tile[13, 3] = c13_3
    tile[14, 3] = c14_3
    tile[15, 3] = c15_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[8, 4] = c8_4
    tile[9, 4] = c9_4
    tile[10, 4] = c10_4
    tile[11, 4] = c11_4
    tile[12, 4] = c12_4
    tile[13, 4] = c13_4
    tile[14, 4] = c14_4
    tile[15, 4] = c15_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[8, 5] = c8_5
    tile[9, 5] = c9_5
    tile[10, 5] = c10_5
    tile[11, 5] = c11_5
    tile[12, 5] = c12_5
    tile[13, 5] = c13_5
    tile[14, 5] = c14_5
    tile[15, 5] = c15_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[8, 6] = c8_6
    tile[9, 6] = c9_6
    tile[10, 6] = c10_6
    tile[11, 6] = c11_6
    tile[12, 6] = c12_6
    tile[13, 6] = c13_6
    tile[14, 6] = c14_6
    tile[15, 6] = c15_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7
    tile[8, 7] = c8_7
    tile[9, 7] = c9_7
    tile[10, 7] = c10_7
    tile[11, 7] = c11_7
    tile[12, 7] = c12_7
    tile[13, 7] = c13_7
    tile[14, 7] = c14_7
    tile[15, 7] = c15_7


@njit(cache=True)
def nn_pp_24x8(kmax, A, aoff, sda, ma, B, boff, sdb, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    pa2 = aoff + min(2, mp - 1) * sda
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c12_0 = tile[12, 0]
    c13_0 = tile[13, 0]
    c14_0 = tile[14, 0]
    c15_0 = tile[15, 0]
    c16_0 = tile[16, 0]
    c17_0 = tile[17, 0]
    c18_0 = tile[18, 0]
    c19_0 = tile[19, 0]
    c20_0 = tile[20, 0]
    c21_0 = tile[21, 0]
    c22_0 = tile[22, 0]
    c23_0 = tile[23, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c12_1 = tile[12, 1]
    c13_1 = tile[13, 1]
    c14_1 = tile[14, 1]
    c15_1 = tile[15, 1]
    c16_1 = tile[16, 1]
    c17_1 = tile[17, 1]
    c18_1 = tile[18, 1]
    c19_1 = tile[19, 1]
    c20_1 = tile[20, 1]
    c21_1 = tile[21, 1]
    c22_1 = tile[22, 1]
    c23_1 = tile[23, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c12_2 = tile[12, 2]
    c13_2 = tile[13, 2]
    c14_2 = tile[14, 2]
    c15_2 = tile[15, 2]
    c16_2 = tile[16, 2]
    c17_2 = tile[17, 2]
    c18_2 = tile[18, 2]
    c19_2 = tile[19, 2]
    c20_2 = tile[20, 2]
    c21_2 = tile[21, 2]
    c22_2 = tile[22, 2]
    c23_2 = tile[23, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    c12_3 = tile[12, 3]
    c13_3 = tile[13, 3]
    c14_3 = tile[14, 3]
    c15_3 = tile[15, 3]
    c16_3 = tile[16, 3]
    c17_3 = tile[17, 3]
    c18_3 = tile[18, 3]
    c19_3 = tile[19, 3]
    c20_3 = tile[20, 3]
    c21_3 = tile[21, 3]
    c22_3 = tile[22, 3]
    c23_3 = tile[23, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c8_4 = tile[8, 4]
    c9_4 = tile[9, 4]
    c10_4 = tile[10, 4]
    c11_4 = tile[11, 4]
    c12_4 = tile[12, 4]
    c13_4 = tile[13, 4]
    c14_4 = tile[14, 4]
    c15_4 = tile[15, 4]
    c16_4 = tile[16, 4]
    c17_4 = tile[17, 4]
    c18_4 = tile[18, 4]
    c19_4 = tile[19, 4]
    c20_4 = tile[20, 4]
    c21_4 = tile[21, 4]
    c22_4 = tile[22, 4]
    c23_4 = tile[23, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c8_5 = tile[8, 5]
    c9_5 = tile[9, 5]
    c10_5 = tile[10, 5]
    c11_5 = tile[11, 5]
    c12_5 = tile[12, 5]
    c13_5 = tile[13, 5]
    c14_5 = tile[14, 5]
    c15_5 = tile[15, 5]
    c16_5 = tile[16, 5]
    c17_5 = tile[17, 5]
    c18_5 = tile[18, 5]
    c19_5 = tile[19, 5]
    c20_5 = tile[20, 5]
    c21_5 = tile[21, 5]
    c22_5 = tile[22, 5]
    c23_5 = tile[23, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c8_6 = tile[8, 6]
    c9_6 = tile[9, 6]
    c10_6 = tile[10, 6]
    c11_6 = tile[11, 6]
    c12_6 = tile[12, 6]
    c13_6 = tile[13, 6]
    c14_6 = tile[14, 6]
    c15_6 = tile[15, 6]
    c16_6 = tile[16, 6]
    c17_6 = tile[17, 6]
    c18_6 = tile[18, 6]
    c19_6 = tile[19, 6]
    c20_6 = tile[20, 6]
    c21_6 = tile[21, 6]
    c22_6 = tile[22, 6]
    c23_6 = tile[23, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    c8_7 = tile[8, 7]
    c9_7 = tile[9, 7]
    c10_7 = tile[10, 7]
    c11_7 = tile[11, 7]
    c12_7 = tile[12, 7]
    c13_7 = tile[13, 7]
    c14_7 = tile[14, 7]
    c15_7 = tile[15, 7]
    c16_7 = tile[16, 7]
    c17_7 = tile[17, 7]
    c18_7 = tile[18, 7]
    c19_7 = tile[19, 7]
    c20_7 = tile[20, 7]
    c21_7 = tile[21, 7]
    c22_7 = tile[22, 7]
    c23_7 = tile[23, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        a8 = A[pa1 + l * 8 + 0]
        a9 = A[pa1 + l * 8 + 1]
        a10 = A[pa1 + l * 8 + 2]
        a11 = A[pa1 + l * 8 + 3]
        a12 = A[pa1 + l * 8 + 4]
        a13 = A[pa1 + l * 8 + 5]
        a14 = A[pa1 + l * 8 + 6]
        a15 = A[pa1 + l * 8 + 7]
        a16 = A[pa2 + l * 8 + 0]
        a17 = A[pa2 + l * 8 + 1]
        a18 = A[pa2 + l * 8 + 2]
        a19 = A[pa2 + l * 8 + 3]
        a20 = A[pa2 + l * 8 + 4]
        a21 = A[pa2 + l * 8 + 5]
        a22 = A[pa2 + l * 8 + 6]
        a23 = A[pa2 + l * 8 + 7]
        pb = boff + (l // 8) * sdb + (l % 8)
        b = B[pb + 0]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        c12_0 += a12 * b
        c13_0 += a13 * b
        c14_0 += a14 * b
        c15_0 += a15 * b
        c16_0 += a16 * b
        c17_0 += a17 * b
        c18_0 += a18 * b
        c19_0 += a19 * b
        c20_0 += a20 * b
        c21_0 += a21 * b
        c22_0 += a22 * b
        c23_0 += a23 * b
        b = B[pb + 8]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        c12_1 += a12 * b
        c13_1 += a13 * b
        c14_1 += a14 * b
        c15_1 += a15 * b
        c16_1 += a16 * b
        c17_1 += a17 * b
        c18_1 += a18 * b
        c19_1 += a19 * b
        c20_1 += a20 * b
        c21_1 += a21 * b
        c22_1 += a22 * b
        c23_1 += a23 * b
        b = B[pb + 16]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        c12_2 += a12 * b
        c13_2 += a13 * b
        c14_2 += a14 * b
        c15_2 += a15 * b
        c16_2 += a16 * b
        c17_2 += a17 * b
        c18_2 += a18 * b
        c19_2 += a19 * b
        c20_2 += a20 * b
        c21_2 += a21 * b
        c22_2 += a22 * b
        c23_2 += a23 * b
        b = B[pb + 24]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
        c12_3 += a12 * b
        c13_3 += a13 * b
        c14_3 += a14 * b
        c15_3 += a15 * b
        c16_3 += a16 * b
        c17_3 += a17 * b
        c18_3 += a18 * b
        c19_3 += a19 * b
        c20_3 += a20 * b
        c21_3 += a21 * b
        c22_3 += a22 * b
        c23_3 += a23 * b
        b = B[pb + 32]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        c8_4 += a8 * b
        c9_4 += a9 * b
        c10_4 += a10 * b
        c11_4 += a11 * b
        c12_4 += a12 * b
        c13_4 += a13 * b
        c14_4 += a14 * b
        c15_4 += a15 * b
        c16_4 += a16 * b
        c17_4 += a17 * b
        c18_4 += a18 * b
        c19_4 += a19 * b
        c20_4 += a20 * b
        c21_4 += a21 * b
        c22_4 += a22 * b
        c23_4 += a23 * b
        b = B[pb + 40]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        c8_5 += a8 * b
        c9_5 += a9 * b
        c10_5 += a10 * b
        c11_5 += a11 * b
        c12_5 += a12 * b
        c13_5 += a13 * b
        c14_5 += a14 * b
        c15_5 += a15 * b
        c16_5 += a16 * b
        c17_5 += a17 * b
        c18_5 += a18 * b
        c19_5 += a19 * b
        c20_5 += a20 * b
        c21_5 += a21 * b
        c22_5 += a22 * b
        c23_5 += a23 * b
        b = B[pb + 48]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        c8_6 += a8 * b
        c9_6 += a9 * b
        c10_6 += a10 * b
        c11_6 += a11 * b
        c12_6 += a12 * b
        c13_6 += a13 * b
        c14_6 += a14 * b
        c15_6 += a15 * b
        c16_6 += a16 * b
        c17_6 += a17 * b
        c18_6 += a18 * b
        c19_6 += a19 * b
        c20_6 += a20 * b
        c21_6 += a21 * b
        c22_6 += a22 * b
        c23_6 += a23 * b
        b = B[pb + 56]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
        c8_7 += a8 * b
        c9_7 += a9 * b
        c10_7 += a10 * b
        c11_7 += a11 * b
        c12_7 += a12 * b
        c13_7 += a13 * b
        c14_7 += a14 * b
        c15_7 += a15 * b
        c16_7 += a16 * b
        c17_7 += a17 * b
        c18_7 += a18 * b
        c19_7 += a19 * b
        c20_7 += a20 * b
        c21_7 += a21 * b
        c22_7 += a22 * b
        c23_7 += a23 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[12, 0] = c12_0
    tile[13, 0] = c13_0
    tile[14, 0] = c14_0
    tile[15, 0] = c15_0
    tile[16, 0] = c16_0
    tile[17, 0] = c17_0
    tile[18, 0] = c18_0
    tile[19, 0] = c19_0
    tile[20, 0] = c20_0
    tile[21, 0] = c21_0
    tile[22, 0] = c22_0
    tile[23, 0] = c23_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[12, 1] = c12_1
    tile[13, 1] = c13_1
    tile[14, 1] = c14_1
    tile[15, 1] = c15_1
    tile[16, 1] = c16_1
    tile[17, 1] = c17_1
    tile[18, 1] = c18_1
    tile[19, 1] = c19_1
    tile[20, 1] = c20_1
    tile[21, 1] = c21_1
    tile[22, 1] = c22_1
    tile[23, 1] = c23_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[12, 2] = c12_2
    tile[13, 2] = c13_2
    tile[14, 2] = c14_2
    tile[15, 2] = c15_2
    tile[16, 2] = c16_2
    tile[17, 2] = c17_2
    tile[18, 2] = c18_2
    tile[19, 2] = c19_2
    tile[20, 2] = c20_2
    tile[21, 2] = c21_2
    tile[22, 2] = c22_2
    tile[23, 2] = c23_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3
    tile[12, 3] = c12_3
    tile[13, 3] = c13_3
    tile[14, 3] = c14_3
    tile[15, 3] = c15_3
    tile[16, 3] = c16_3
    tile[17, 3] = c17_3
    tile[18, 3] = c18_3
    tile[19, 3] = c19_3
    tile[20, 3] = c20_3
    tile[21, 3] = c21_3
    tile[22, 3] = c22_3
    tile[23, 3] = c23_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[8, 4] = c8_4
    tile[9, 4] = c9_4
    tile[10, 4] = c10_4
    tile[11, 4] = c11_4
    tile[12, 4] = c12_4
    tile[13, 4] = c13_4
    tile[14, 4] = c14_4
    tile[15, 4] = c15_4
    tile[16, 4] = c16_4
    tile[17, 4] = c17_4
    tile[18, 4] = c18_4
    tile[19, 4] = c19_4
    tile[20, 4] = c20_4
    tile[21, 4] = c21_4
    tile[22, 4] = c22_4
    tile[23, 4] = c23_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[8, 5] = c8_5
    tile[9, 5] = c9_5
    tile[10, 5] = c10_5
    tile[11, 5] = c11_5
    tile[12, 5] = c12_5
    tile[13, 5] = c13_5
    tile[14, 5] = c14_5
    tile[15, 5] = c15_5
    tile[16, 5] = c16_5
    tile[17, 5] = c17_5
    tile[18, 5] = c18_5
    tile[19, 5] = c19_5
    tile[20, 5] = c20_5
    tile[21, 5] = c21_5
    tile[22, 5] = c22_5
    tile[23, 5] = c23_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[8, 6] = c8_6
    tile[9, 6] = c9_6
    tile[10, 6] = c10_6
    tile[11, 6] = c11_6
    tile[12, 6] = c12_6
    tile[13, 6] = c13_6
    tile[14, 6] = c14_6
    tile[15, 6] = c15_6
    tile[16, 6] = c16_6
    tile[17, 6] = c17_6
    tile[18, 6] = c18_6
    tile[19, 6] = c19_6
    tile[20, 6] = c20_6
    tile[21, 6] = c21_6
    tile[22, 6] = c22_6
    tile[23, 6] = c23_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7
    tile[8, 7] = c8_7
    tile[9, 7] = c9_7
    tile[10, 7] = c10_7
    tile[11, 7] = c11_7
    tile[12, 7] = c12_7
    tile[13, 7] = c13_7
    tile[14, 7] = c14_7
    tile[15, 7] = c15_7
    tile[16, 7] = c16_7
    tile[17, 7] = c17_7
    tile[18, 7] = c18_7
    tile[19, 7] = c19_7
    tile[20, 7] = c20_7
    tile[21, 7] = c21_7
    tile[22, 7] = c22_7
    tile[23, 7] = c23_7


@njit(cache=True)
def nn_pp(sel, kmax, A, aoff, sda, ma, B, boff, sdb, tile):
    if sel == 0:
        nn_pp_4x4(kmax, A, aoff, sda, ma, B, boff, sdb, tile)
    elif sel == 1:
        nn_pp_8x4(kmax, A, aoff, sda, ma, B, boff, sdb, tile)
    elif sel == 2:
        nn_pp_12x4(kmax, A, aoff, sda, ma, B, boff, sdb, tile)
    elif sel == 3:
        nn_pp_8x8(kmax, A, aoff, sda, ma, B, boff, sdb, tile)
    elif sel == 4:
        nn_pp_16x8(kmax, A, aoff, sda, ma, B, boff, sdb, tile)
    elif sel == 5:
        nn_pp_24x8(kmax, A, aoff, sda, ma, B, boff, sdb, tile)


@njit(cache=True)
def pc_4x4(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        b = B[pb0 + l * sl]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        b = B[pb1 + l * sl]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        b = B[pb2 + l * sl]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        b = B[pb3 + l * sl]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3


@njit(cache=True)
def pc_8x4(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        a4 = A[pa1 + l * 4 + 0]
        a5 = A[pa1 + l * 4 + 1]
        a6 = A[pa1 + l * 4 + 2]
        a7 = A[pa1 + l * 4 + 3]
        b = B[pb0 + l * sl]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        b = B[pb1 + l * sl]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        b = B[pb2 + l * sl]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        b = B[pb3 + l * sl]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3


@njit(cache=True)
def pc_12x4(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile):
    mp = (ma + 3) // 4
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    pa2 = aoff + min(2, mp - 1) * sda
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * 4 + 0]
        a1 = A[pa0 + l * 4 + 1]
        a2 = A[pa0 + l * 4 + 2]
        a3 = A[pa0 + l * 4 + 3]
        a4 = A[pa1 + l * 4 + 0]
        a5 = A[pa1 + l * 4 + 1]
        a6 = A[pa1 + l * 4 + 2]
        a7 = A[pa1 + l * 4 + 3]
        a8 = A[pa2 + l * 4 + 0]
        a9 = A[pa2 + l * 4 + 1]
        a10 = A[pa2 + l * 4 + 2]
        a11 = A[pa2 + l * 4 + 3]
        b = B[pb0 + l * sl]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        b = B[pb1 + l * sl]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        b = B[pb2 + l * sl]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        b = B[pb3 + l * sl]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3


@njit(cache=True)
def pc_8x8(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    pb4 = boff + min(4, na - 1) * sj
    pb5 = boff + min(5, na - 1) * sj
    pb6 = boff + min(6, na - 1) * sj
    pb7 = boff + min(7, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        b = B[pb0 + l * sl]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        b = B[pb1 + l * sl]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        b = B[pb2 + l * sl]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        b = B[pb3 + l * sl]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        b = B[pb4 + l * sl]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        b = B[pb5 + l * sl]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        b = B[pb6 + l * sl]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        b = B[pb7 + l * sl]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7


@njit(cache=True)
def pc_16x8(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    pb4 = boff + min(4, na - 1) * sj
    pb5 = boff + min(5, na - 1) * sj
    pb6 = boff + min(6, na - 1) * sj
    pb7 = boff + min(7, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c12_0 = tile[12, 0]
    c13_0 = tile[13, 0]
    c14_0 = tile[14, 0]
    c15_0 = tile[15, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c12_1 = tile[12, 1]
    c13_1 = tile[13, 1]
    c14_1 = tile[14, 1]
    c15_1 = tile[15, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c12_2 = tile[12, 2]
    c13_2 = tile[13, 2]
    c14_2 = tile[14, 2]
    c15_2 = tile[15, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    c12_3 = tile[12, 3]
    c13_3 = tile[13, 3]
    c14_3 = tile[14, 3]
    c15_3 = tile[15, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c8_4 = tile[8, 4]
    c9_4 = tile[9, 4]
    c10_4 = tile[10, 4]
    c11_4 = tile[11, 4]
    c12_4 = tile[12, 4]
    c13_4 = tile[13, 4]
    c14_4 = tile[14, 4]
    c15_4 = tile[15, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c8_5 = tile[8, 5]
    c9_5 = tile[9, 5]
    c10_5 = tile[10, 5]
    c11_5 = tile[11, 5]
    c12_5 = tile[12, 5]
    c13_5 = tile[13, 5]
    c14_5 = tile[14, 5]
    c15_5 = tile[15, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c8_6 = tile[8, 6]
    c9_6 = tile[9, 6]
    c10_6 = tile[10, 6]
    c11_6 = tile[11, 6]
    c12_6 = tile[12, 6]
    c13_6 = tile[13, 6]
    c14_6 = tile[14, 6]
    c15_6 = tile[15, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    c8_7 = tile[8, 7]
    c9_7 = tile[9, 7]
    c10_7 = tile[10, 7]
    c11_7 = tile[11, 7]
    c12_7 = tile[12, 7]
    c13_7 = tile[13, 7]
    c14_7 = tile[14, 7]
    c15_7 = tile[15, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        a8 = A[pa1 + l * 8 + 0]
        a9 = A[pa1 + l * 8 + 1]
        a10 = A[pa1 + l * 8 + 2]
        a11 = A[pa1 + l * 8 + 3]
        a12 = A[pa1 + l * 8 + 4]
        a13 = A[pa1 + l * 8 + 5]
        a14 = A[pa1 + l * 8 + 6]
        a15 = A[pa1 + l * 8 + 7]
        b = B[pb0 + l * sl]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        c12_0 += a12 * b
        c13_0 += a13 * b
        c14_0 += a14 * b
        c15_0 += a15 * b
        b = B[pb1 + l * sl]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        c12_1 += a12 * b
        c13_1 += a13 * b
        c14_1 += a14 * b
        c15_1 += a15 * b
        b = B[pb2 + l * sl]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        c12_2 += a12 * b
        c13_2 += a13 * b
        c14_2 += a14 * b
        c15_2 += a15 * b
        b = B[pb3 + l * sl]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
        c12_3 += a12 * b
        c13_3 += a13 * b
        c14_3 += a14 * b
        c15_3 += a15 * b
        b = B[pb4 + l * sl]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        c8_4 += a8 * b
        c9_4 += a9 * b
        c10_4 += a10 * b
        c11_4 += a11 * b
        c12_4 += a12 * b
        c13_4 += a13 * b
        c14_4 += a14 * b
        c15_4 += a15 * b
        b = B[pb5 + l * sl]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        c8_5 += a8 * b
        c9_5 += a9 * b
        c10_5 += a10 * b
        c11_5 += a11 * b
        c12_5 += a12 * b
        c13_5 += a13 * b
        c14_5 += a14 * b
        c15_5 += a15 * b
        b = B[pb6 + l * sl]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        c8_6 += a8 * b
        c9_6 += a9 * b
        c10_6 += a10 * b
        c11_6 += a11 * b
        c12_6 += a12 * b
        c13_6 += a13 * b
        c14_6 += a14 * b
        c15_6 += a15 * b
        b = B[pb7 + l * sl]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
        c8_7 += a8 * b
        c9_7 += a9 * b
        c10_7 += a10 * b
        c11_7 += a11 * b
        c12_7 += a12 * b
        c13_7 += a13 * b
        c14_7 += a14 * b
        c15_7 += a15 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[12, 0] = c12_0
    tile[13, 0] = c13_0
    tile[14, 0] = c14_0
    tile[15, 0] = c15_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[12, 1] = c12_1
    tile[13, 1] = c13_1
    tile[14, 1] = c14_1
    tile[15, 1] = c15_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[12, 2] = c12_2
    tile[13, 2] = c13_2
    tile[14, 2] = c14_2
    tile[15, 2] = c15_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3
    tile[12, 3] = c12_3
    tile[13, 3] = c13_3
    tile[14, 3] = c14_3
    tile[15, 3] = c15_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[8, 4] = c8_4
    tile[9, 4] = c9_4
    tile[10, 4] = c10_4
    tile[11, 4] = c11_4
    tile[12, 4] = c12_4
    tile[13, 4] = c13_4
    tile[14, 4] = c14_4
    tile[15, 4] = c15_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[8, 5] = c8_5
    tile[9, 5] = c9_5
    tile[10, 5] = c10_5
    tile[11, 5] = c11_5
    tile[12, 5] = c12_5
    tile[13, 5] = c13_5
    tile[14, 5] = c14_5
    tile[15, 5] = c15_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[8, 6] = c8_6
    tile[9, 6] = c9_6
    tile[10, 6] = c10_6
    tile[11, 6] = c11_6
    tile[12, 6] = c12_6
    tile[13, 6] = c13_6
    tile[14, 6] = c14_6
    tile[15, 6] = c15_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7
    tile[8, 7] = c8_7
    tile[9, 7] = c9_7
    tile[10, 7] = c10_7
    tile[11, 7] = c11_7
    tile[12, 7] = c12_7
    tile[13, 7] = c13_7
    tile[14, 7] = c14_7
    tile[15, 7] = c15_7


@njit(cache=True)
def pc_24x8(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile):
    mp = (ma + 7) // 8
    pa0 = aoff + min(0, mp - 1) * sda
    pa1 = aoff + min(1, mp - 1) * sda
    pa2 = aoff + min(2, mp - 1) * sda
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    pb4 = boff + min(4, na - 1) * sj
    pb5 = boff + min(5, na - 1) * sj
    pb6 = boff + min(6, na - 1) * sj
    pb7 = boff + min(7, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c12_0 = tile[12, 0]
    c13_0 = tile[13, 0]
    c14_0 = tile[14, 0]
    c15_0 = tile[15, 0]
    c16_0 = tile[16, 0]
    c17_0 = tile[17, 0]
    c18_0 = tile[18, 0]
    c19_0 = tile[19, 0]
    c20_0 = tile[20, 0]
    c21_0 = tile[21, 0]
    c22_0 = tile[22, 0]
    c23_0 = tile[23, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c12_1 = tile[12, 1]
    c13_1 = tile[13, 1]
    c14_1 = tile[14, 1]
    c15_1 = tile[15, 1]
    c16_1 = tile[16, 1]
    c17_1 = tile[17, 1]
    c18_1 = tile[18, 1]
    c19_1 = tile[19, 1]
    c20_1 = tile[20, 1]
    c21_1 = tile[21, 1]
    c22_1 = tile[22, 1]
    c23_1 = tile[23, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c12_2 = tile[12, 2]
    c13_2 = tile[13, 2]
    c14_2 = tile[14, 2]
    c15_2 = tile[15, 2]
    c16_2 = tile[16, 2]
    c17_2 = tile[17, 2]
    c18_2 = tile[18, 2]
    c19_2 = tile[19, 2]
    c20_2 = tile[20, 2]
    c21_2 = tile[21, 2]
    c22_2 = tile[22, 2]
    c23_2 = tile[23, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    c12_3 = tile[12, 3]
    c13_3 = tile[13, 3]
    c14_3 = tile[14, 3]
    c15_3 = tile[15, 3]
    c16_3 = tile[16, 3]
    c17_3 = tile[17, 3]
    c18_3 = tile[18, 3]
    c19_3 = tile[19, 3]
    c20_3 = tile[20, 3]
    c21_3 = tile[21, 3]
    c22_3 = tile[22, 3]
    c23_3 = tile[23, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c8_4 = tile[8, 4]
    c9_4 = tile[9, 4]
    c10_4 = tile[10, 4]
    c11_4 = tile[11, 4]
    c12_4 = tile[12, 4]
    c13_4 = tile[13, 4]
    c14_4 = tile[14, 4]
    c15_4 = tile[15, 4]
    c16_4 = tile[16, 4]
    c17_4 = tile[17, 4]
    c18_4 = tile[18, 4]
    c19_4 = tile[19, 4]
    c20_4 = tile[20, 4]
    c21_4 = tile[21, 4]
    c22_4 = tile[22, 4]
    c23_4 = tile[23, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c8_5 = tile[8, 5]
    c9_5 = tile[9, 5]
    c10_5 = tile[10, 5]
    c11_5 = tile[11, 5]
    c12_5 = tile[12, 5]
    c13_5 = tile[13, 5]
    c14_5 = tile[14, 5]
    c15_5 = tile[15, 5]
    c16_5 = tile[16, 5]
    c17_5 = tile[17, 5]
    c18_5 = tile[18, 5]
    c19_5 = tile[19, 5]
    c20_5 = tile[20, 5]
    c21_5 = tile[21, 5]
    c22_5 = tile[22, 5]
    c23_5 = tile[23, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c8_6 = tile[8, 6]
    c9_6 = tile[9, 6]
    c10_6 = tile[10, 6]
    c11_6 = tile[11, 6]
    c12_6 = tile[12, 6]
    c13_6 = tile[13, 6]
    c14_6 = tile[14, 6]
    c15_6 = tile[15, 6]
    c16_6 = tile[16, 6]
    c17_6 = tile[17, 6]
    c18_6 = tile[18, 6]
    c19_6 = tile[19, 6]
    c20_6 = tile[20, 6]
    c21_6 = tile[21, 6]
    c22_6 = tile[22, 6]
    c23_6 = tile[23, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    c8_7 = tile[8, 7]
    c9_7 = tile[9, 7]
    c10_7 = tile[10, 7]
    c11_7 = tile[11, 7]
    c12_7 = tile[12, 7]
    c13_7 = tile[13, 7]
    c14_7 = tile[14, 7]
    c15_7 = tile[15, 7]
    c16_7 = tile[16, 7]
    c17_7 = tile[17, 7]
    c18_7 = tile[18, 7]
    c19_7 = tile[19, 7]
    c20_7 = tile[20, 7]
    c21_7 = tile[21, 7]
    c22_7 = tile[22, 7]
    c23_7 = tile[23, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * 8 + 0]
        a1 = A[pa0 + l * 8 + 1]
        a2 = A[pa0 + l * 8 + 2]
        a3 = A[pa0 + l * 8 + 3]
        a4 = A[pa0 + l * 8 + 4]
        a5 = A[pa0 + l * 8 + 5]
        a6 = A[pa0 + l * 8 + 6]
        a7 = A[pa0 + l * 8 + 7]
        a8 = A[pa1 + l * 8 + 0]
        a9 = A[pa1 + l * 8 + 1]
        a10 = A[pa1 + l * 8 + 2]
        a11 = A[pa1 + l * 8 + 3]
        a12 = A[pa1 + l * 8 + 4]
        a13 = A[pa1 + l * 8 + 5]
        a14 = A[pa1 + l * 8 + 6]
        a15 = A[pa1 + l * 8 + 7]
        a16 = A[pa2 + l * 8 + 0]
        a17 = A[pa2 + l * 8 + 1]
        a18 = A[pa2 + l * 8 + 2]
        a19 = A[pa2 + l * 8 + 3]
        a20 = A[pa2 + l * 8 + 4]
        a21 = A[pa2 + l * 8 + 5]
        a22 = A[pa2 + l * 8 + 6]
        a23 = A[pa2 + l * 8 + 7]
        b = B[pb0 + l * sl]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        c12_0 += a12 * b
        c13_0 += a13 * b
        c14_0 += a14 * b
        c15_0 += a15 * b
        c16_0 += a16 * b
        c17_0 += a17 * b
        c18_0 += a18 * b
        c19_0 += a19 * b
        c20_0 += a20 * b
        c21_0 += a21 * b
        c22_0 += a22 * b
        c23_0 += a23 * b
        b = B[pb1 + l * sl]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        c12_1 += a12 * b
        c13_1 += a13 * b
        c14_1 += a14 * b
        c15_1 += a15 * b
        c16_1 += a16 * b
        c17_1 += a17 * b
        c18_1 += a18 * b
        c19_1 += a19 * b
        c20_1 += a20 * b
        c21_1 += a21 * b
        c22_1 += a22 * b
        c23_1 += a23 * b
        b = B[pb2 + l * sl]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        c12_2 += a12 * b
        c13_2 += a13 * b
        c14_2 += a14 * b
        c15_2 += a15 * b
        c16_2 += a16 * b
        c17_2 += a17 * b
        c18_2 += a18 * b
        c19_2 += a19 * b
        c20_2 += a20 * b
        c21_2 += a21 * b
        c22_2 += a22 * b
        c23_2 += a23 * b
        b = B[pb3 + l * sl]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
        c12_3 += a12 * b
        c13_3 += a13 * b
        c14_3 += a14 * b
        c15_3 += a15 * b
        c16_3 += a16 * b
        c17_3 += a17 * b
        c18_3 += a18 * b
        c19_3 += a19 * b
        c20_3 += a20 * b
        c21_3 += a21 * b
        c22_3 += a22 * b
        c23_3 += a23 * b
        b = B[pb4 + l * sl]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        c8_4 += a8 * b
        c9_4 += a9 * b
        c10_4 += a10 * b
        c11_4 += a11 * b
        c12_4 += a12 * b
        c13_4 += a13 * b
        c14_4 += a14 * b
        c15_4 += a15 * b
        c16_4 += a16 * b
        c17_4 += a17 * b
        c18_4 += a18 * b
        c19_4 += a19 * b
        c20_4 += a20 * b
        c21_4 += a21 * b
        c22_4 += a22 * b
        c23_4 += a23 * b
        b = B[pb5 + l * sl]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        c8_5 += a8 * b
        c9_5 += a9 * b
        c10_5 += a10 * b
        c11_5 += a11 * b
        c12_5 += a12 * b
        c13_5 += a13 * b
        c14_5 += a14 * b
        c15_5 += a15 * b
        c16_5 += a16 * b
        c17_5 += a17 * b
        c18_5 += a18 * b
        c19_5 += a19 * b
        c20_5 += a20 * b
        c21_5 += a21 * b
        c22_5 += a22 * b
        c23_5 += a23 * b
        b = B[pb6 + l * sl]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        c8_6 += a8 * b
        c9_6 += a9 * b
        c10_6 += a10 * b
        c11_6 += a11 * b
        c12_6 += a12 * b
        c13_6 += a13 * b
        c14_6 += a14 * b
        c15_6 += a15 * b
        c16_6 += a16 * b
        c17_6 += a17 * b
        c18_6 += a18 * b
        c19_6 += a19 * b
        c20_6 += a20 * b
        c21_6 += a21 * b
        c22_6 += a22 * b
        c23_6 += a23 * b
        b = B[pb7 + l * sl]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
        c8_7 += a8 * b
        c9_7 += a9 * b
        c10_7 += a10 * b
        c11_7 += a11 * b
        c12_7 += a12 * b
        c13_7 += a13 * b
        c14_7 += a14 * b
        c15_7 += a15 * b
        c16_7 += a16 * b
        c17_7 += a17 * b
        c18_7 += a18 * b
        c19_7 += a19 * b
        c20_7 += a20 * b
        c21_7 += a21 * b
        c22_7 += a22 * b
        c23_7 += a23 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[12, 0] = c12_0
    tile[13, 0] = c13_0
    tile[14, 0] = c14_0
    tile[15, 0] = c15_0
    tile[16, 0] = c16_0
    tile[17, 0] = c17_0
    tile[18, 0] = c18_0
    tile[19, 0] = c19_0
    tile[20, 0] = c20_0
    tile[21, 0] = c21_0
    tile[22, 0] = c22_0
    tile[23, 0] = c23_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[12, 1] = c12_1
    tile[13, 1] = c13_1
    tile[14, 1] = c14_1
    tile[15, 1] = c15_1
    tile[16, 1] = c16_1
    tile[17, 1] = c17_1
    tile[18, 1] = c18_1
    tile[19, 1] = c19_1
    tile[20, 1] = c20_1
    tile[21, 1] = c21_1
    tile[22, 1] = c22_1
    tile[23, 1] = c23_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[12, 2] = c12_2
    tile[13, 2] = c13_2
    tile[14, 2] = c14_2
    tile[15, 2] = c15_2
    tile[16, 2] = c16_2
    tile[17, 2] = c17_2
    tile[18, 2] = c18_2
    tile[19, 2] = c19_2
    tile[20, 2] = c20_2
    tile[21, 2] = c21_2
    tile[22, 2] = c22_2
    tile[23, 2] = c23_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3
    tile[12, 3] = c12_3
    tile[13, 3] = c13_3
    tile[14, 3] = c14_3
    tile[15, 3] = c15_3
    tile[16, 3] = c16_3
    tile[17, 3] = c17_3
    tile[18, 3] = c18_3
    tile[19, 3] = c19_3
    tile[20, 3] = c20_3
    tile[21, 3] = c21_3
    tile[22, 3] = c22_3
    tile[23, 3] = c23_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[8, 4] = c8_4
    tile[9, 4] = c9_4
    tile[10, 4] = c10_4
    tile[11, 4] = c11_4
    tile[12, 4] = c12_4
    tile[13, 4] = c13_4
    tile[14, 4] = c14_4
    tile[15, 4] = c15_4
    tile[16, 4] = c16_4
    tile[17, 4] = c17_4
    tile[18, 4] = c18_4
    tile[19, 4] = c19_4
    tile[20, 4] = c20_4
    tile[21, 4] = c21_4
    tile[22, 4] = c22_4
    tile[23, 4] = c23_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[8, 5] = c8_5
    tile[9, 5] = c9_5
    tile[10, 5] = c10_5
    tile[11, 5] = c11_5
    tile[12, 5] = c12_5
    tile[13, 5] = c13_5
    tile[14, 5] = c14_5
    tile[15, 5] = c15_5
    tile[16, 5] = c16_5
    tile[17, 5] = c17_5
    tile[18, 5] = c18_5
    tile[19, 5] = c19_5
    tile[20, 5] = c20_5
    tile[21, 5] = c21_5
    tile[22, 5] = c22_5
    tile[23, 5] = c23_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[8, 6] = c8_6
    tile[9, 6] = c9_6
    tile[10, 6] = c10_6
    tile[11, 6] = c11_6
    tile[12, 6] = c12_6
    tile[13, 6] = c13_6
    tile[14, 6] = c14_6
    tile[15, 6] = c15_6
    tile[16, 6] = c16_6
    tile[17, 6] = c17_6
    tile[18, 6] = c18_6
    tile[19, 6] = c19_6
    tile[20, 6] = c20_6
    tile[21, 6] = c21_6
    tile[22, 6] = c22_6
    tile[23, 6] = c23_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7
    tile[8, 7] = c8_7
    tile[9, 7] = c9_7
    tile[10, 7] = c10_7
    tile[11, 7] = c11_7
    tile[12, 7] = c12_7
    tile[13, 7] = c13_7
    tile[14, 7] = c14_7
    tile[15, 7] = c15_7
    tile[16, 7] = c16_7
    tile[17, 7] = c17_7
    tile[18, 7] = c18_7
    tile[19, 7] = c19_7
    tile[20, 7] = c20_7
    tile[21, 7] = c21_7
    tile[22, 7] = c22_7
    tile[23, 7] = c23_7


@njit(cache=True)
def pc(sel, kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile):
    if sel == 0:
        pc_4x4(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile)
    elif sel == 1:
        pc_8x4(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile)
    elif sel == 2:
        pc_12x4(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile)
    elif sel == 3:
        pc_8x8(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile)
    elif sel == 4:
        pc_16x8(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile)
    elif sel == 5:
        pc_24x8(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile)


@njit(cache=True)
def cc_4x4(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile):
    pa0 = aoff + min(0, ma - 1) * si
    pa1 = aoff + min(1, ma - 1) * si
    pa2 = aoff + min(2, ma - 1) * si
    pa3 = aoff + min(3, ma - 1) * si
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * sla]
        a1 = A[pa1 + l * sla]
        a2 = A[pa2 + l * sla]
        a3 = A[pa3 + l * sla]
        b = B[pb0 + l * slb]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        b = B[pb1 + l * slb]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        b = B[pb2 + l * slb]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        b = B[pb3 + l * slb]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3


@njit(cache=True)
def cc_8x4(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile):
    pa0 = aoff + min(0, ma - 1) * si
    pa1 = aoff + min(1, ma - 1) * si
    pa2 = aoff + min(2, ma - 1) * si
    pa3 = aoff + min(3, ma - 1) * si
    pa4 = aoff + min(4, ma - 1) * si
    pa5 = aoff + min(5, ma - 1) * si
    pa6 = aoff + min(6, ma - 1) * si
    pa7 = aoff + min(7, ma - 1) * si
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * sla]
        a1 = A[pa1 + l * sla]
        a2 = A[pa2 + l * sla]
        a3 = A[pa3 + l * sla]
        a4 = A[pa4 + l * sla]
        a5 = A[pa5 + l * sla]
        a6 = A[pa6 + l * sla]
        a7 = A[pa7 + l * sla]
        b = B[pb0 + l * slb]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        b = B[pb1 + l * slb]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        b = B[pb2 + l * slb]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        b = B[pb3 + l * slb]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3


@njit(cache=True)
def cc_12x4(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile):
    pa0 = aoff + min(0, ma - 1) * si
    pa1 = aoff + min(1, ma - 1) * si
    pa2 = aoff + min(2, ma - 1) * si
    pa3 = aoff + min(3, ma - 1) * si
    pa4 = aoff + min(4, ma - 1) * si
    pa5 = aoff + min(5, ma - 1) * si
    pa6 = aoff + min(6, ma - 1) * si
    pa7 = aoff + min(7, ma - 1) * si
    pa8 = aoff + min(8, ma - 1) * si
    pa9 = aoff + min(9, ma - 1) * si
    pa10 = aoff + min(10, ma - 1) * si
    pa11 = aoff + min(11, ma - 1) * si
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    for l in range(kmax):
        a0 = A[pa0 + l * sla]
        a1 = A[pa1 + l * sla]
        a2 = A[pa2 + l * sla]
        a3 = A[pa3 + l * sla]
        a4 = A[pa4 + l * sla]
        a5 = A[pa5 + l * sla]
        a6 = A[pa6 + l * sla]
        a7 = A[pa7 + l * sla]
        a8 = A[pa8 + l * sla]
        a9 = A[pa9 + l * sla]
        a10 = A[pa10 + l * sla]
        a11 = A[pa11 + l * sla]
        b = B[pb0 + l * slb]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        b = B[pb1 + l * slb]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        b = B[pb2 + l * slb]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        b = B[pb3 + l * slb]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3


@njit(cache=True)
def cc_8x8(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile):
    pa0 = aoff + min(0, ma - 1) * si
    pa1 = aoff + min(1, ma - 1) * si
    pa2 = aoff + min(2, ma - 1) * si
    pa3 = aoff + min(3, ma - 1) * si
    pa4 = aoff + min(4, ma - 1) * si
    pa5 = aoff + min(5, ma - 1) * si
    pa6 = aoff + min(6, ma - 1) * si
    pa7 = aoff + min(7, ma - 1) * si
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    pb4 = boff + min(4, na - 1) * sj
    pb5 = boff + min(5, na - 1) * sj
    pb6 = boff + min(6, na - 1) * sj
    pb7 = boff + min(7, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * sla]
        a1 = A[pa1 + l * sla]
        a2 = A[pa2 + l * sla]
        a3 = A[pa3 + l * sla]
        a4 = A[pa4 + l * sla]
        a5 = A[pa5 + l * sla]
        a6 = A[pa6 + l * sla]
        a7 = A[pa7 + l * sla]
        b = B[pb0 + l * slb]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        b = B[pb1 + l * slb]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        b = B[pb2 + l * slb]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        b = B[pb3 + l * slb]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        b = B[pb4 + l * slb]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        b = B[pb5 + l * slb]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        b = B[pb6 + l * slb]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        b = B[pb7 + l * slb]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7


@njit(cache=True)
def cc_16x8(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile):
    pa0 = aoff + min(0, ma - 1) * si
    pa1 = aoff + min(1, ma - 1) * si
    pa2 = aoff + min(2, ma - 1) * si
    pa3 = aoff + min(3, ma - 1) * si
    pa4 = aoff + min(4, ma - 1) * si
    pa5 = aoff + min(5, ma - 1) * si
    pa6 = aoff + min(6, ma - 1) * si
    pa7 = aoff + min(7, ma - 1) * si
    pa8 = aoff + min(8, ma - 1) * si
    pa9 = aoff + min(9, ma - 1) * si
    pa10 = aoff + min(10, ma - 1) * si
    pa11 = aoff + min(11, ma - 1) * si
    pa12 = aoff + min(12, ma - 1) * si
    pa13 = aoff + min(13, ma - 1) * si
    pa14 = aoff + min(14, ma - 1) * si
    pa15 = aoff + min(15, ma - 1) * si
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    pb4 = boff + min(4, na - 1) * sj
    pb5 = boff + min(5, na - 1) * sj
    pb6 = boff + min(6, na - 1) * sj
    pb7 = boff + min(7, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c12_0 = tile[12, 0]
    c13_0 = tile[13, 0]
    c14_0 = tile[14, 0]
    c15_0 = tile[15, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c12_1 = tile[12, 1]
    c13_1 = tile[13, 1]
    c14_1 = tile[14, 1]
    c15_1 = tile[15, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c12_2 = tile[12, 2]
    c13_2 = tile[13, 2]
    c14_2 = tile[14, 2]
    c15_2 = tile[15, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    c12_3 = tile[12, 3]
    c13_3 = tile[13, 3]
    c14_3 = tile[14, 3]
    c15_3 = tile[15, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c8_4 = tile[8, 4]
    c9_4 = tile[9, 4]
    c10_4 = tile[10, 4]
    c11_4 = tile[11, 4]
    c12_4 = tile[12, 4]
    c13_4 = tile[13, 4]
    c14_4 = tile[14, 4]
    c15_4 = tile[15, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c8_5 = tile[8, 5]
    c9_5 = tile[9, 5]
    c10_5 = tile[10, 5]
    c11_5 = tile[11, 5]
    c12_5 = tile[12, 5]
    c13_5 = tile[13, 5]
    c14_5 = tile[14, 5]
    c15_5 = tile[15, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c8_6 = tile[8, 6]
    c9_6 = tile[9, 6]
    c10_6 = tile[10, 6]
    c11_6 = tile[11, 6]
    c12_6 = tile[12, 6]
    c13_6 = tile[13, 6]
    c14_6 = tile[14, 6]
    c15_6 = tile[15, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    c8_7 = tile[8, 7]
    c9_7 = tile[9, 7]
    c10_7 = tile[10, 7]
    c11_7 = tile[11, 7]
    c12_7 = tile[12, 7]
    c13_7 = tile[13, 7]
    c14_7 = tile[14, 7]
    c15_7 = tile[15, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * sla]
        a1 = A[pa1 + l * sla]
        a2 = A[pa2 + l * sla]
        a3 = A[pa3 + l * sla]
        a4 = A[pa4 + l * sla]
        a5 = A[pa5 + l * sla]
        a6 = A[pa6 + l * sla]
        a7 = A[pa7 + l * sla]
        a8 = A[pa8 + l * sla]
        a9 = A[pa9 + l * sla]
        a10 = A[pa10 + l * sla]
        a11 = A[pa11 + l * sla]
        a12 = A[pa12 + l * sla]
        a13 = A[pa13 + l * sla]
        a14 = A[pa14 + l * sla]
        a15 = A[pa15 + l * sla]
        b = B[pb0 + l * slb]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        c12_0 += a12 * b
        c13_0 += a13 * b
        c14_0 += a14 * b
        c15_0 += a15 * b
        b = B[pb1 + l * slb]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        c12_1 += a12 * b
        c13_1 += a13 * b
        c14_1 += a14 * b
        c15_1 += a15 * b
        b = B[pb2 + l * slb]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        c12_2 += a12 * b
        c13_2 += a13 * b
        c14_2 += a14 * b
        c15_2 += a15 * b
        b = B[pb3 + l * slb]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
        c12_3 += a12 * b
        c13_3 += a13 * b
        c14_3 += a14 * b
        c15_3 += a15 * b
        b = B[pb4 + l * slb]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        c8_4 += a8 * b
        c9_4 += a9 * b
        c10_4 += a10 * b
        c11_4 += a11 * b
        c12_4 += a12 * b
        c13_4 += a13 * b
        c14_4 += a14 * b
        c15_4 += a15 * b
        b = B[pb5 + l * slb]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        c8_5 += a8 * b
        c9_5 += a9 * b
        c10_5 += a10 * b
        c11_5 += a11 * b
        c12_5 += a12 * b
        c13_5 += a13 * b
        c14_5 += a14 * b
        c15_5 += a15 * b
        b = B[pb6 + l * slb]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        c8_6 += a8 * b
        c9_6 += a9 * b
        c10_6 += a10 * b
        c11_6 += a11 * b
        c12_6 += a12 * b
        c13_6 += a13 * b
        c14_6 += a14 * b
        c15_6 += a15 * b
        b = B[pb7 + l * slb]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
        c8_7 += a8 * b
        c9_7 += a9 * b
        c10_7 += a10 * b
        c11_7 += a11 * b
        c12_7 += a12 * b
        c13_7 += a13 * b
        c14_7 += a14 * b
        c15_7 += a15 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[12, 0] = c12_0
    tile[13, 0] = c13_0
    tile[14, 0] = c14_0
    tile[15, 0] = c15_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[12, 1] = c12_1
    tile[13, 1] = c13_1
    tile[14, 1] = c14_1
    tile[15, 1] = c15_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[12, 2] = c12_2
    tile[13, 2] = c13_2
    tile[14, 2] = c14_2
    tile[15, 2] = c15_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3
    tile[12, 3] = c12_3
    tile[13, 3] = c13_3
    tile[14, 3] = c14_3
    tile[15, 3] = c15_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[8, 4] = c8_4
    tile[9, 4] = c9_4
    tile[10, 4] = c10_4
    tile[11, 4] = c11_4
    tile[12, 4] = c12_4
    tile[13, 4] = c13_4
    tile[14, 4] = c14_4
    tile[15, 4] = c15_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[8, 5] = c8_5
    tile[9, 5] = c9_5
    tile[10, 5] = c10_5
    tile[11, 5] = c11_5
    tile[12, 5] = c12_5
    tile[13, 5] = c13_5
    tile[14, 5] = c14_5
    tile[15, 5] = c15_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[8, 6] = c8_6
    tile[9, 6] = c9_6
    tile[10, 6] = c10_6
    tile[11, 6] = c11_6
    tile[12, 6] = c12_6
    tile[13, 6] = c13_6
    tile[14, 6] = c14_6
    tile[15, 6] = c15_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7
    tile[8, 7] = c8_7
    tile[9, 7] = c9_7
    tile[10, 7] = c10_7
    tile[11, 7] = c11_7
    tile[12, 7] = c12_7
    tile[13, 7] = c13_7
    tile[14, 7] = c14_7
    tile[15, 7] = c15_7


@njit(cache=True)
def cc_24x8(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile):
    pa0 = aoff + min(0, ma - 1) * si
    pa1 = aoff + min(1, ma - 1) * si
    pa2 = aoff + min(2, ma - 1) * si
    pa3 = aoff + min(3, ma - 1) * si
    pa4 = aoff + min(4, ma - 1) * si
    pa5 = aoff + min(5, ma - 1) * si
    pa6 = aoff + min(6, ma - 1) * si
    pa7 = aoff + min(7, ma - 1) * si
    pa8 = aoff + min(8, ma - 1) * si
    pa9 = aoff + min(9, ma - 1) * si
    pa10 = aoff + min(10, ma - 1) * si
    pa11 = aoff + min(11, ma - 1) * si
    pa12 = aoff + min(12, ma - 1) * si
    pa13 = aoff + min(13, ma - 1) * si
    pa14 = aoff + min(14, ma - 1) * si
    pa15 = aoff + min(15, ma - 1) * si
    pa16 = aoff + min(16, ma - 1) * si
    pa17 = aoff + min(17, ma - 1) * si
    pa18 = aoff + min(18, ma - 1) * si
    pa19 = aoff + min(19, ma - 1) * si
    pa20 = aoff + min(20, ma - 1) * si
    pa21 = aoff + min(21, ma - 1) * si
    pa22 = aoff + min(22, ma - 1) * si
    pa23 = aoff + min(23, ma - 1) * si
    pb0 = boff + min(0, na - 1) * sj
    pb1 = boff + min(1, na - 1) * sj
    pb2 = boff + min(2, na - 1) * sj
    pb3 = boff + min(3, na - 1) * sj
    pb4 = boff + min(4, na - 1) * sj
    pb5 = boff + min(5, na - 1) * sj
    pb6 = boff + min(6, na - 1) * sj
    pb7 = boff + min(7, na - 1) * sj
    c0_0 = tile[0, 0]
    c1_0 = tile[1, 0]
    c2_0 = tile[2, 0]
    c3_0 = tile[3, 0]
    c4_0 = tile[4, 0]
    c5_0 = tile[5, 0]
    c6_0 = tile[6, 0]
    c7_0 = tile[7, 0]
    c8_0 = tile[8, 0]
    c9_0 = tile[9, 0]
    c10_0 = tile[10, 0]
    c11_0 = tile[11, 0]
    c12_0 = tile[12, 0]
    c13_0 = tile[13, 0]
    c14_0 = tile[14, 0]
    c15_0 = tile[15, 0]
    c16_0 = tile[16, 0]
    c17_0 = tile[17, 0]
    c18_0 = tile[18, 0]
    c19_0 = tile[19, 0]
    c20_0 = tile[20, 0]
    c21_0 = tile[21, 0]
    c22_0 = tile[22, 0]
    c23_0 = tile[23, 0]
    c0_1 = tile[0, 1]
    c1_1 = tile[1, 1]
    c2_1 = tile[2, 1]
    c3_1 = tile[3, 1]
    c4_1 = tile[4, 1]
    c5_1 = tile[5, 1]
    c6_1 = tile[6, 1]
    c7_1 = tile[7, 1]
    c8_1 = tile[8, 1]
    c9_1 = tile[9, 1]
    c10_1 = tile[10, 1]
    c11_1 = tile[11, 1]
    c12_1 = tile[12, 1]
    c13_1 = tile[13, 1]
    c14_1 = tile[14, 1]
    c15_1 = tile[15, 1]
    c16_1 = tile[16, 1]
    c17_1 = tile[17, 1]
    c18_1 = tile[18, 1]
    c19_1 = tile[19, 1]
    c20_1 = tile[20, 1]
    c21_1 = tile[21, 1]
    c22_1 = tile[22, 1]
    c23_1 = tile[23, 1]
    c0_2 = tile[0, 2]
    c1_2 = tile[1, 2]
    c2_2 = tile[2, 2]
    c3_2 = tile[3, 2]
    c4_2 = tile[4, 2]
    c5_2 = tile[5, 2]
    c6_2 = tile[6, 2]
    c7_2 = tile[7, 2]
    c8_2 = tile[8, 2]
    c9_2 = tile[9, 2]
    c10_2 = tile[10, 2]
    c11_2 = tile[11, 2]
    c12_2 = tile[12, 2]
    c13_2 = tile[13, 2]
    c14_2 = tile[14, 2]
    c15_2 = tile[15, 2]
    c16_2 = tile[16, 2]
    c17_2 = tile[17, 2]
    c18_2 = tile[18, 2]
    c19_2 = tile[19, 2]
    c20_2 = tile[20, 2]
    c21_2 = tile[21, 2]
    c22_2 = tile[22, 2]
    c23_2 = tile[23, 2]
    c0_3 = tile[0, 3]
    c1_3 = tile[1, 3]
    c2_3 = tile[2, 3]
    c3_3 = tile[3, 3]
    c4_3 = tile[4, 3]
    c5_3 = tile[5, 3]
    c6_3 = tile[6, 3]
    c7_3 = tile[7, 3]
    c8_3 = tile[8, 3]
    c9_3 = tile[9, 3]
    c10_3 = tile[10, 3]
    c11_3 = tile[11, 3]
    c12_3 = tile[12, 3]
    c13_3 = tile[13, 3]
    c14_3 = tile[14, 3]
    c15_3 = tile[15, 3]
    c16_3 = tile[16, 3]
    c17_3 = tile[17, 3]
    c18_3 = tile[18, 3]
    c19_3 = tile[19, 3]
    c20_3 = tile[20, 3]
    c21_3 = tile[21, 3]
    c22_3 = tile[22, 3]
    c23_3 = tile[23, 3]
    c0_4 = tile[0, 4]
    c1_4 = tile[1, 4]
    c2_4 = tile[2, 4]
    c3_4 = tile[3, 4]
    c4_4 = tile[4, 4]
    c5_4 = tile[5, 4]
    c6_4 = tile[6, 4]
    c7_4 = tile[7, 4]
    c8_4 = tile[8, 4]
    c9_4 = tile[9, 4]
    c10_4 = tile[10, 4]
    c11_4 = tile[11, 4]
    c12_4 = tile[12, 4]
    c13_4 = tile[13, 4]
    c14_4 = tile[14, 4]
    c15_4 = tile[15, 4]
    c16_4 = tile[16, 4]
    c17_4 = tile[17, 4]
    c18_4 = tile[18, 4]
    c19_4 = tile[19, 4]
    c20_4 = tile[20, 4]
    c21_4 = tile[21, 4]
    c22_4 = tile[22, 4]
    c23_4 = tile[23, 4]
    c0_5 = tile[0, 5]
    c1_5 = tile[1, 5]
    c2_5 = tile[2, 5]
    c3_5 = tile[3, 5]
    c4_5 = tile[4, 5]
    c5_5 = tile[5, 5]
    c6_5 = tile[6, 5]
    c7_5 = tile[7, 5]
    c8_5 = tile[8, 5]
    c9_5 = tile[9, 5]
    c10_5 = tile[10, 5]
    c11_5 = tile[11, 5]
    c12_5 = tile[12, 5]
    c13_5 = tile[13, 5]
    c14_5 = tile[14, 5]
    c15_5 = tile[15, 5]
    c16_5 = tile[16, 5]
    c17_5 = tile[17, 5]
    c18_5 = tile[18, 5]
    c19_5 = tile[19, 5]
    c20_5 = tile[20, 5]
    c21_5 = tile[21, 5]
    c22_5 = tile[22, 5]
    c23_5 = tile[23, 5]
    c0_6 = tile[0, 6]
    c1_6 = tile[1, 6]
    c2_6 = tile[2, 6]
    c3_6 = tile[3, 6]
    c4_6 = tile[4, 6]
    c5_6 = tile[5, 6]
    c6_6 = tile[6, 6]
    c7_6 = tile[7, 6]
    c8_6 = tile[8, 6]
    c9_6 = tile[9, 6]
    c10_6 = tile[10, 6]
    c11_6 = tile[11, 6]
    c12_6 = tile[12, 6]
    c13_6 = tile[13, 6]
    c14_6 = tile[14, 6]
    c15_6 = tile[15, 6]
    c16_6 = tile[16, 6]
    c17_6 = tile[17, 6]
    c18_6 = tile[18, 6]
    c19_6 = tile[19, 6]
    c20_6 = tile[20, 6]
    c21_6 = tile[21, 6]
    c22_6 = tile[22, 6]
    c23_6 = tile[23, 6]
    c0_7 = tile[0, 7]
    c1_7 = tile[1, 7]
    c2_7 = tile[2, 7]
    c3_7 = tile[3, 7]
    c4_7 = tile[4, 7]
    c5_7 = tile[5, 7]
    c6_7 = tile[6, 7]
    c7_7 = tile[7, 7]
    c8_7 = tile[8, 7]
    c9_7 = tile[9, 7]
    c10_7 = tile[10, 7]
    c11_7 = tile[11, 7]
    c12_7 = tile[12, 7]
    c13_7 = tile[13, 7]
    c14_7 = tile[14, 7]
    c15_7 = tile[15, 7]
    c16_7 = tile[16, 7]
    c17_7 = tile[17, 7]
    c18_7 = tile[18, 7]
    c19_7 = tile[19, 7]
    c20_7 = tile[20, 7]
    c21_7 = tile[21, 7]
    c22_7 = tile[22, 7]
    c23_7 = tile[23, 7]
    for l in range(kmax):
        a0 = A[pa0 + l * sla]
        a1 = A[pa1 + l * sla]
        a2 = A[pa2 + l * sla]
        a3 = A[pa3 + l * sla]
        a4 = A[pa4 + l * sla]
        a5 = A[pa5 + l * sla]
        a6 = A[pa6 + l * sla]
        a7 = A[pa7 + l * sla]
        a8 = A[pa8 + l * sla]
        a9 = A[pa9 + l * sla]
        a10 = A[pa10 + l * sla]
        a11 = A[pa11 + l * sla]
        a12 = A[pa12 + l * sla]
        a13 = A[pa13 + l * sla]
        a14 = A[pa14 + l * sla]
        a15 = A[pa15 + l * sla]
        a16 = A[pa16 + l * sla]
        a17 = A[pa17 + l * sla]
        a18 = A[pa18 + l * sla]
        a19 = A[pa19 + l * sla]
        a20 = A[pa20 + l * sla]
        a21 = A[pa21 + l * sla]
        a22 = A[pa22 + l * sla]
        a23 = A[pa23 + l * sla]
        b = B[pb0 + l * slb]
        c0_0 += a0 * b
        c1_0 += a1 * b
        c2_0 += a2 * b
        c3_0 += a3 * b
        c4_0 += a4 * b
        c5_0 += a5 * b
        c6_0 += a6 * b
        c7_0 += a7 * b
        c8_0 += a8 * b
        c9_0 += a9 * b
        c10_0 += a10 * b
        c11_0 += a11 * b
        c12_0 += a12 * b
        c13_0 += a13 * b
        c14_0 += a14 * b
        c15_0 += a15 * b
        c16_0 += a16 * b
        c17_0 += a17 * b
        c18_0 += a18 * b
        c19_0 += a19 * b
        c20_0 += a20 * b
        c21_0 += a21 * b
        c22_0 += a22 * b
        c23_0 += a23 * b
        b = B[pb1 + l * slb]
        c0_1 += a0 * b
        c1_1 += a1 * b
        c2_1 += a2 * b
        c3_1 += a3 * b
        c4_1 += a4 * b
        c5_1 += a5 * b
        c6_1 += a6 * b
        c7_1 += a7 * b
        c8_1 += a8 * b
        c9_1 += a9 * b
        c10_1 += a10 * b
        c11_1 += a11 * b
        c12_1 += a12 * b
        c13_1 += a13 * b
        c14_1 += a14 * b
        c15_1 += a15 * b
        c16_1 += a16 * b
        c17_1 += a17 * b
        c18_1 += a18 * b
        c19_1 += a19 * b
        c20_1 += a20 * b
        c21_1 += a21 * b
        c22_1 += a22 * b
        c23_1 += a23 * b
        b = B[pb2 + l * slb]
        c0_2 += a0 * b
        c1_2 += a1 * b
        c2_2 += a2 * b
        c3_2 += a3 * b
        c4_2 += a4 * b
        c5_2 += a5 * b
        c6_2 += a6 * b
        c7_2 += a7 * b
        c8_2 += a8 * b
        c9_2 += a9 * b
        c10_2 += a10 * b
        c11_2 += a11 * b
        c12_2 += a12 * b
        c13_2 += a13 * b
        c14_2 += a14 * b
        c15_2 += a15 * b
        c16_2 += a16 * b
        c17_2 += a17 * b
        c18_2 += a18 * b
        c19_2 += a19 * b
        c20_2 += a20 * b
        c21_2 += a21 * b
        c22_2 += a22 * b
        c23_2 += a23 * b
        b = B[pb3 + l * slb]
        c0_3 += a0 * b
        c1_3 += a1 * b
        c2_3 += a2 * b
        c3_3 += a3 * b
        c4_3 += a4 * b
        c5_3 += a5 * b
        c6_3 += a6 * b
        c7_3 += a7 * b
        c8_3 += a8 * b
        c9_3 += a9 * b
        c10_3 += a10 * b
        c11_3 += a11 * b
        c12_3 += a12 * b
        c13_3 += a13 * b
        c14_3 += a14 * b
        c15_3 += a15 * b
        c16_3 += a16 * b
        c17_3 += a17 * b
        c18_3 += a18 * b
        c19_3 += a19 * b
        c20_3 += a20 * b
        c21_3 += a21 * b
        c22_3 += a22 * b
        c23_3 += a23 * b
        b = B[pb4 + l * slb]
        c0_4 += a0 * b
        c1_4 += a1 * b
        c2_4 += a2 * b
        c3_4 += a3 * b
        c4_4 += a4 * b
        c5_4 += a5 * b
        c6_4 += a6 * b
        c7_4 += a7 * b
        c8_4 += a8 * b
        c9_4 += a9 * b
        c10_4 += a10 * b
        c11_4 += a11 * b
        c12_4 += a12 * b
        c13_4 += a13 * b
        c14_4 += a14 * b
        c15_4 += a15 * b
        c16_4 += a16 * b
        c17_4 += a17 * b
        c18_4 += a18 * b
        c19_4 += a19 * b
        c20_4 += a20 * b
        c21_4 += a21 * b
        c22_4 += a22 * b
        c23_4 += a23 * b
        b = B[pb5 + l * slb]
        c0_5 += a0 * b
        c1_5 += a1 * b
        c2_5 += a2 * b
        c3_5 += a3 * b
        c4_5 += a4 * b
        c5_5 += a5 * b
        c6_5 += a6 * b
        c7_5 += a7 * b
        c8_5 += a8 * b
        c9_5 += a9 * b
        c10_5 += a10 * b
        c11_5 += a11 * b
        c12_5 += a12 * b
        c13_5 += a13 * b
        c14_5 += a14 * b
        c15_5 += a15 * b
        c16_5 += a16 * b
        c17_5 += a17 * b
        c18_5 += a18 * b
        c19_5 += a19 * b
        c20_5 += a20 * b
        c21_5 += a21 * b
        c22_5 += a22 * b
        c23_5 += a23 * b
        b = B[pb6 + l * slb]
        c0_6 += a0 * b
        c1_6 += a1 * b
        c2_6 += a2 * b
        c3_6 += a3 * b
        c4_6 += a4 * b
        c5_6 += a5 * b
        c6_6 += a6 * b
        c7_6 += a7 * b
        c8_6 += a8 * b
        c9_6 += a9 * b
        c10_6 += a10 * b
        c11_6 += a11 * b
        c12_6 += a12 * b
        c13_6 += a13 * b
        c14_6 += a14 * b
        c15_6 += a15 * b
        c16_6 += a16 * b
        c17_6 += a17 * b
        c18_6 += a18 * b
        c19_6 += a19 * b
        c20_6 += a20 * b
        c21_6 += a21 * b
        c22_6 += a22 * b
        c23_6 += a23 * b
        b = B[pb7 + l * slb]
        c0_7 += a0 * b
        c1_7 += a1 * b
        c2_7 += a2 * b
        c3_7 += a3 * b
        c4_7 += a4 * b
        c5_7 += a5 * b
        c6_7 += a6 * b
        c7_7 += a7 * b
        c8_7 += a8 * b
        c9_7 += a9 * b
        c10_7 += a10 * b
        c11_7 += a11 * b
        c12_7 += a12 * b
        c13_7 += a13 * b
        c14_7 += a14 * b
        c15_7 += a15 * b
        c16_7 += a16 * b
        c17_7 += a17 * b
        c18_7 += a18 * b
        c19_7 += a19 * b
        c20_7 += a20 * b
        c21_7 += a21 * b
        c22_7 += a22 * b
        c23_7 += a23 * b
    tile[0, 0] = c0_0
    tile[1, 0] = c1_0
    tile[2, 0] = c2_0
    tile[3, 0] = c3_0
    tile[4, 0] = c4_0
    tile[5, 0] = c5_0
    tile[6, 0] = c6_0
    tile[7, 0] = c7_0
    tile[8, 0] = c8_0
    tile[9, 0] = c9_0
    tile[10, 0] = c10_0
    tile[11, 0] = c11_0
    tile[12, 0] = c12_0
    tile[13, 0] = c13_0
    tile[14, 0] = c14_0
    tile[15, 0] = c15_0
    tile[16, 0] = c16_0
    tile[17, 0] = c17_0
    tile[18, 0] = c18_0
    tile[19, 0] = c19_0
    tile[20, 0] = c20_0
    tile[21, 0] = c21_0
    tile[22, 0] = c22_0
    tile[23, 0] = c23_0
    tile[0, 1] = c0_1
    tile[1, 1] = c1_1
    tile[2, 1] = c2_1
    tile[3, 1] = c3_1
    tile[4, 1] = c4_1
    tile[5, 1] = c5_1
    tile[6, 1] = c6_1
    tile[7, 1] = c7_1
    tile[8, 1] = c8_1
    tile[9, 1] = c9_1
    tile[10, 1] = c10_1
    tile[11, 1] = c11_1
    tile[12, 1] = c12_1
    tile[13, 1] = c13_1
    tile[14, 1] = c14_1
    tile[15, 1] = c15_1
    tile[16, 1] = c16_1
    tile[17, 1] = c17_1
    tile[18, 1] = c18_1
    tile[19, 1] = c19_1
    tile[20, 1] = c20_1
    tile[21, 1] = c21_1
    tile[22, 1] = c22_1
    tile[23, 1] = c23_1
    tile[0, 2] = c0_2
    tile[1, 2] = c1_2
    tile[2, 2] = c2_2
    tile[3, 2] = c3_2
    tile[4, 2] = c4_2
    tile[5, 2] = c5_2
    tile[6, 2] = c6_2
    tile[7, 2] = c7_2
    tile[8, 2] = c8_2
    tile[9, 2] = c9_2
    tile[10, 2] = c10_2
    tile[11, 2] = c11_2
    tile[12, 2] = c12_2
    tile[13, 2] = c13_2
    tile[14, 2] = c14_2
    tile[15, 2] = c15_2
    tile[16, 2] = c16_2
    tile[17, 2] = c17_2
    tile[18, 2] = c18_2
    tile[19, 2] = c19_2
    tile[20, 2] = c20_2
    tile[21, 2] = c21_2
    tile[22, 2] = c22_2
    tile[23, 2] = c23_2
    tile[0, 3] = c0_3
    tile[1, 3] = c1_3
    tile[2, 3] = c2_3
    tile[3, 3] = c3_3
    tile[4, 3] = c4_3
    tile[5, 3] = c5_3
    tile[6, 3] = c6_3
    tile[7, 3] = c7_3
    tile[8, 3] = c8_3
    tile[9, 3] = c9_3
    tile[10, 3] = c10_3
    tile[11, 3] = c11_3
    tile[12, 3] = c12_3
    tile[13, 3] = c13_3
    tile[14, 3] = c14_3
    tile[15, 3] = c15_3
    tile[16, 3] = c16_3
    tile[17, 3] = c17_3
    tile[18, 3] = c18_3
    tile[19, 3] = c19_3
    tile[20, 3] = c20_3
    tile[21, 3] = c21_3
    tile[22, 3] = c22_3
    tile[23, 3] = c23_3
    tile[0, 4] = c0_4
    tile[1, 4] = c1_4
    tile[2, 4] = c2_4
    tile[3, 4] = c3_4
    tile[4, 4] = c4_4
    tile[5, 4] = c5_4
    tile[6, 4] = c6_4
    tile[7, 4] = c7_4
    tile[8, 4] = c8_4
    tile[9, 4] = c9_4
    tile[10, 4] = c10_4
    tile[11, 4] = c11_4
    tile[12, 4] = c12_4
    tile[13, 4] = c13_4
    tile[14, 4] = c14_4
    tile[15, 4] = c15_4
    tile[16, 4] = c16_4
    tile[17, 4] = c17_4
    tile[18, 4] = c18_4
    tile[19, 4] = c19_4
    tile[20, 4] = c20_4
    tile[21, 4] = c21_4
    tile[22, 4] = c22_4
    tile[23, 4] = c23_4
    tile[0, 5] = c0_5
    tile[1, 5] = c1_5
    tile[2, 5] = c2_5
    tile[3, 5] = c3_5
    tile[4, 5] = c4_5
    tile[5, 5] = c5_5
    tile[6, 5] = c6_5
    tile[7, 5] = c7_5
    tile[8, 5] = c8_5
    tile[9, 5] = c9_5
    tile[10, 5] = c10_5
    tile[11, 5] = c11_5
    tile[12, 5] = c12_5
    tile[13, 5] = c13_5
    tile[14, 5] = c14_5
    tile[15, 5] = c15_5
    tile[16, 5] = c16_5
    tile[17, 5] = c17_5
    tile[18, 5] = c18_5
    tile[19, 5] = c19_5
    tile[20, 5] = c20_5
    tile[21, 5] = c21_5
    tile[22, 5] = c22_5
    tile[23, 5] = c23_5
    tile[0, 6] = c0_6
    tile[1, 6] = c1_6
    tile[2, 6] = c2_6
    tile[3, 6] = c3_6
    tile[4, 6] = c4_6
    tile[5, 6] = c5_6
    tile[6, 6] = c6_6
    tile[7, 6] = c7_6
    tile[8, 6] = c8_6
    tile[9, 6] = c9_6
    tile[10, 6] = c10_6
    tile[11, 6] = c11_6
    tile[12, 6] = c12_6
    tile[13, 6] = c13_6
    tile[14, 6] = c14_6
    tile[15, 6] = c15_6
    tile[16, 6] = c16_6
    tile[17, 6] = c17_6
    tile[18, 6] = c18_6
    tile[19, 6] = c19_6
    tile[20, 6] = c20_6
    tile[21, 6] = c21_6
    tile[22, 6] = c22_6
    tile[23, 6] = c23_6
    tile[0, 7] = c0_7
    tile[1, 7] = c1_7
    tile[2, 7] = c2_7
    tile[3, 7] = c3_7
    tile[4, 7] = c4_7
    tile[5, 7] = c5_7
    tile[6, 7] = c6_7
    tile[7, 7] = c7_7
    tile[8, 7] = c8_7
    tile[9, 7] = c9_7
    tile[10, 7] = c10_7
    tile[11, 7] = c11_7
    tile[12, 7] = c12_7
    tile[13, 7] = c13_7
    tile[14, 7] = c14_7
    tile[15, 7] = c15_7
    tile[16, 7] = c16_7
    tile[17, 7] = c17_7
    tile[18, 7] = c18_7
    tile[19, 7] = c19_7
    tile[20, 7] = c20_7
    tile[21, 7] = c21_7
    tile[22, 7] = c22_7
    tile[23, 7] = c23_7


@njit(cache=True)
def cc(sel, kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile):
    if sel == 0:
        cc_4x4(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile)
    elif sel == 1:
        cc_8x4(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile)
    elif sel == 2:
        cc_12x4(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile)
    elif sel == 3:
        cc_8x8(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile)
    elif sel == 4:
        cc_16x8(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile)
    elif sel == 5:
        cc_24x8(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile)
