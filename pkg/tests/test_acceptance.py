"""Acceptance criteria 1-10, each at its stated tolerance and runtime limit.

Every test prints one ``PASS``/``FAIL`` line (visible without ``-s``).
"""

import contextlib
import io
import itertools
import statistics
import time

import numpy as np
import pytest

from panelblas import bench, blas, reference
from panelblas.blas import BlasCallError
from panelblas.core import ArgumentError, ColMatView
from panelblas.engine import EngineConfig, GemmVariant, gemm, select_variant
from panelblas.level3 import syrk
from panelblas.panel import PanelMat, pack_from_colmajor, unpack_to_colmajor
from panelblas.riccati import OcpDims, factor_sequence, random_problem, riccati_run
from panelblas.verify import verify

from test_blas import BAD, call

TRANS = list(itertools.product("NT", "NT"))
VARIANTS = ("A", "B", "C", "Ct", "D")


@pytest.fixture
def criterion(capsys):
    @contextlib.contextmanager
    def run(number, title):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            with capsys.disabled():
                tag = "PASS" if ok else "FAIL"
                print(f"\n[{tag}] criterion {number}: {title} ({time.perf_counter() - t0:.2f} s)")
    return run


def views(rng, ta, tb, m, n, k):
    a = rng.uniform(-1, 1, (m, k) if ta == "N" else (k, m))
    b = rng.uniform(-1, 1, (k, n) if tb == "N" else (n, k))
    c = rng.uniform(-1, 1, (m, n))
    return a, b, c


def test_01_packing_counts(criterion):
    with criterion(1, "elements_packed equals the variant formula on 200 triples"):
        rng = np.random.default_rng(1)
        t0 = time.perf_counter()
        for _ in range(200):
            m, n, k = (int(x) for x in rng.integers(1, 301, 3))
            a, b, c = views(rng, "N", "N", m, n, k)
            A, B = ColMatView.from_array(a), ColMatView.from_array(b)
            expect = {"A": m * k + n * k + 2 * m * n, "B": m * k + n * k, "C": m * k, "Ct": n * k, "D": 0}
            for v in VARIANTS:
                stats = gemm("N", "N", m, n, k, 1.0, A, B, 0.0, ColMatView.from_array(c), variant=v)
                assert stats.variant == v
                assert stats.elements_packed == expect[v], (v, m, n, k)
        assert time.perf_counter() - t0 < 30


def test_02_oracle_equivalence(criterion):
    with criterion(2, "all routines and flag cases match the reference within 1e-13"):
        t0 = time.perf_counter()
        report = verify(seed=2, count=100, max_dim=96)
        bad = [line for line in report.lines() if line.startswith("FAIL")]
        assert len(report.results) == 4 + 4 + 16 + 16 + 2 + 1
        assert report.passed, bad
        assert time.perf_counter() - t0 < 120


def test_03_cross_variant_agreement(criterion):
    with criterion(3, "forced variants agree pairwise within 1e-13"):
        rng = np.random.default_rng(3)
        for ta, tb in TRANS:
            for _ in range(50):
                m, n, k = (int(x) for x in rng.integers(1, 97, 3))
                a, b, c = views(rng, ta, tb, m, n, k)
                A, B = ColMatView.from_array(a), ColMatView.from_array(b)
                outs = {}
                for v in VARIANTS:
                    if not GemmVariant.parse(v).legal(ta, tb):
                        continue
                    C = ColMatView.from_array(c)
                    gemm(ta, tb, m, n, k, 1.3, A, B, -0.7, C, variant=v)
                    outs[v] = C.to_array()
                for (v1, x), (v2, y) in itertools.combinations(outs.items(), 2):
                    err = np.abs(x - y).max() / np.abs(y).max()
                    assert err <= 1e-13, (ta, tb, v1, v2, m, n, k, err)
                if (ta, tb) == ("T", "N"):
                    assert "D" not in outs


def test_04_planner_rules(criterion):
    with criterion(4, "planner dispatch over a 40x40x3 grid"):
        t0 = time.perf_counter()
        cfg = EngineConfig(switch_dim=24)
        for k in (1, 16, 30):
            for m, n in itertools.product(range(1, 41), repeat=2):
                for ta, tb in [("N", "N"), ("N", "T"), ("T", "T")]:
                    v = select_variant(ta, tb, m, n, k, cfg).variant.value
                    if m <= cfg.tiny_m and n <= cfg.tiny_n:
                        assert v == "D"
                    elif max(m, n, k) > cfg.switch_dim:
                        assert v == "B"
                    else:
                        assert v == ("C" if m < n else "Ct")
                assert select_variant("T", "N", m, n, k, cfg).variant.value != "D"
        assert time.perf_counter() - t0 < 5


def test_05_syrk_halves_packing(criterion):
    with criterion(5, "variant-B syrk packs n*k = 4096 at n=k=64"):
        rng = np.random.default_rng(5)
        a = ColMatView.from_array(rng.standard_normal((64, 64)))
        stats = syrk("L", "N", 64, 64, 1.0, a, 0.0, ColMatView.from_array(np.zeros((64, 64))), variant="B")
        g = gemm("N", "T", 64, 64, 64, 1.0, a, a, 0.0, ColMatView.from_array(np.zeros((64, 64))), variant="B")
        assert stats.elements_packed == 4096
        assert g.elements_packed == 2 * 64 * 64 == 2 * stats.elements_packed


def test_06_pack_round_trip(criterion):
    with criterion(6, "pack then unpack is bit-identical on 500 shapes per ps"):
        rng = np.random.default_rng(6)
        for ps in (4, 8):
            residues = set()
            for i in range(500):
                m, n = int(rng.integers(1, 80)), int(rng.integers(1, 40))
                if i < 4 * ps:
                    m = 8 * ps + i
                residues.add((m % ps, n % ps))
                src = rng.standard_normal((m, n))
                src.flat[rng.integers(0, src.size)] = -0.0
                pm = PanelMat.zeros(m, n, ps)
                pack_from_colmajor(ColMatView.from_array(src, ld=m + int(rng.integers(0, 3))), pm)
                out = ColMatView.from_array(np.full((m, n), np.nan))
                unpack_to_colmajor(pm, out)
                assert out.to_array().tobytes() == src.tobytes()
            assert {r for r, _ in residues} == set(range(ps))


def test_07_riccati(criterion):
    with criterion(7, "Riccati recursion residual <= 1e-9, fused vs unfused <= 1e-13"):
        t0 = time.perf_counter()
        for nx, nu in [(8, 4), (24, 12), (40, 20), (64, 32)]:
            dims = OcpDims(nx, nu, 10)
            for impl in ("blas_path", "fused_native_path"):
                assert riccati_run(dims, impl, seed=7).residual <= 1e-9
            data = random_problem(dims, seed=7)
            a = factor_sequence(data, "blas_path")
            b = factor_sequence(data, "fused_native_path")
            for x, y in zip(a, b):
                assert np.abs(x - y).max() <= 1e-13 * np.abs(x).max()
        assert time.perf_counter() - t0 < 10


def _median_time(fn, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def test_08_performance_ordering(criterion):
    with criterion(8, "fast >= 2x naive at 128, C <= A up to 64, D scratch-free"):
        t0 = time.perf_counter()
        rng = np.random.default_rng(8)
        # (a)
        n = 128
        a, b, c = (np.asfortranarray(rng.uniform(-1, 1, (n, n))) for _ in range(3))
        fast = _median_time(lambda: blas.dgemm("N", "N", n, n, n, 1.0, a, n, b, n, 0.0, c, n), 7)
        af, bf, cf = a.ravel(order="F"), b.ravel(order="F"), c.ravel(order="F").copy()
        naive = _median_time(lambda: reference.naive_gemm("N", "N", n, n, n, 1.0, af, n, bf, n, 0.0, cf, n), 7)
        assert naive / fast >= 2.0, (naive, fast)
        # (b) interleaved so drift affects both variants alike
        slower = []
        for s in range(4, 65, 4):
            a, b, c = views(rng, "N", "N", s, s, s)
            A, B, C = ColMatView.from_array(a), ColMatView.from_array(b), ColMatView.from_array(c)
            run = {v: (lambda v=v: gemm("N", "N", s, s, s, 1.0, A, B, 1.0, C, variant=v)) for v in ("A", "C")}
            times = {"A": [], "C": []}
            for v in ("A", "C"):
                run[v]()
            for _ in range(31):
                for v in ("A", "C"):
                    t1 = time.perf_counter()
                    run[v]()
                    times[v].append(time.perf_counter() - t1)
            tA, tC = statistics.median(times["A"]), statistics.median(times["C"])
            if tC > tA:
                slower.append((s, tC, tA))
        assert not slower, slower
        # (c)
        for s in (1, 3, 8, 40):
            a, b, c = views(rng, "N", "T", s, s, s)
            st = gemm("N", "T", s, s, s, 1.0, ColMatView.from_array(a), ColMatView.from_array(b), 0.0,
                      ColMatView.from_array(c), variant="D")
            assert st.scratch_bytes_dynamic == 0 and st.scratch_bytes_bounded == 0
        assert time.perf_counter() - t0 < 60


def test_09_interface_conformance(criterion, rng):
    with criterion(9, "argument indices and quick returns"):
        for routine, over, index in BAD:
            with pytest.raises(BlasCallError) as e:
                call(routine, **over)
            assert e.value.index == index, (routine, over)
        # m=0 / n=0: C untouched, even with a NaN-producing beta
        c = rng.standard_normal(9)
        keep = c.copy()
        blas.dgemm("N", "N", 0, 3, 3, 1.0, np.zeros(9), 1, np.zeros(9), 3, np.nan, c, 1)
        blas.dgemm("N", "N", 3, 0, 3, 1.0, np.zeros(9), 3, np.zeros(9), 3, np.nan, c, 3)
        np.testing.assert_array_equal(c, keep)
        # k=0 or alpha=0: C <- beta*C; beta=0 clears NaN
        a = np.full(9, np.nan)
        for kk, alpha in [(0, 1.0), (3, 0.0)]:
            c = keep.copy()
            blas.dgemm("N", "N", 3, 3, kk, alpha, a, 3, a, 3, 2.0, c, 3)
            np.testing.assert_array_equal(c, 2.0 * keep)
        c = np.full(9, np.nan)
        blas.dgemm("N", "N", 3, 3, 0, 1.0, a, 3, a, 3, 0.0, c, 3)
        np.testing.assert_array_equal(c, np.zeros(9))
        c = keep.copy()
        blas.dgemm("N", "N", 3, 3, 0, 1.0, a, 3, a, 3, 1.0, c, 3)
        np.testing.assert_array_equal(c, keep)
        c = keep.copy()
        blas.dsyrk("U", "N", 3, 0, 1.0, a, 3, 3.0, c, 3)
        want = keep.reshape(3, 3).T.copy()
        want[np.triu_indices(3)] *= 3.0
        np.testing.assert_array_equal(c.reshape(3, 3).T, want)
        with pytest.raises(ArgumentError):
            blas.dgemm("N", "N", 2, 2, 2, 1.0, np.zeros(4), 2, np.zeros(4), 2, 0.0, np.zeros(4), 2, variant="Q")


def test_10_cli_contract(criterion):
    from panelblas import cli

    with criterion(10, "verify exit codes and CSV Gflops reproduction"):
        with contextlib.redirect_stdout(io.StringIO()):
            assert cli.main(["verify", "--count", "3", "--max-dim", "32", "--quiet"]) == 0
            assert cli.main(["verify", "--count", "3", "--max-dim", "32", "--quiet", "--mutate"]) != 0
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            assert cli.main(["sweep", "--routine", "dgemm", "--start", "8", "--stop", "64", "--step", "8",
                             "--reps", "2"]) == 0
        recs = bench.read_csv(out.getvalue())
        assert len(recs) == 8
        for r in recs:
            fl = bench.flops_model(r.routine, r.flags, r.m, r.n, r.k)
            assert r.gflops == fl / r.median_seconds / 1e9
