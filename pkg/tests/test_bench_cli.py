import io
import math

import numpy as np
import pytest

from panelblas import bench, cli
from panelblas.engine import GemmVariant


def test_square_sweep_records():
    spec = bench.SweepSpec("dgemm", "nn", start=4, stop=32, step=4, reps=2)
    recs = bench.run_sweep(spec)
    assert [(r.m, r.n, r.k) for r in recs] == [(s, s, s) for s in range(4, 33, 4)]
    for r in recs:
        assert math.isfinite(r.gflops) and r.gflops > 0
        assert r.median_seconds > 0


def test_csv_round_trip_exact():
    spec = bench.SweepSpec("dsyrk", start=8, stop=24, step=8, reps=1)
    recs = bench.run_sweep(spec)
    out = io.StringIO()
    bench.write_csv(recs, out, spec)
    text = out.getvalue()
    assert text.startswith("# panelblas sweep routine=dsyrk flags=ln")
    assert text.splitlines()[1] == ",".join(bench.CSV_FIELDS)
    back = bench.read_csv(text)
    assert back == recs
    for r in back:
        assert r.gflops == bench.gflops(bench.flops_model(r.routine, r.flags, r.m, r.n, r.k), r.median_seconds)


def test_read_csv_rejects_foreign_header():
    with pytest.raises(ValueError):
        bench.read_csv("a,b\n1,2\n")


@pytest.mark.parametrize("variant", ["A", "B", "C", "Ct", "D"])
def test_elements_packed_matches_formula(variant):
    m, n, k = 9, 13, 7
    spec = bench.SweepSpec("dgemm", "nn", triples=((m, n, k),), reps=1, variant=variant)
    (rec,) = bench.run_sweep(spec)
    assert rec.variant == variant
    assert rec.elements_packed == GemmVariant.parse(variant).packed_elements(m, n, k)


@pytest.mark.parametrize("shape,want", [("m4", (4, 16, 16)), ("n4", (16, 4, 16)), ("k4", (16, 16, 4))])
def test_shape_rules(shape, want):
    assert bench.SweepSpec(shape=shape, start=16, stop=16).shapes() == [want]


@pytest.mark.parametrize("routine,flags", [("dtrmm", "llnn"), ("dtrsm", "rutu"), ("dpotrf", "u"), ("dgetrf", "")])
def test_other_routines_sweep(routine, flags):
    recs = bench.run_sweep(bench.SweepSpec(routine, flags, start=12, stop=12, reps=1))
    assert len(recs) == 1 and recs[0].gflops > 0


def test_flops_model():
    assert bench.flops_model("dgemm", "nn", 2, 3, 4) == 48
    assert bench.flops_model("dsyrk", "ln", 5, 5, 2) == 50
    assert bench.flops_model("dtrsm", "lunn", 3, 2, 0) == 18
    assert bench.flops_model("dtrmm", "rlnn", 3, 2, 0) == 12
    assert bench.flops_model("dpotrf", "l", 3, 3, 3) == 9
    assert bench.flops_model("dgetrf", "", 3, 3, 0) == 18


@pytest.mark.parametrize("kw", [dict(routine="dgemm", flags="nx"), dict(routine="zgemm"),
                                dict(routine="dtrsm", flags="lln"), dict(shape="cube"), dict(reps=0),
                                dict(start=5, stop=4), dict(routine="dtrsm", variant="A")])
def test_usage_errors(kw):
    with pytest.raises(bench.UsageError):
        bench.SweepSpec(**kw)


def test_cli_sweep_to_file(tmp_path, capsys):
    out = tmp_path / "s.csv"
    code = cli.main(["sweep", "--routine", "dgemm", "--flags", "tn", "--start", "4", "--stop", "8", "--reps", "1",
                     "-o", str(out)])
    assert code == 0
    recs = bench.read_csv(out.read_text())
    assert [(r.m, r.flags) for r in recs] == [(4, "tn"), (8, "tn")]


def test_cli_sweep_triples_stdout(capsys):
    assert cli.main(["sweep", "--triples", "3,4,5;6,7,8", "--reps", "1"]) == 0
    recs = bench.read_csv(capsys.readouterr().out)
    assert [(r.m, r.n, r.k) for r in recs] == [(3, 4, 5), (6, 7, 8)]


@pytest.mark.parametrize("argv", [
    ["sweep", "--flags", "zz"],
    ["sweep", "--routine", "dsyrk", "--variant", "A", "--start", "4", "--stop", "4"],
    ["sweep", "--variant", "Q"],
    ["verify", "--routines", "dfoo"],
    ["riccati", "--nx", "4", "--nu", "1", "2"],
])
def test_cli_usage_exit_2(argv, capsys):
    assert cli.main(argv) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["bogus"], ["sweep", "--start", "x"], ["sweep", "--triples", "1,2"]])
def test_cli_parse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as e:
        cli.main(argv)
    assert e.value.code == 2


def test_cli_verify_vacuous_and_mutated(capsys):
    assert cli.main(["verify", "--count", "0"]) == 0
    assert cli.main(["verify", "--routines", "dgemm", "--count", "2", "--max-dim", "20", "--quiet"]) == 0
    assert cli.main(["verify", "--routines", "dgemm", "--count", "2", "--max-dim", "20", "--mutate"]) == 1
    assert "FAIL overall" in capsys.readouterr().out


def test_cli_riccati(capsys):
    assert cli.main(["riccati", "--nx", "6", "--horizon", "3", "--impl", "blas_path", "fused_native_path"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "impl,nx,nu,N,seconds,residual"
    for line in lines[1:]:
        assert float(line.split(",")[-1]) <= 1e-12


def test_cli_info(capsys):
    assert cli.main(["info"]) == 0
    out = capsys.readouterr().out
    assert "ps=4" in out and "numba" in out
