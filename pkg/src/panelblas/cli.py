"""``panelblas`` command line: sweep, riccati, verify, info.

Exit status: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import bench, riccati
from .core import ArgumentError
from .engine import EngineConfig

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ENV_KNOBS = ("PANELBLAS_SWITCH_DIM", "PANELBLAS_TINY_M", "PANELBLAS_TINY_N", "PANELBLAS_SCRATCH_CAP",
             "PANELBLAS_PS", "PANELBLAS_MR")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _triples(text):
    out = []
    for item in text.split(";"):
        parts = item.strip().split(",")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"expected m,n,k triples separated by ';', got {item!r}")
        out.append(tuple(int(p) for p in parts))
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="panelblas", description="Panel-major BLAS subset: benchmarks and checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sweep", help="size sweep, CSV output")
    s.add_argument("--routine", default="dgemm", choices=bench.ROUTINES)
    s.add_argument("--flags", default="", help="flag characters, e.g. nt for dgemm or rltu for dtrsm")
    s.add_argument("--shape", default="square", choices=bench.SHAPES)
    s.add_argument("--triples", type=_triples, default=(), help="custom 'm,n,k;m,n,k' list (overrides sizes)")
    s.add_argument("--start", type=int, default=4)
    s.add_argument("--stop", type=int, default=300)
    s.add_argument("--step", type=int, default=4)
    s.add_argument("--reps", type=int, default=5)
    s.add_argument("--variant", default=None, help="force a variant: A, B, C, Ct or D")
    s.add_argument("--cold", action="store_true", help="skip the warm-up call")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output", default="-", help="CSV path, '-' for stdout")

    r = sub.add_parser("riccati", help="Riccati recursion timings and residuals")
    r.add_argument("--nx", type=int, nargs="+", default=[8, 24, 40, 64])
    r.add_argument("--nu", type=int, nargs="+", default=None, help="defaults to nx/2 per entry")
    r.add_argument("--horizon", "-N", type=int, default=10)
    r.add_argument("--impl", nargs="+", default=list(riccati.IMPLS), choices=riccati.IMPLS)
    r.add_argument("--seed", type=int, default=0)

    v = sub.add_parser("verify", help="differential check against the reference implementations")
    v.add_argument("--routines", nargs="+", default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=20)
    v.add_argument("--max-dim", type=int, default=96)
    v.add_argument("--mutate", action="store_true", help="enable the perturbed-kernel fixture")
    v.add_argument("--quiet", action="store_true")

    sub.add_parser("info", help="configuration and environment")
    return p


def _sweep(args):
    variant = args.variant
    if variant is not None:
        from .engine import GemmVariant

        try:
            variant = GemmVariant.parse(variant).value
        except ArgumentError as e:
            raise bench.UsageError(e.message) from None
    spec = bench.SweepSpec(routine=args.routine, flags=args.flags, shape=args.shape, start=args.start,
                           stop=args.stop, step=args.step, reps=args.reps, variant=variant,
                           warm=not args.cold, seed=args.seed, triples=args.triples)
    records = bench.run_sweep(spec)
    if args.output == "-":
        bench.write_csv(records, sys.stdout, spec)
    else:
        with open(args.output, "w", newline="") as f:
            bench.write_csv(records, f, spec)
    return EXIT_OK


def _riccati(args):
    nus = args.nu if args.nu is not None else [nx // 2 for nx in args.nx]
    if len(nus) != len(args.nx):
        raise bench.UsageError("--nu needs one value per --nx value")
    print("impl,nx,nu,N,seconds,residual")
    worst = 0.0
    for nx, nu in zip(args.nx, nus):
        try:
            dims = riccati.OcpDims(nx, nu, args.horizon)
        except ValueError as e:
            raise bench.UsageError(str(e)) from None
        for impl in args.impl:
            run = riccati.riccati_run(dims, impl, args.seed)
            worst = max(worst, run.residual)
            print(f"{impl},{nx},{nu},{args.horizon},{run.seconds!r},{run.residual!r}")
    return EXIT_OK if worst <= 1e-9 else EXIT_FAIL


def _verify(args):
    from .verify import ROUTINES, verify

    routines = tuple(args.routines) if args.routines else ROUTINES
    bad = [r for r in routines if r not in ROUTINES]
    if bad:
        raise bench.UsageError(f"unknown routine(s): {', '.join(bad)}")
    if args.count < 0 or args.max_dim < 1:
        raise bench.UsageError("count must be >= 0 and max-dim >= 1")
    report = verify(routines, args.seed, args.count, args.max_dim, args.mutate)
    for line in report.lines():
        if not args.quiet or line.startswith("FAIL") or "overall" in line:
            print(line)
    return EXIT_OK if report.passed else EXIT_FAIL


def _info(args):
    cfg = EngineConfig.from_env()
    kc = cfg.kernel
    print(f"panel height ps={kc.ps} tile mr x nr={kc.mr}x{kc.nr}")
    print(f"switch_dim={cfg.switch_dim} tiny_m={cfg.tiny_m} tiny_n={cfg.tiny_n} "
          f"bounded_scratch_cap={cfg.bounded_scratch_cap}")
    for name in ENV_KNOBS:
        print(f"{name}={os.environ.get(name, '')}")
    import numba

    print(f"numpy {np.__version__} numba {numba.__version__}")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"sweep": _sweep, "riccati": _riccati, "verify": _verify, "info": _info}[args.command]
    try:
        return handler(args)
    except (bench.UsageError, ArgumentError) as e:
        print(f"panelblas: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
