"""Generator for the register-blocked inner gemm loops in ``_inner.py``.

Each loop keeps the ``mr x nr`` accumulator tile in scalar locals for the
whole k-loop, which numba/LLVM keeps in registers.  One function is emitted
per (loop kind, mr, nr), plus one selector per kind that takes the index of
the shape in ``TILE_SHAPES`` as its first argument.  Routines carry that
integer instead of a function object so the compiled code stays cacheable
across processes.  The panel height always equals ``nr``.

Regenerate with ``python -m panelblas.kernels._codegen``.
"""

from __future__ import annotations

from pathlib import Path

TILE_SHAPES = ((4, 4), (8, 4), (12, 4), (8, 8), (16, 8), (24, 8))

HEADER = '''"""Register-blocked inner gemm loops.  GENERATED by _codegen.py, do not edit.

Accumulation order is fixed: l outermost, then tile columns, then tile rows.
Edge rows/columns are clamped onto the last valid one, so the loops never read
outside the operand while the extra tile entries stay masked by the caller.
"""

from numba import njit
'''


def _acc(i, j):
    return f"c{i}_{j}"


def _load_tile(mr, nr):
    return [f"    {_acc(i, j)} = tile[{i}, {j}]" for j in range(nr) for i in range(mr)]


def _store_tile(mr, nr):
    return [f"    tile[{i}, {j}] = {_acc(i, j)}" for j in range(nr) for i in range(mr)]


def _update(mr, j, op):
    return [f"        {_acc(i, j)} {op}= a{i} * b" for i in range(mr)]


def _panel_a(mr, ps):
    """Row pointers and per-l loads for a panel-major left block."""
    pre = [f"    mp = (ma + {ps - 1}) // {ps}"]
    for p in range(mr // ps):
        pre.append(f"    pa{p} = aoff + min({p}, mp - 1) * sda")
    loads = [f"        a{i} = A[pa{i // ps} + l * {ps} + {i % ps}]" for i in range(mr)]
    return pre, loads


def _col_a(mr):
    """Row pointers and per-l loads for a strided (column-major) left block."""
    pre = [f"    pa{i} = aoff + min({i}, ma - 1) * si" for i in range(mr)]
    loads = [f"        a{i} = A[pa{i} + l * sla]" for i in range(mr)]
    return pre, loads


def gen_nt_pp(mr, nr, sub=False):
    name = f"nt_pp{'_sub' if sub else ''}_{mr}x{nr}"
    pre, loads = _panel_a(mr, nr)
    body = [f"def {name}(kmax, A, aoff, sda, ma, B, boff, tile):"]
    body += pre + _load_tile(mr, nr)
    body.append("    for l in range(kmax):")
    body += loads
    for j in range(nr):
        body.append(f"        b = B[boff + l * {nr} + {j}]")
        body += _update(mr, j, "-" if sub else "+")
    body += _store_tile(mr, nr)
    return name, body


def gen_nn_pp(mr, nr):
    name = f"nn_pp_{mr}x{nr}"
    pre, loads = _panel_a(mr, nr)
    body = [f"def {name}(kmax, A, aoff, sda, ma, B, boff, sdb, tile):"]
    body += pre + _load_tile(mr, nr)
    body.append("    for l in range(kmax):")
    body += loads
    body.append(f"        pb = boff + (l // {nr}) * sdb + (l % {nr})")
    for j in range(nr):
        body.append(f"        b = B[pb + {j * nr}]")
        body += _update(mr, j, "+")
    body += _store_tile(mr, nr)
    return name, body


def gen_pc(mr, nr):
    name = f"pc_{mr}x{nr}"
    pre, loads = _panel_a(mr, nr)
    body = [f"def {name}(kmax, A, aoff, sda, ma, B, boff, sj, sl, na, tile):"]
    body += pre
    body += [f"    pb{j} = boff + min({j}, na - 1) * sj" for j in range(nr)]
    body += _load_tile(mr, nr)
    body.append("    for l in range(kmax):")
    body += loads
    for j in range(nr):
        body.append(f"        b = B[pb{j} + l * sl]")
        body += _update(mr, j, "+")
    body += _store_tile(mr, nr)
    return name, body


def gen_cc(mr, nr):
    name = f"cc_{mr}x{nr}"
    pre, loads = _col_a(mr)
    body = [f"def {name}(kmax, A, aoff, si, sla, ma, B, boff, sj, slb, na, tile):"]
    body += pre
    body += [f"    pb{j} = boff + min({j}, na - 1) * sj" for j in range(nr)]
    body += _load_tile(mr, nr)
    body.append("    for l in range(kmax):")
    body += loads
    for j in range(nr):
        body.append(f"        b = B[pb{j} + l * slb]")
        body += _update(mr, j, "+")
    body += _store_tile(mr, nr)
    return name, body


KINDS = {
    "nt_pp": lambda mr, nr: gen_nt_pp(mr, nr),
    "nt_pp_sub": lambda mr, nr: gen_nt_pp(mr, nr, sub=True),
    "nn_pp": gen_nn_pp,
    "pc": gen_pc,
    "cc": gen_cc,
}


def gen_selector(kind, gen):
    names, params = [], None
    for mr, nr in TILE_SHAPES:
        name, body = gen(mr, nr)
        names.append(name)
        params = body[0][body[0].index("(") + 1 : body[0].index(")")]
    body = [f"def {kind}(sel, {params}):"]
    for idx, name in enumerate(names):
        kw = "if" if idx == 0 else "elif"
        body.append(f"    {kw} sel == {idx}:")
        body.append(f"        {name}({params})")
    return kind, body


def generate() -> str:
    out = [HEADER]
    for kind, gen in KINDS.items():
        for mr, nr in TILE_SHAPES:
            _, body = gen(mr, nr)
            out.append("")
            out.append("@njit(cache=True)")
            out.extend(body)
            out.append("")
        _, body = gen_selector(kind, gen)
        out.append("")
        out.append("@njit(cache=True)")
        out.extend(body)
        out.append("")
    return "\n".join(out)


TARGET = Path(__file__).with_name("_inner.py")


if __name__ == "__main__":
    TARGET.write_text(generate())
    print(f"wrote {TARGET}")
