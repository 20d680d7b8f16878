"""Compare the compiled and pure-Python census kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each workload runs on both backends; the results must agree before the
timings are printed.
"""

from __future__ import annotations

import argparse
import time

from sphclass import _kernels_py
from sphclass.matrixgroups import GroupTag, Mat
from sphclass.orbits import _pack, _semisimple_centralizer, borel_generators, group_generators
from sphclass.scalars import GF

try:
    from sphclass import _ckernels
except ImportError:
    _ckernels = None


def _class_workload(kind, n, q, diag):
    tag = GroupTag(kind, n, GF(q))
    x = Mat.diag(tag, diag)
    g, gi = _pack(group_generators(tag))
    b, bi = _pack(borel_generators(tag))

    def work(mod):
        elems, done = mod.closure(x.packed(), g, gi, tag.size, q, 10 ** 7, mod.MODE_CONJ)
        assert done
        labels = mod.partition(elems, b, bi, tag.size, q, mod.MODE_CONJ)
        return len(elems), len(set(labels))
    return f"class census {kind}({tag.size}) q={q} diag={diag}", work


def _flag_workload(kind, n, q, diag):
    tag = GroupTag(kind, n, GF(q))
    x = Mat.diag(tag, diag)
    g = [m.packed() for m in group_generators(tag)]
    c = [m.packed() for m in _semisimple_centralizer(tag, x)]
    ident = Mat.identity(tag).packed()

    def work(mod):
        flags, done = mod.closure(ident, g, g, tag.size, q, 10 ** 7, mod.MODE_FLAG)
        assert done
        labels = mod.partition(flags, c, c, tag.size, q, mod.MODE_FLAG)
        return len(flags), len(set(labels))
    return f"flag census {kind}({tag.size}) q={q} diag={diag}", work


def _timed(fn, mod, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(mod)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    workloads = [
        _class_workload("SL", 2, 5, [1, 2, 3]),
        _class_workload("SL", 3, 3, [1, 1, 2, 2]),
        _flag_workload("SL", 3, 5, [1, 2, 3, 3]),
    ]
    if _ckernels is None:
        print("compiled kernels are not built; only the Python backend is timed")
    print(f"{'workload':48} {'python s':>9} {'cython s':>9} {'speedup':>8}  result")
    for name, work in workloads:
        tp, rp = _timed(work, _kernels_py, args.repeat)
        if _ckernels is None:
            print(f"{name:48} {tp:9.3f} {'-':>9} {'-':>8}  {rp}")
            continue
        tc, rc = _timed(work, _ckernels, args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on {name}: {rp} vs {rc}")
        print(f"{name:48} {tp:9.3f} {tc:9.3f} {tp / tc:7.1f}x  {rc}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
