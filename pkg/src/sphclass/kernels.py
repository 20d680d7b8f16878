"""Kernel selection: the compiled extension when it is built and usable,
otherwise the pure-Python reference.

Set ``SPHCLASS_PURE_PYTHON=1`` to force the reference implementation.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("SPHCLASS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None
    if _compiled is not None:
        _impl = _compiled
        BACKEND = "cython"

MODE_CONJ = _kernels_py.MODE_CONJ
MODE_FLAG = _kernels_py.MODE_FLAG


def _fits(n: int, p: int) -> bool:
    return BACKEND == "python" or (n <= 8 and p < 256)


def _pick(n: int, p: int):
    return _impl if _fits(n, p) else _kernels_py


def matmul(a, b, n: int, p: int) -> tuple:
    return _pick(n, p).matmul(a, b, n, p)


def flag_canon(m, n: int, p: int) -> tuple:
    return _pick(n, p).flag_canon(m, n, p)


def closure(start, gens, ginvs, n: int, p: int, cap: int, mode: int = MODE_CONJ):
    return _pick(n, p).closure(tuple(start), list(gens), list(ginvs), n, p, cap, mode)


def partition(elems, gens, ginvs, n: int, p: int, mode: int = MODE_CONJ) -> list[int]:
    return _pick(n, p).partition(elems, list(gens), list(ginvs), n, p, mode)
