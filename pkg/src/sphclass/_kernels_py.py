"""Pure-Python reference kernels for the finite-field censuses.

Matrices are packed row-major tuples of residues in [0, p).  Two actions
are supported: conjugation g x g^{-1} (``MODE_CONJ``) and left
multiplication on cosets gB, normalised by :func:`flag_canon`
(``MODE_FLAG``).  The compiled module mirrors these signatures exactly.
"""

from __future__ import annotations

MODE_CONJ = 0
MODE_FLAG = 1


def matmul(a, b, n: int, p: int) -> tuple:
    cols = [b[j::n] for j in range(n)]
    out = []
    for i in range(0, n * n, n):
        row = a[i:i + n]
        for c in cols:
            out.append(sum(x * y for x, y in zip(row, c)) % p)
    return tuple(out)


def flag_canon(m, n: int, p: int) -> tuple:
    """Canonical representative of the coset m B, B the upper triangular matrices.

    Columns are processed left to right: earlier columns are used to clear
    the pivot rows, then the lowest nonzero entry is scaled to 1.
    """
    cols = [[m[i * n + j] for i in range(n)] for j in range(n)]
    pivots: list[int] = []
    for j in range(n):
        c = cols[j]
        for k, r in enumerate(pivots):
            t = c[r]
            if t:
                pc = cols[k]
                c = [(x - t * y) % p for x, y in zip(c, pc)]
        r = max(i for i in range(n) if c[i])
        inv = pow(c[r], p - 2, p)
        cols[j] = [(x * inv) % p for x in c]
        pivots.append(r)
    return tuple(cols[j][i] for i in range(n) for j in range(n))


def _act(mode, g, ginv, x, n, p):
    if mode == MODE_CONJ:
        return matmul(matmul(g, x, n, p), ginv, n, p)
    return flag_canon(matmul(g, x, n, p), n, p)


def closure(start, gens, ginvs, n: int, p: int, cap: int, mode: int = MODE_CONJ):
    """Orbit of ``start`` under the group generated by ``gens``.

    Returns ``(elements, complete)``; ``complete`` is False when the cap
    stopped the search (``elements`` then holds the partial orbit).
    """
    if mode == MODE_FLAG:
        start = flag_canon(start, n, p)
    seen = {start: 0}
    order = [start]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for g, gi in zip(gens, ginvs):
            y = _act(mode, g, gi, x, n, p)
            if y not in seen:
                if len(order) >= cap:
                    return order, False
                seen[y] = len(order)
                order.append(y)
    return order, True


def partition(elems, gens, ginvs, n: int, p: int, mode: int = MODE_CONJ) -> list[int]:
    """Orbit labels of ``elems`` (a union of orbits) under the generated group.

    Each element is labelled by the index of the smallest packed key in its
    orbit, so the result does not depend on generator order.
    """
    index = {x: i for i, x in enumerate(elems)}
    parent = list(range(len(elems)))

    def find(i):
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    for i, x in enumerate(elems):
        for g, gi in zip(gens, ginvs):
            j = index[_act(mode, g, gi, x, n, p)]
            a, b = find(i), find(j)
            if a != b:
                # keep the smaller key as root
                if elems[a] < elems[b]:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(i) for i in range(len(elems))]
