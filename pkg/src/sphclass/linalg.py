"""Exact linear algebra over Z, Q and F_p.

Matrices are sequences of rows.  Integer routines never divide except where
the division is known to be exact (Bareiss); field routines work with any
values supporting ``+ - * /`` exactly (Fractions or :class:`~sphclass.scalars.Fp`).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = Sequence[Sequence]


def bareiss_rank(rows: Matrix) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, m):
            f = a[i][col]
            row_i = a[i]
            row_r = a[rank]
            for j in range(col, n):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def bareiss_det(rows: Matrix) -> int:
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def field_rank(rows: Matrix) -> int:
    """Rank over the field the entries live in (Fractions or Fp)."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        for i in range(rank + 1, m):
            f = a[i][col]
            if f != 0:
                f = f * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def field_det(rows: Matrix):
    a = [list(r) for r in rows]
    n = len(a)
    det = None
    sign = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return a[0][0] * 0 if n else 1
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        det = p if det is None else det * p
        inv = 1 / p
        for i in range(col + 1, n):
            f = a[i][col]
            if f != 0:
                f = f * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    if det is None:
        return 1
    return det if sign == 1 else -det


def field_inverse_matrix(rows: Matrix, one):
    """Gauss-Jordan inverse; ``one`` is the field's unit element."""
    n = len(rows)
    zero = one - one
    a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [r[n:] for r in a]


def solve_rational(cols: Matrix, target: Sequence) -> list[Fraction] | None:
    """Solve ``sum_j c_j * cols[j] = target`` exactly for linearly independent columns.

    Returns ``None`` when the target is outside the span.
    """
    k = len(cols)
    if k == 0:
        return [] if all(t == 0 for t in target) else None
    dim = len(target)
    a = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(dim)]
    row = 0
    pivots = []
    for col in range(k):
        piv = next((i for i in range(row, dim) if a[i][col] != 0), None)
        if piv is None:
            raise ValueError("columns are linearly dependent")
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for i in range(dim):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    if any(a[i][k] != 0 for i in range(row, dim)):
        return None
    return [a[i][k] for i in range(k)]


def hermite_rows(rows: Matrix) -> list[list[int]]:
    """Row-style Hermite normal form (nonzero rows only) of an integer matrix."""
    a = [list(map(int, r)) for r in rows if any(r)]
    if not a:
        return []
    n = len(a[0])
    out_row = 0
    for col in range(n):
        while True:
            nz = [i for i in range(out_row, len(a)) if a[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][col]))
            a[out_row], a[piv] = a[piv], a[out_row]
            p = a[out_row][col]
            done = True
            for i in range(out_row + 1, len(a)):
                q = a[i][col] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[out_row])]
                if a[i][col] != 0:
                    done = False
            if done:
                break
        if out_row < len(a) and a[out_row][col] != 0:
            if a[out_row][col] < 0:
                a[out_row] = [-x for x in a[out_row]]
            p = a[out_row][col]
            for i in range(out_row):
                q = a[i][col] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[out_row])]
            out_row += 1
    return [r for r in a[:out_row]]


def in_integer_span(hnf: list[list[int]], v: Sequence[int]) -> bool:
    """Membership of ``v`` in the lattice spanned by the rows of a Hermite form."""
    v = list(map(int, v))
    for r in hnf:
        col = next(j for j, x in enumerate(r) if x != 0)
        if v[col] % r[col]:
            return False
        q = v[col] // r[col]
        if q:
            v = [x - q * y for x, y in zip(v, r)]
    return not any(v)


def integer_kernel(rows: Matrix) -> list[list[int]]:
    """A basis of ``{x in Z^c : M x = 0}`` for an integer ``r x c`` matrix ``M``.

    The basis spans the full (saturated) kernel lattice.
    """
    if not rows:
        return []
    r, c = len(rows), len(rows[0])
    # rows of [M^T | I]; row-reduce on the first r columns
    aug = [[int(rows[i][j]) for i in range(r)] + [1 if k == j else 0 for k in range(c)] for j in range(c)]
    out_row = 0
    for col in range(r):
        while True:
            nz = [i for i in range(out_row, c) if aug[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(aug[i][col]))
            aug[out_row], aug[piv] = aug[piv], aug[out_row]
            p = aug[out_row][col]
            clean = True
            for i in range(out_row + 1, c):
                q = aug[i][col] // p
                if q:
                    aug[i] = [x - q * y for x, y in zip(aug[i], aug[out_row])]
                if aug[i][col] != 0:
                    clean = False
            if clean:
                break
        if out_row < c and aug[out_row][col] != 0:
            out_row += 1
    return [row[r:] for row in aug[out_row:]]


def smith_invariants(rows: Matrix) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    a = [list(map(int, r)) for r in rows]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(m, n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j] != 0]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            changed = False
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t] != 0:
                    changed = True
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j] != 0:
                    changed = True
            if not changed:
                # divisibility condition for the rest of the block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % p != 0), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                changed = True
            if changed:
                nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n)
                      if a[i][j] != 0 and (i == t or j == t)]
                _, pi, pj = min(nz)
                a[t], a[pi] = a[pi], a[t]
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def berkowitz_charpoly(rows: Matrix, one) -> list:
    """Coefficients ``[c_0, ..., c_n]`` of ``det(X I - M)`` (``c_n == 1``).

    Division-free, so valid over any commutative ring, in particular F_2.
    """
    n = len(rows)
    zero = one - one
    if n == 0:
        return [one]
    a = [list(r) for r in rows]
    # vectors hold coefficients from the highest power down
    vect = [one, -a[0][0]]
    for r in range(1, n):
        # partition: a[r][:r] row, a[:r][r] column, a[:r][:r] block, a[r][r]
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        block = [a[i][:r] for i in range(r)]
        # Toeplitz column: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
        t = [one, -a[r][r]]
        v = col
        for _ in range(r):
            t.append(-sum((x * y for x, y in zip(row, v)), zero))
            v = [sum((block[i][j] * v[j] for j in range(r)), zero) for i in range(r)]
        # multiply lower-triangular Toeplitz (size (r+2) x (r+1)) by vect
        new = []
        for i in range(r + 2):
            s = zero
            for j in range(min(i, r) + 1):
                if i - j < len(t):
                    s = s + t[i - j] * vect[j]
            new.append(s)
        vect = new
    return list(reversed(vect))


def gcd_list(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, int(x))
    return g
