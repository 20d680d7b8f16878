"""Root systems of the simple types in Bourbaki coordinates.

A root is a tuple of :class:`~fractions.Fraction` coordinates in the ambient
space.  Every root also has integer coordinates with respect to the simple
roots; most downstream code works with those ("coefficient vectors").
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

Vector = tuple  # tuple of Fraction

_VALID = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


class RootSystemError(ValueError):
    pass


def _vec(dim: int, entries: dict) -> Vector:
    v = [Fraction(0)] * dim
    for k, x in entries.items():
        v[k - 1] = Fraction(x)
    return tuple(v)


def e(dim: int, i: int) -> Vector:
    """The standard basis vector e_i (1-based)."""
    return _vec(dim, {i: 1})


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _simple_roots(label: str, n: int) -> tuple[int, list[Vector]]:
    half = Fraction(1, 2)
    if label == "A":
        d = n + 1
        return d, [sub(e(d, i), e(d, i + 1)) for i in range(1, n + 1)]
    if label in "BCD":
        d = n
        simple = [sub(e(d, i), e(d, i + 1)) for i in range(1, n)]
        if label == "B":
            simple.append(e(d, n))
        elif label == "C":
            simple.append(scale(2, e(d, n)))
        else:
            simple.append(add(e(d, n - 1), e(d, n)))
        return d, simple
    if label == "E":
        d = 8
        a1 = tuple([half] + [-half] * 6 + [half])
        simple = [a1, add(e(d, 1), e(d, 2)), sub(e(d, 2), e(d, 1))]
        simple += [sub(e(d, i), e(d, i - 1)) for i in range(3, 8)]
        return d, simple[:n]
    if label == "F":
        d = 4
        return d, [sub(e(d, 2), e(d, 3)), sub(e(d, 3), e(d, 4)), e(d, 4),
                   (half, -half, -half, -half)]
    if label == "G":
        d = 3
        return d, [sub(e(d, 1), e(d, 2)), _vec(d, {1: -2, 2: 1, 3: 1})]
    raise RootSystemError(f"unknown type {label}")


def validate_type(label: str, n: int) -> None:
    if label in _VALID:
        if n < _VALID[label]:
            raise RootSystemError(f"{label}{n} is not a valid simple type")
        return
    if label in _EXCEPTIONAL:
        if n not in _EXCEPTIONAL[label]:
            raise RootSystemError(f"{label}{n} is not a valid simple type")
        return
    raise RootSystemError(f"unknown type {label!r}")


class RootSystem:
    """An irreducible reduced crystallographic root system.

    Attributes of note:

    * ``simple``: ambient coordinates of alpha_1..alpha_n (Bourbaki order)
    * ``roots``: all roots, lexicographically sorted
    * ``coeffs``: root -> integer simple-root coordinates
    * ``cartan``: ``cartan[i][j] = <alpha_i, alpha_j> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j)``
    * ``d_weights``: squared lengths of the simple roots, normalized so the
      shortest has weight 1; ``(alpha_i, alpha_j)`` is proportional to
      ``d_weights[i] * cartan[j][i]``, so ``D A^T`` is symmetric
    """

    def __init__(self, label: str, n: int):
        validate_type(label, n)
        self.type_label = label
        self.rank = n
        self.ambient_dim, self.simple = _simple_roots(label, n)
        s = self.simple
        self.cartan = tuple(
            tuple(int(2 * dot(s[i], s[j]) / dot(s[j], s[j])) for j in range(n)) for i in range(n)
        )
        norms = [dot(a, a) for a in s]
        m = min(norms)
        self.d_weights = tuple(int(x / m) for x in norms)
        # integer Gram matrix in the simple basis, scaled so that entries are integers
        gram = [[dot(s[i], s[j]) for j in range(n)] for i in range(n)]
        den = lcm(*(x.denominator for row in gram for x in row))
        self.gram = tuple(tuple(int(x * den) for x in row) for row in gram)
        self._gen_roots()
        expected = _ROOT_COUNTS[label](n)
        if len(self.roots) != expected:
            raise AssertionError(f"{self.name}: generated {len(self.roots)} roots, expected {expected}")

    # -- construction -------------------------------------------------------

    def _gen_roots(self) -> None:
        n = self.rank
        start = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        seen = set(start)
        frontier = list(start)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(n):
                    w = self.reflect_coeffs(v, i)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        self._coeff_list = sorted(seen)
        to_amb = {c: self.ambient(c) for c in seen}
        self.roots = sorted(to_amb.values())
        self.coeffs = {r: c for c, r in to_amb.items()}
        self._from_coeffs = to_amb
        self.positive_roots = sorted(r for r in self.roots if self.is_positive(r))
        self.positive_coeffs = sorted(self.coeffs[r] for r in self.positive_roots)
        height = lambda c: sum(c)
        top = max(self.positive_coeffs, key=height)
        self.highest_root = to_amb[top]

    def ambient(self, coeffs: Sequence[int]) -> Vector:
        v = [Fraction(0)] * self.ambient_dim
        for c, a in zip(coeffs, self.simple):
            if c:
                for k in range(self.ambient_dim):
                    v[k] += c * a[k]
        return tuple(v)

    def reflect_coeffs(self, v: Sequence[int], i: int) -> tuple:
        """s_{alpha_i} applied to a simple-coordinate vector."""
        c = sum(v[j] * self.cartan[j][i] for j in range(self.rank))
        out = list(v)
        out[i] -= c
        return tuple(out)

    # -- queries ------------------------------------------------------------

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.type_label!r}, {self.rank})"

    def is_root(self, v: Sequence) -> bool:
        return tuple(Fraction(x) for x in v) in self.coeffs

    def root_from_coeffs(self, c: Sequence[int]) -> Vector:
        try:
            return self._from_coeffs[tuple(c)]
        except KeyError:
            raise RootSystemError(f"{tuple(c)} is not a root of {self.name}") from None

    def coeffs_of(self, root: Sequence) -> tuple:
        try:
            return self.coeffs[tuple(Fraction(x) for x in root)]
        except KeyError:
            raise RootSystemError(f"{tuple(root)} is not a root of {self.name}") from None

    def is_positive(self, root: Sequence) -> bool:
        return sum(self.coeffs_of(root)) > 0

    def is_long(self, root: Sequence) -> bool:
        longest = max(dot(a, a) for a in self.simple)
        return dot(root, root) == longest

    @property
    def simply_laced(self) -> bool:
        return self.type_label in "ADE"

    def coeff_pairing(self, b: Sequence[int], a: Sequence[int]) -> int:
        """<b, a> for simple-coordinate vectors (a must be a root)."""
        g = self.gram
        n = self.rank
        ba = sum(b[i] * g[i][j] * a[j] for i in range(n) for j in range(n))
        aa = sum(a[i] * g[i][j] * a[j] for i in range(n) for j in range(n))
        q, r = divmod(2 * ba, aa)
        if r:
            raise AssertionError("non-integral pairing")
        return q

    def norm2(self, c: Sequence[int]) -> int:
        """Scaled squared length of a simple-coordinate vector."""
        g = self.gram
        n = self.rank
        return sum(c[i] * g[i][j] * c[j] for i in range(n) for j in range(n))

    def neg(self, c: Sequence[int]) -> tuple:
        return tuple(-x for x in c)

    def extended_coeffs(self) -> list[tuple]:
        """Simple coordinates of alpha_0, alpha_1, ..., alpha_n."""
        theta = self.coeffs[self.highest_root]
        return [self.neg(theta)] + [tuple(1 if k == i else 0 for k in range(self.rank))
                                    for i in range(self.rank)]

    def marks(self) -> list[int]:
        """Coefficients of the highest root (the marks of alpha_1..alpha_n)."""
        return list(self.coeffs[self.highest_root])


@lru_cache(maxsize=None)
def build(type_label: str, n: int) -> RootSystem:
    return RootSystem(type_label, n)


def pairing(beta: Sequence, alpha: Sequence) -> int:
    """<beta, alpha> = 2(beta, alpha)/(alpha, alpha) for ambient vectors."""
    q = 2 * dot(beta, alpha) / dot(alpha, alpha)
    if q.denominator != 1:
        raise RootSystemError("pairing is not an integer")
    return int(q)


def extended_simple_set(rs: RootSystem) -> list[Vector]:
    """alpha_0 = -theta followed by the simple roots."""
    return [scale(-1, rs.highest_root)] + list(rs.simple)


# β/γ/δ root lists ---------------------------------------------------------

_EXC_BETAS = {
    ("E", 6): {
        "beta": [(1, 2, 2, 3, 2, 1), (1, 0, 1, 1, 1, 1), (0, 0, 1, 1, 1, 0), (0, 0, 0, 1, 0, 0)],
    },
    ("E", 7): {
        "beta": [(2, 2, 3, 4, 3, 2, 1), (0, 1, 1, 2, 2, 2, 1), (0, 1, 1, 2, 1, 0, 0),
                 (0, 0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 1, 0, 0), (0, 0, 1, 0, 0, 0, 0),
                 (0, 1, 0, 0, 0, 0, 0)],
    },
    ("E", 8): {
        "beta": [(2, 3, 4, 6, 5, 4, 3, 2), (2, 2, 3, 4, 3, 2, 1, 0), (0, 1, 1, 2, 2, 2, 1, 0),
                 (0, 1, 1, 2, 1, 0, 0, 0), (0, 0, 0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 1, 0, 0, 0),
                 (0, 0, 1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0, 0)],
    },
    ("F", 4): {
        "beta": [(2, 3, 4, 2), (0, 1, 2, 2), (0, 1, 2, 0), (0, 1, 0, 0)],
        "gamma": [(1, 2, 3, 2)],
    },
    ("G", 2): {
        "beta": [(3, 2), (1, 0)],
        "gamma": [(2, 1)],
    },
}


def paper_beta_roots(type_label: str, n: int) -> dict[str, list[Vector]]:
    """The named orthogonal root lists used for the class representatives.

    Type A: beta_i = e_i - e_{n+2-i}.  Type C: beta_i = 2e_i and
    gamma_i = e_{2i-1} + e_{2i}.  Type D: beta_l = e_{2l-1} + e_{2l} and
    delta_l = e_{2l-1} - e_{2l}.  Exceptional lists are given in simple-root
    coordinates.  Every vector is checked to be a root.
    """
    rs = build(type_label, n)
    d = rs.ambient_dim
    out: dict[str, list[Vector]] = {}
    if type_label == "A":
        out["beta"] = [sub(e(d, i), e(d, n + 2 - i)) for i in range(1, (n + 1) // 2 + 1)]
    elif type_label == "C":
        out["beta"] = [scale(2, e(d, i)) for i in range(1, n + 1)]
        out["gamma"] = [add(e(d, 2 * i - 1), e(d, 2 * i)) for i in range(1, n // 2 + 1)]
    elif type_label == "D":
        out["beta"] = [add(e(d, 2 * l - 1), e(d, 2 * l)) for l in range(1, n // 2 + 1)]
        out["delta"] = [sub(e(d, 2 * l - 1), e(d, 2 * l)) for l in range(1, n // 2 + 1)]
    elif (type_label, n) in _EXC_BETAS:
        for key, lst in _EXC_BETAS[(type_label, n)].items():
            out[key] = [rs.ambient(c) for c in lst]
    else:
        raise RootSystemError(f"no root lists recorded for {rs.name}")
    for key, lst in out.items():
        for v in lst:
            if not rs.is_root(v):
                raise RootSystemError(f"{key} entry {v} is not a root of {rs.name}")
    return out
