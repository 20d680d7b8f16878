"""Weyl group elements acting on the span of the simple roots.

An element is stored as an integer matrix in simple-root coordinates whose
j-th column is the image of alpha_j.  Equality is equality of matrices, so
it does not depend on any chosen word.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import bareiss_rank
from .rootsystem import RootSystem, RootSystemError


class WeylElem:
    __slots__ = ("rs", "mat", "word")

    def __init__(self, rs: RootSystem, mat: Sequence[Sequence[int]], word: Sequence[int] | None = None):
        self.rs = rs
        self.mat = tuple(tuple(int(x) for x in row) for row in mat)
        self.word = tuple(word) if word is not None else None

    # -- construction -------------------------------------------------------

    @classmethod
    def identity(cls, rs: RootSystem) -> "WeylElem":
        n = rs.rank
        return cls(rs, [[int(i == j) for j in range(n)] for i in range(n)], word=())

    @classmethod
    def simple_reflection(cls, rs: RootSystem, i: int) -> "WeylElem":
        """s_{alpha_i} with a 0-based index."""
        n = rs.rank
        cols = [rs.reflect_coeffs(tuple(int(k == j) for k in range(n)), i) for j in range(n)]
        return cls(rs, [[cols[j][r] for j in range(n)] for r in range(n)], word=(i,))

    @classmethod
    def from_images(cls, rs: RootSystem, images: Sequence[Sequence[int]]) -> "WeylElem":
        n = rs.rank
        return cls(rs, [[images[j][r] for j in range(n)] for r in range(n)])

    # -- action -------------------------------------------------------------

    def apply(self, v: Sequence[int]) -> tuple:
        """Image of a simple-coordinate vector."""
        return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in self.mat)

    def apply_root(self, root: Sequence[Fraction]) -> tuple:
        """Image of a root given in ambient coordinates (returns ambient coordinates)."""
        return self.rs.root_from_coeffs(self.apply(self.rs.coeffs_of(root)))

    def images(self) -> list[tuple]:
        n = self.rs.rank
        return [tuple(self.mat[r][j] for r in range(n)) for j in range(n)]

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        if other.rs is not self.rs:
            raise RootSystemError("Weyl elements of different root systems")
        n = self.rs.rank
        a, b = self.mat, other.mat
        prod = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        word = self.word + other.word if self.word is not None and other.word is not None else None
        return WeylElem(self.rs, prod, word)

    def inverse(self) -> "WeylElem":
        # orthogonality: M^{-1} = G^{-1} M^T G
        n = self.rs.rank
        g = self.rs.gram
        from .linalg import field_inverse_matrix
        ginv = field_inverse_matrix([[Fraction(x) for x in row] for row in g], Fraction(1))
        mt = [[self.mat[j][i] for j in range(n)] for i in range(n)]
        t = [[sum(mt[i][k] * g[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        inv = [[sum(ginv[i][k] * t[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElem(self.rs, [[int(x) for x in row] for row in inv], word)

    def __eq__(self, other):
        return isinstance(other, WeylElem) and other.rs is self.rs and other.mat == self.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        w = self.reduced_word()
        return f"WeylElem({self.rs.name}, word={[i + 1 for i in w]})"

    # -- invariants ---------------------------------------------------------

    def is_identity(self) -> bool:
        return self == WeylElem.identity(self.rs)

    def is_involution(self) -> bool:
        return (self * self).is_identity()

    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for c in self.rs.positive_coeffs if sum(self.apply(c)) < 0)

    def sends_positive(self, i: int) -> bool:
        return sum(col[i] for col in self.mat) > 0

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word (0-based indices) found by repeatedly stripping right descents."""
        w = self
        word: list[int] = []
        n = self.rs.rank
        while True:
            i = next((i for i in range(n) if not w.sends_positive(i)), None)
            if i is None:
                break
            word.append(i)
            w = w * WeylElem.simple_reflection(self.rs, i)
        return tuple(reversed(word))

    def word_product(self) -> "WeylElem":
        """Evaluate the attached word (consistency check for stored words)."""
        out = WeylElem.identity(self.rs)
        for i in self.word or ():
            out = out * WeylElem.simple_reflection(self.rs, i)
        return out

    def is_valid(self) -> bool:
        """Permutes the roots and preserves the Gram matrix."""
        rs = self.rs
        if any(self.apply(c) not in rs._from_coeffs for c in rs.positive_coeffs):
            return False
        n = rs.rank
        imgs = self.images()
        g = rs.gram
        for i in range(n):
            for j in range(n):
                a, b = imgs[i], imgs[j]
                if sum(a[k] * g[k][l] * b[l] for k in range(n) for l in range(n)) != g[i][j]:
                    return False
        return True


def reflection(rs: RootSystem, alpha: Sequence) -> WeylElem:
    """s_alpha for an arbitrary root alpha (ambient coordinates)."""
    a = rs.coeffs_of(alpha)
    n = rs.rank
    cols = []
    for j in range(n):
        ej = tuple(int(k == j) for k in range(n))
        c = rs.coeff_pairing(ej, a)
        cols.append(tuple(ej[k] - c * a[k] for k in range(n)))
    return WeylElem.from_images(rs, cols)


def length(w: WeylElem) -> int:
    return w.length()


def longest_in_subset(rs: RootSystem, J: Iterable[int]) -> WeylElem:
    """Longest element of W_J, J given as 1-based simple-root indices.

    Greedy ascent: post-multiply by s_i for the lowest i in J whose simple
    root is still sent to a positive root.
    """
    idx = sorted(j - 1 for j in J)
    w = WeylElem.identity(rs)
    while True:
        i = next((i for i in idx if w.sends_positive(i)), None)
        if i is None:
            return w
        w = w * WeylElem.simple_reflection(rs, i)


def longest_element(rs: RootSystem) -> WeylElem:
    return longest_in_subset(rs, range(1, rs.rank + 1))


def rank_one_minus(w: WeylElem) -> int:
    """Rank of 1 - w on the span of the simple roots."""
    n = w.rs.rank
    return bareiss_rank([[int(i == j) - w.mat[i][j] for j in range(n)] for i in range(n)])


def theta(rs: RootSystem) -> dict[int, int]:
    """The diagram symmetry induced by -w_0, on 1-based indices."""
    w0 = longest_element(rs)
    out = {}
    for i in range(rs.rank):
        img = tuple(-x for x in w0.images()[i])
        j = img.index(1)
        out[i + 1] = j + 1
    return out


def w_of_class(rs: RootSystem, J: Iterable[int]) -> tuple[WeylElem, dict[str, bool]]:
    """w_0 w_J together with the two side conditions it must satisfy.

    Returns ``(w, {"theta_invariant": ..., "w0_equals_wJ_on_J": ...})``.
    """
    J = sorted(set(J))
    w0 = longest_element(rs)
    wJ = longest_in_subset(rs, J)
    th = theta(rs)
    inv = {th[j] for j in J} == set(J)
    agree = all(w0.images()[j - 1] == wJ.images()[j - 1] for j in J)
    return w0 * wJ, {"theta_invariant": inv, "w0_equals_wJ_on_J": agree}


def product_of_reflections(rs: RootSystem, roots: Sequence[Sequence]) -> WeylElem:
    """s_{r_1} s_{r_2} ... s_{r_k} (composition in the given order)."""
    out = WeylElem.identity(rs)
    for r in roots:
        out = out * reflection(rs, r)
    return out


def all_elements(rs: RootSystem, cap: int = 100_000) -> list[WeylElem]:
    """Every element of W by breadth-first closure (small ranks only)."""
    gens = [WeylElem.simple_reflection(rs, i) for i in range(rs.rank)]
    start = WeylElem.identity(rs)
    seen = {start.mat: start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = w * s
                if u.mat not in seen:
                    seen[u.mat] = u
                    nxt.append(u)
                    if len(seen) > cap:
                        raise MemoryError(f"|W| exceeds cap {cap}")
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


def involutions(rs: RootSystem) -> list[WeylElem]:
    return [w for w in all_elements(rs) if w.is_involution()]
