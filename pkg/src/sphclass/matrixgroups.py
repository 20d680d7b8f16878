"""Classical matrix groups with Chevalley generators.

Conventions
-----------
* SL(n+1) and GL(m) act on k^m with the standard Borel of upper triangular
  matrices; the root e_i - e_j has root element I + t E_ij.
* Sp(2n) preserves the anti-diagonal alternating form Omega with
  Omega[i, 2n+1-i] = +1 for i <= n and -1 for i > n.
* SO(2n) preserves Q(x) = sum_{i<=n} x_i x_{2n+1-i} and has Dickson
  invariant 0.
* Position k carries the weight eps_k = e_k for k <= n and -e_{2n+1-k}
  for k > n, so upper triangular group elements form a Borel subgroup and
  lower triangular ones form its opposite.

Block-convention matrices (form [[0, I], [-I, 0]]) are moved into this
convention by :func:`block_to_antidiagonal`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .linalg import berkowitz_charpoly, field_det, field_inverse_matrix, field_rank
from .rootsystem import RootSystem, RootSystemError, build, dot
from .scalars import Field, QQ
from .torus import TorusElem

KINDS = ("SL", "GL", "Sp", "SO")


class MembershipError(ValueError):
    pass


class RecipeError(ValueError):
    """Raised when a family has no matrix realization."""


class GroupTag:
    """Ambient group data: kind, rank parameter n, matrix size, field."""

    def __init__(self, kind: str, n: int, field: Field = QQ):
        if kind not in KINDS:
            raise ValueError(f"unknown group kind {kind}")
        self.kind = kind
        self.n = n
        self.field = field
        if kind == "SL":
            self.size = n + 1
        elif kind == "GL":
            self.size = n
        else:
            self.size = 2 * n
        if self.size < 1 or (kind in ("Sp", "SO") and n < 1):
            raise ValueError("group too small")

    def __repr__(self):
        return f"GroupTag({self.kind}, n={self.n}, size={self.size}, {self.field!r})"

    def __eq__(self, other):
        return isinstance(other, GroupTag) and (self.kind, self.n, self.field) == (other.kind, other.n, other.field)

    def __hash__(self):
        return hash((self.kind, self.n, self.field))

    def with_field(self, field: Field) -> "GroupTag":
        return GroupTag(self.kind, self.n, field)

    @property
    def symmetric(self) -> bool:
        return self.kind in ("Sp", "SO")

    def bar(self, k: int) -> int:
        """The paired position 2n+1-k (1-based)."""
        return self.size + 1 - k

    @cached_property
    def ambient_dim(self) -> int:
        return self.size if self.kind in ("SL", "GL") else self.n

    def eps(self, k: int) -> tuple:
        """Weight of position k (1-based) as an ambient vector."""
        d = self.ambient_dim
        v = [Fraction(0)] * d
        if not self.symmetric:
            v[k - 1] = Fraction(1)
        elif k <= self.n:
            v[k - 1] = Fraction(1)
        else:
            v[self.bar(k) - 1] = Fraction(-1)
        return tuple(v)

    @cached_property
    def root_type(self) -> tuple[str, int]:
        return {"SL": ("A", self.n), "GL": ("A", self.n - 1), "Sp": ("C", self.n), "SO": ("D", self.n)}[self.kind]

    @cached_property
    def rs(self) -> RootSystem:
        return build(*self.root_type)

    @cached_property
    def form(self) -> list[list[int]] | None:
        s = self.size
        if self.kind == "Sp":
            return [[(1 if i < self.n else -1) if j == s - 1 - i else 0 for j in range(s)] for i in range(s)]
        if self.kind == "SO":
            return [[1 if j == s - 1 - i else 0 for j in range(s)] for i in range(s)]
        return None

    @cached_property
    def quadratic_upper(self) -> list[list[int]] | None:
        """Upper triangular matrix U with Q(x) = x^T U x (SO only)."""
        if self.kind != "SO":
            return None
        s = self.size
        return [[1 if (j == s - 1 - i and i < self.n) else 0 for j in range(s)] for i in range(s)]

    @cached_property
    def roots(self) -> list[tuple]:
        """Roots as ambient vectors, computed from pairs of position weights."""
        out = set()
        for a in range(1, self.size + 1):
            for b in range(1, self.size + 1):
                if a == b:
                    continue
                v = tuple(x - y for x, y in zip(self.eps(a), self.eps(b)))
                if not any(v):
                    continue
                if self.kind == "SO" and b == self.bar(a):
                    continue
                out.add(v)
        return sorted(out)

    def positive_roots(self) -> list[tuple]:
        return [r for r in self.roots if self.is_positive(r)]

    def is_positive(self, root: Sequence) -> bool:
        # positive roots are exactly those whose root matrix is strictly upper triangular
        a, b = self.primary_positions(root)
        return a < b

    def root_positions(self, root: Sequence) -> list[tuple[int, int]]:
        root = tuple(Fraction(x) for x in root)
        pairs = []
        for a in range(1, self.size + 1):
            for b in range(1, self.size + 1):
                if a != b and tuple(x - y for x, y in zip(self.eps(a), self.eps(b))) == root:
                    pairs.append((a, b))
        if not pairs:
            raise RootSystemError(f"{root} is not a root of {self.kind}({self.size})")
        return pairs

    def primary_positions(self, root: Sequence) -> tuple[int, int]:
        return min(self.root_positions(root))

    def simple_roots(self) -> list[tuple]:
        if self.kind == "GL":
            d = self.size
            return [tuple(Fraction(int(k == i) - int(k == i + 1)) for k in range(d)) for i in range(d - 1)]
        return list(self.rs.simple)


# -- matrices ----------------------------------------------------------------

class Mat:
    """A square matrix over Q or F_p, tagged with its ambient group."""

    __slots__ = ("rows", "tag")

    def __init__(self, rows: Iterable[Iterable], tag: GroupTag):
        f = tag.field
        self.rows = tuple(tuple(f(x) for x in r) for r in rows)
        self.tag = tag

    @classmethod
    def _raw(cls, rows, tag) -> "Mat":
        m = object.__new__(cls)
        m.rows = rows
        m.tag = tag
        return m

    @classmethod
    def identity(cls, tag: GroupTag) -> "Mat":
        f = tag.field
        one, zero = f.one, f.zero
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(tag.size)) for i in range(tag.size)), tag)

    @classmethod
    def diag(cls, tag: GroupTag, entries: Sequence) -> "Mat":
        s = tag.size
        return cls([[entries[i] if i == j else 0 for j in range(s)] for i in range(s)], tag)

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def field(self) -> Field:
        return self.tag.field

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: "Mat") -> "Mat":
        a, b = self.rows, other.rows
        s = len(a)
        zero = self.field.zero
        cols = list(zip(*b))
        out = tuple(
            tuple(sum((x * y for x, y in zip(a[i], cols[j]) if x and y), zero) for j in range(s))
            for i in range(s)
        )
        return Mat._raw(out, self.tag)

    def __add__(self, other: "Mat") -> "Mat":
        return Mat._raw(tuple(tuple(x + y for x, y in zip(r, q)) for r, q in zip(self.rows, other.rows)), self.tag)

    def __sub__(self, other: "Mat") -> "Mat":
        return Mat._raw(tuple(tuple(x - y for x, y in zip(r, q)) for r, q in zip(self.rows, other.rows)), self.tag)

    def scale(self, c) -> "Mat":
        c = self.field(c)
        return Mat._raw(tuple(tuple(c * x for x in r) for r in self.rows), self.tag)

    def transpose(self) -> "Mat":
        return Mat._raw(tuple(zip(*self.rows)), self.tag)

    def inverse(self) -> "Mat":
        return Mat._raw(tuple(tuple(r) for r in field_inverse_matrix(self.rows, self.field.one)), self.tag)

    def __pow__(self, k: int) -> "Mat":
        if k < 0:
            return self.inverse() ** (-k)
        out = Mat.identity(self.tag)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self, x: "Mat") -> "Mat":
        """self * x * self^{-1}"""
        return self * x * self.inverse()

    def det(self):
        return field_det(self.rows)

    def rank(self) -> int:
        return field_rank(self.rows)

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Mat[{body}]"

    def is_lower_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.size) for j in range(i + 1, self.size))

    def is_upper_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.size) for j in range(i))

    def is_diagonal(self) -> bool:
        return self.is_lower_triangular() and self.is_upper_triangular()

    def packed(self) -> tuple[int, ...]:
        """Row-major residues (F_p matrices only)."""
        return tuple(int(x) for r in self.rows for x in r)


def from_int(tag: GroupTag, rows: Sequence[Sequence[int]]) -> Mat:
    return Mat(rows, tag)


# -- generators ----------------------------------------------------------------

def _elementary(tag: GroupTag, entries: dict) -> list[list[int]]:
    s = tag.size
    m = [[0] * s for _ in range(s)]
    for (i, j), c in entries.items():
        m[i - 1][j - 1] += c
    return m


def _int_mul(a, b):
    s = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(s)) for j in range(s)] for i in range(s)]


def _in_lie_algebra(tag: GroupTag, X) -> bool:
    F = tag.form
    s = tag.size
    XT = [[X[j][i] for j in range(s)] for i in range(s)]
    left = _int_mul(XT, F)
    right = _int_mul(F, X)
    return all(left[i][j] + right[i][j] == 0 for i in range(s) for j in range(s))


def _coroot_diag(tag: GroupTag, alpha: Sequence) -> list[int]:
    aa = dot(alpha, alpha)
    return [int(2 * dot(tag.eps(k), alpha) / aa) for k in range(1, tag.size + 1)]


def _root_matrix_positive(tag: GroupTag, alpha: tuple) -> list[list[int]]:
    a, b = tag.primary_positions(alpha)
    if not tag.symmetric or b == tag.bar(a):
        return _elementary(tag, {(a, b): 1})
    for c in (1, -1):
        X = _elementary(tag, {(a, b): 1, (tag.bar(b), tag.bar(a)): c})
        if _in_lie_algebra(tag, X):
            return X
    raise AssertionError("no Lie algebra element for root")


_ROOT_CACHE: dict = {}


def root_matrix(tag: GroupTag, alpha: Sequence) -> list[list[int]]:
    """Integer matrix X_alpha with x_alpha(t) = I + t X_alpha.

    For positive alpha the primary matrix unit has coefficient +1; X_{-alpha}
    is normalized so that [X_alpha, X_{-alpha}] is the coroot diagonal.
    """
    alpha = tuple(Fraction(x) for x in alpha)
    key = (tag.kind, tag.n, alpha)
    if key in _ROOT_CACHE:
        return _ROOT_CACHE[key]
    if tag.is_positive(alpha):
        X = _root_matrix_positive(tag, alpha)
    else:
        pos = tuple(-x for x in alpha)
        Xp = _root_matrix_positive(tag, pos)
        a, b = tag.primary_positions(alpha)
        if not tag.symmetric or b == tag.bar(a):
            cands = [_elementary(tag, {(a, b): 1})]
        else:
            cands = [_elementary(tag, {(a, b): 1, (tag.bar(b), tag.bar(a)): c}) for c in (1, -1)]
            cands = [Y for Y in cands if _in_lie_algebra(tag, Y)]
        Y = cands[0]
        h = _coroot_diag(tag, pos)
        br = [[u - v for u, v in zip(r1, r2)] for r1, r2 in zip(_int_mul(Xp, Y), _int_mul(Y, Xp))]
        diag = [br[i][i] for i in range(tag.size)]
        if diag == [-x for x in h]:
            Y = [[-x for x in r] for r in Y]
        elif diag != h:
            raise AssertionError("root matrices do not span an sl2")
        X = Y
    _ROOT_CACHE[key] = X
    return X


def gen_x(tag: GroupTag, alpha: Sequence, t) -> Mat:
    """x_alpha(t) = I + t X_alpha."""
    X = root_matrix(tag, alpha)
    f = tag.field
    t = f(t)
    s = tag.size
    return Mat._raw(tuple(tuple((f.one if i == j else f.zero) + t * X[i][j] if X[i][j] else (f.one if i == j else f.zero)
                                for j in range(s)) for i in range(s)), tag)


def gen_h(tag: GroupTag, alpha: Sequence, z) -> Mat:
    """h_alpha(z): diagonal with entry z^{<eps_k, alpha^vee>} at position k."""
    z = tag.field(z)
    if not z:
        raise ZeroDivisionError("h_alpha(0) is undefined")
    h = _coroot_diag(tag, tuple(Fraction(x) for x in alpha))
    return Mat.diag(tag, [z ** e for e in h])


def gen_n(tag: GroupTag, alpha: Sequence) -> Mat:
    """n_alpha = x_alpha(1) x_{-alpha}(-1) x_alpha(1)."""
    neg = tuple(-Fraction(x) for x in alpha)
    return gen_x(tag, alpha, 1) * gen_x(tag, neg, -1) * gen_x(tag, alpha, 1)


def torus_matrix(tag: GroupTag, t: TorusElem, values: dict) -> Mat:
    """Realize a symbolic torus element given values for its symbols.

    ``values`` maps symbols (or their names) to field elements.
    """
    rs = t.rs
    if (rs.type_label, rs.rank) != tag.root_type:
        raise RecipeError("torus element lives in a different root system")
    f = tag.field
    entries = [f.one] * tag.size
    # <eps_k, alpha_i^vee> for the simple coroots
    pair = [[int(2 * dot(tag.eps(k), a) / dot(a, a)) for a in rs.simple] for k in range(1, tag.size + 1)]
    for z, y in t.terms.items():
        if z in values:
            val = values[z]
        elif z.name in values:
            val = values[z.name]
        elif z.order == 2:
            val = -1
        else:
            raise RecipeError(f"no value supplied for symbol {z}")
        val = f(val)
        for k in range(tag.size):
            e = sum(c * q for c, q in zip(y, pair[k]))
            entries[k] = entries[k] * val ** e
    return Mat.diag(tag, entries)


# -- membership ----------------------------------------------------------------

def dickson_invariant(g: Mat) -> int:
    """rank(g - I) mod 2 (characteristic 2)."""
    return (g - Mat.identity(g.tag)).rank() % 2


def preserves_quadratic_form(g: Mat) -> bool:
    U = Mat(g.tag.quadratic_upper, g.tag)
    M = g.transpose() * U * g - U
    s = g.size
    return all(not M[i, i] for i in range(s)) and all(not (M[i, j] + M[j, i]) for i in range(s) for j in range(s))


def is_member(g: Mat) -> bool:
    tag = g.tag
    if tag.kind == "GL":
        return bool(g.det())
    if tag.kind == "SL":
        return g.det() == 1
    if tag.kind == "Sp":
        F = Mat(tag.form, tag)
        return g.transpose() * F * g == F
    if not preserves_quadratic_form(g):
        return False
    if tag.field.char == 2:
        return dickson_invariant(g) == 0
    return g.det() == 1


def check_member(g: Mat) -> Mat:
    if not is_member(g):
        raise MembershipError(f"matrix is not in {g.tag.kind}({g.size})")
    return g


# -- characteristic polynomial -------------------------------------------------

def char_poly(M: Mat) -> list:
    """Coefficients c_0..c_n of det(X I - M), lowest degree first."""
    return berkowitz_charpoly(M.rows, M.field.one)


def poly_from_roots(roots: Sequence, field: Field) -> list:
    coeffs = [field.one]
    for r in roots:
        r = field(r)
        new = [field.zero] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] - r * c
        coeffs = new
    return coeffs


def eigenspace_dim(M: Mat, value) -> int:
    v = M.field(value)
    return M.size - (M - Mat.identity(M.tag).scale(v)).rank()


# -- coordinate conventions ------------------------------------------------------

def block_permutation(size: int) -> list[int]:
    """0-based map from block-convention indices to anti-diagonal indices."""
    n = size // 2
    return [i if i < n else size - 1 - (i - n) for i in range(size)]


def block_to_antidiagonal(rows: Sequence[Sequence], tag: GroupTag) -> Mat:
    """Conjugate a block-convention matrix into the anti-diagonal convention.

    The block form [[0, I], [-I, 0]] becomes Omega under the permutation
    n+i -> 2n+1-i; the permutation is returned by :func:`block_permutation`.
    """
    perm = block_permutation(tag.size)
    s = tag.size
    out = [[0] * s for _ in range(s)]
    for i in range(s):
        for j in range(s):
            out[perm[i]][perm[j]] = rows[i][j]
    return Mat(out, tag)


# -- appendix families -----------------------------------------------------------

def appendix_gl3(m, a, b, c, field: Field = QQ) -> tuple[Mat, tuple[Mat, Mat, Mat]]:
    """The GL(3) representative x_m(a,b,c) with its factorization w0 * d * u."""
    f = field
    m, a, b, c = (f(v) for v in (m, a, b, c))
    if not (m and a and b and c):
        raise ValueError("parameters must be nonzero")
    tag = GroupTag("GL", 3, f)
    p3 = (a + m) * (b + m) * (c + m)
    x = Mat([[0, 0, a * b * c / m],
             [0, -m, -p3 / m],
             [1, 1, a + b + c + m]], tag)
    w0 = Mat([[0, 0, 1], [0, -1, 0], [1, 0, 0]], tag)
    d = Mat.diag(tag, [1, m, a * b * c / m])
    u = Mat([[1, 1, a + b + c + m], [0, 1, p3 / (m * m)], [0, 0, 1]], tag)
    return x, (w0, d, u)


def appendix_sp4_block(m, a, field: Field = QQ) -> list[list]:
    f = field
    m, a = f(m), f(a)
    return [[0, 0, -1 / m, 0],
            [0, 0, -1, 1],
            [m, m, (a * a + m + 1) / a, m * (-2 * a + m + 1) / a],
            [0, -1, -1 / a, 2 - m / a]]


def appendix_sp4(m, a, field: Field = QQ) -> Mat:
    """The Sp(4) representative x_m in the anti-diagonal convention."""
    f = field
    a_, m_ = f(a), f(m)
    if not m_:
        raise ValueError("m must be nonzero")
    if a_ * a_ == 1 or not a_:
        raise ValueError("a must avoid 0, 1, -1")
    return block_to_antidiagonal(appendix_sp4_block(m, a, f), GroupTag("Sp", 2, f))


# -- family representatives and conjugators ----------------------------------------

class ConstraintError(ValueError):
    """Parameter values violate a family's exclusions or have no realization in the field."""


def family_tag(f, n: int, field: Field = QQ) -> GroupTag:
    if not getattr(f, "matrix_kind", None):
        raise RecipeError(f"{f.family_id} has no classical matrix realization")
    return GroupTag(f.matrix_kind, f.fixed_rank or n, field)


def _check_lambda(lam, field: Field) -> None:
    if not lam or lam == field.one or lam == -field.one:
        raise ConstraintError(f"lambda must avoid 0, 1 and -1 in {field.name} (got {lam})")


def type_a_pair(n: int, k: int, field: Field, mu=2) -> tuple:
    """Units (a, b) with a^k b^(n+1-k) = 1 and a != b.

    The first try is a = mu^(n+1-k), b = mu^(-k); over a finite field the
    units are searched when that choice collapses.
    """
    mu = field(mu)
    if mu:
        a, b = mu ** (n + 1 - k), mu ** (-k)
        if a != b:
            return a, b
    if field.is_finite:
        for a in field.units():
            for b in field.units():
                if a != b and a ** k * b ** (n + 1 - k) == field.one:
                    return a, b
    raise ConstraintError(f"no pair a != b with a^{k} b^{n + 1 - k} = 1 in {field.name}")


def family_values(f, inst, params: dict, field: Field) -> dict:
    """Field values for the family's matrix column (validated)."""
    if f.family_id.startswith("A."):
        k = inst.get("k")
        if "a" in params and "b" in params:
            a, b = field(params["a"]), field(params["b"])
            if a == b or a ** k * b ** (inst.n + 1 - k) != field.one:
                raise ConstraintError("need a != b and a^k b^(n+1-k) = 1")
        else:
            a, b = type_a_pair(inst.n, k, field, params.get("mu", params.get("a", 2)))
        return {"a": a, "b": b}
    lam = field(params.get("lambda", 2))
    _check_lambda(lam, field)
    return {"lambda": lam}


def representative(f, n: int, params: dict, field: Field = QQ, inst=None) -> Mat:
    """The table's matrix column in the anti-diagonal convention."""
    tag = family_tag(f, n, field)
    inst = inst or f.instances(tag.n)[0]
    vals = family_values(f, inst, params, field)
    diag = f.matrix_diag(inst, vals)
    if tag.symmetric:
        perm = block_permutation(tag.size)
        out = [None] * tag.size
        for i, d in enumerate(diag):
            out[perm[i]] = d
        diag = out
    return check_member(Mat.diag(tag, diag))


def conjugator(f, n: int, field: Field = QQ, inst=None) -> Mat:
    """n_{b_1} ... n_{b_l} x_{c_1}(1) ... x_{c_m}(1) in the printed order."""
    tag = family_tag(f, n, field)
    if f.conj_n is None:
        raise RecipeError(f"{f.family_id} has no conjugator recipe")
    inst = inst or f.instances(tag.n)[0]
    rs = tag.rs
    g = Mat.identity(tag)
    for b in f.conj_n(rs, inst):
        g = g * gen_n(tag, b)
    for c in f.conj_x(rs, inst):
        g = g * gen_x(tag, c, 1)
    return g


def root_value(tag: GroupTag, d: Mat, alpha: Sequence):
    """alpha(d) for a diagonal matrix d, read off at the root's primary position."""
    a, b = tag.primary_positions(alpha)
    return d[a - 1, a - 1] / d[b - 1, b - 1]
