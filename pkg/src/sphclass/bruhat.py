"""Bruhat cells of explicit matrices via rank arrays.

For an invertible M let r(i, j) be the rank of the submatrix on rows i..N and
columns 1..j.  Left and right multiplication by upper triangular matrices
leaves r unchanged, and for the permutation matrix of sigma (ones at
(sigma(j), j)) r(i, j) = #{l <= j : sigma(l) >= i}.  So sigma is read off by
second differences of r.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .matrixgroups import GroupTag, Mat
from .rootsystem import RootSystemError
from .weyl import WeylElem


class CellError(ValueError):
    pass


@dataclass
class CellResult:
    ambient_perm: tuple[int, ...]  # 1-based: sigma(j) for j = 1..N
    weyl: WeylElem | None
    in_opposite_borel: bool
    notes: list[str] = field(default_factory=list)

    def inversions(self) -> int:
        s = self.ambient_perm
        return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])


def _prefix_ranks(rows: Sequence[Sequence]) -> list[int]:
    """ranks[j] = rank of the first j columns of the given rows (j = 0..N)."""
    a = [list(r) for r in rows]
    m = len(a)
    ncols = len(a[0]) if a else 0
    out = [0]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is not None:
            a[rank], a[piv] = a[piv], a[rank]
            inv = 1 / a[rank][col]
            for i in range(rank + 1, m):
                f = a[i][col]
                if f:
                    f = f * inv
                    a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
            rank += 1
        out.append(rank)
    return out


def rank_array(M: Mat) -> list[list[int]]:
    """r[i][j] for i = 1..N+1 (row N+1 is zero) and j = 0..N; index r[i-1][j]."""
    N = M.size
    r = [_prefix_ranks(M.rows[i:]) for i in range(N)]
    r.append([0] * (N + 1))
    return r


def perm_from_ranks(r: list[list[int]]) -> tuple[int, ...]:
    N = len(r) - 1
    sigma = []
    for j in range(1, N + 1):
        hits = [i for i in range(1, N + 1)
                if r[i - 1][j] - r[i - 1][j - 1] - r[i][j] + r[i][j - 1] == 1]
        if len(hits) != 1:
            raise CellError("rank array does not come from a permutation (singular matrix?)")
        sigma.append(hits[0])
    return tuple(sigma)


def ranks_of_perm(sigma: Sequence[int]) -> list[list[int]]:
    N = len(sigma)
    r = [[sum(1 for l in range(j) if sigma[l] >= i) for j in range(N + 1)] for i in range(1, N + 1)]
    r.append([0] * (N + 1))
    return r


def perm_matrix(tag: GroupTag, sigma: Sequence[int]) -> Mat:
    s = tag.size
    rows = [[0] * s for _ in range(s)]
    for j, i in enumerate(sigma):
        rows[i - 1][j] = 1
    return Mat(rows, tag)


def signed_action(tag: GroupTag, sigma: Sequence[int]):
    """The linear map on the ambient space induced by sigma (eps_j -> eps_sigma(j))."""
    def act(v):
        out = [Fraction(0)] * tag.ambient_dim
        if tag.symmetric:
            for j in range(1, tag.n + 1):
                img = tag.eps(sigma[j - 1])
                for k in range(tag.ambient_dim):
                    out[k] += v[j - 1] * img[k]
        else:
            for j in range(1, tag.size + 1):
                out[sigma[j - 1] - 1] += v[j - 1]
        return tuple(out)
    return act


def perm_to_weyl(tag: GroupTag, sigma: Sequence[int]) -> WeylElem:
    rs = tag.rs
    act = signed_action(tag, sigma)
    try:
        images = [rs.coeffs_of(act(a)) for a in rs.simple]
    except RootSystemError as exc:
        raise CellError(f"permutation {tuple(sigma)} is not a Weyl group element: {exc}") from None
    return WeylElem.from_images(rs, images)


def check_signed_symmetry(tag: GroupTag, sigma: Sequence[int]) -> bool:
    s = tag.size
    return all(sigma[s - j] == s + 1 - sigma[j - 1] for j in range(1, s + 1))


def ambient_length(tag: GroupTag, sigma: Sequence[int]) -> int:
    """Length of the Weyl element read from the permutation alone."""
    s = len(sigma)
    inv = sum(1 for i in range(s) for j in range(i + 1, s) if sigma[i] > sigma[j])
    if not tag.symmetric:
        return inv
    neg = sum(1 for j in range(tag.n) if sigma[j] > tag.n)
    if tag.kind == "Sp":
        return (inv + neg) // 2
    return (inv - neg) // 2


def bruhat_cell(M: Mat) -> CellResult:
    tag = M.tag
    if not M.det():
        raise CellError("matrix is singular")
    r = rank_array(M)
    sigma = perm_from_ranks(r)
    if ranks_of_perm(sigma) != r:
        raise CellError("inconsistent rank array")
    if tag.symmetric and not check_signed_symmetry(tag, sigma):
        raise CellError(f"permutation {sigma} violates the signed symmetry; form convention bug")
    weyl = perm_to_weyl(tag, sigma) if tag.kind != "GL" or tag.size >= 2 else None
    res = CellResult(sigma, weyl, in_opposite_borel(M))
    if weyl is not None and ambient_length(tag, sigma) != weyl.length():
        raise CellError("length from permutation disagrees with Weyl length")
    return res


def in_opposite_borel(M: Mat) -> bool:
    return M.is_lower_triangular()


# -- cell claims for the classical families -------------------------------------------

def _torus_cross_check(f, inst, tag: GroupTag, params: dict):
    """Matrix realization of the family's torus word against its matrix column.

    Returns (expected, computed) or None when the field has no admissible value.
    """
    from . import matrixgroups as mg
    rs, field = tag.rs, tag.field
    t = f.torus_rep(rs, inst, field.char)
    z = field(params.get("lambda", 2))
    names = {s.name for s in t.symbols()}
    try:
        if "mu" in names and f.family_id.startswith("A."):
            k = inst.get("k")
            a, b = z ** (inst.n + 1 - k), z ** (-k)
            if a == b:
                return None
            rep = mg.representative(f, tag.n, {"a": a, "b": b}, field, inst)
        elif "mu" in names:
            rep = mg.representative(f, tag.n, {"lambda": z * z}, field, inst)
        else:
            rep = mg.representative(f, tag.n, {"lambda": z}, field, inst)
    except mg.ConstraintError:
        return None
    real = mg.torus_matrix(tag, t, {name: z for name in names})
    return rep, real


def verify_cell_claim(f, n: int, params: dict | None = None, field=None, inst=None):
    """Check that g x g^{-1} lies in B w B with w = w_0 w_J and is lower triangular."""
    from . import matrixgroups as mg
    from .classes import VerificationReport, group_name
    from .scalars import QQ
    from .weyl import product_of_reflections, w_of_class

    field = field or QQ
    params = dict(params or {})
    n = f.fixed_rank or n
    rep = VerificationReport(f.family_id, group_name(f, n), n, field.char, field.name)
    inst = inst or f.instances(n)[0]
    if inst.sub:
        rep.notes.append(",".join(f"{k}={v}" for k, v in inst.sub))
    if not f.matrix_kind or f.conj_n is None:
        rep.status = "skipped"
        rep.notes.append("not applicable: no classical realization")
        return rep
    if not f.admissible_rank(n) or not f.allows_char(field.char):
        rep.status = "skipped"
        rep.notes.append("rank or characteristic outside the family's range")
        return rep
    tag = mg.family_tag(f, n, field)
    try:
        x = mg.representative(f, n, params, field, inst)
    except mg.ConstraintError as exc:
        x = None
        for u in (field.units() or []):
            try:
                x = mg.representative(f, n, {**params, "lambda": int(u)}, field, inst)
            except mg.ConstraintError:
                continue
            params["lambda"] = int(u)
            rep.notes.append(f"{exc}; used lambda = {int(u)} instead")
            break
        if x is None:
            rep.status = "skipped"
            rep.notes.append(f"no admissible parameter in {field.name}: {exc}")
            return rep
    rep.notes.append("diag=" + ",".join(str(x[i, i]) for i in range(x.size)))

    cc = _torus_cross_check(f, inst, tag, params)
    if cc is not None:
        rep.add("torus_word_matches_matrix", True, cc[0] == cc[1])

    g = mg.conjugator(f, n, field, inst)
    y = g * x * g.inverse()
    rs = tag.rs
    try:
        cell = bruhat_cell(y)
    except CellError as exc:
        rep.add("bruhat_cell", "a Weyl element", str(exc), False)
        return rep
    w_refl = product_of_reflections(rs, f.w_roots(rs, inst))
    w_table, _ = w_of_class(rs, f.J(inst))
    rep.add("cell_is_product_of_reflections", w_refl.reduced_word(), cell.weyl.reduced_word(),
            cell.weyl == w_refl)
    rep.add("cell_is_w0_wJ", w_table.reduced_word(), cell.weyl.reduced_word(), cell.weyl == w_table)
    rep.add("in_opposite_borel", True, cell.in_opposite_borel)

    bn, bx = f.conj_n(rs, inst), f.conj_x(rs, inst)
    if [tuple(b) for b in bn] == [tuple(b) for b in bx]:
        # g x g^{-1} = prod x_{-b}(b(x) - 1) * x' with x' diagonal
        low = Mat.identity(tag)
        for b in bn:
            nb = tuple(-c for c in b)
            low = low * mg.gen_x(tag, nb, mg.root_value(tag, x, b) - field.one)
        rest = low.inverse() * y
        rep.add("exchange_form", True, rest.is_diagonal())
    return rep
