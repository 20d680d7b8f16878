"""Finite-field B-orbit censuses.

All counts here are oracle evidence over F_q, not theorem checks: sphericity
is a statement over an algebraically closed field.

Two census modes are available.  ``class`` enumerates the conjugacy class of
x by BFS and partitions it under conjugation by Borel generators.  ``flags``
counts the same double cosets B \\ G / C(x) from the other side, as
C(x)-orbits on the flag variety G/B; it needs generators of C(x) but only
touches |G/B| points, which keeps large classes within reach.
"""

from __future__ import annotations

import os
import time
from fractions import Fraction
from collections import Counter
from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct
from typing import Callable, Sequence

from . import kernels
from .bruhat import bruhat_cell
from .linalg import integer_kernel
from .matrixgroups import (GroupTag, Mat, appendix_gl3, appendix_sp4, char_poly, conjugator,
                           eigenspace_dim, gen_h, gen_n, gen_x, poly_from_roots, representative)
from .scalars import GF
from .weyl import longest_in_subset, w_of_class

DEFAULT_MAX_Q = 7
DEFAULT_MAX_CLASS = 2_000_000
DEFAULT_MAX_U = 1_000_000


class ResourceCapError(RuntimeError):
    def __init__(self, message: str, partial: int = 0):
        super().__init__(message)
        self.partial = partial


def caps() -> dict:
    """Resource caps, overridable through SPHCLASS_MAX_Q / _MAX_CLASS / _MAX_U."""
    return {
        "max_q": int(os.environ.get("SPHCLASS_MAX_Q", DEFAULT_MAX_Q)),
        "max_class": int(os.environ.get("SPHCLASS_MAX_CLASS", DEFAULT_MAX_CLASS)),
        "max_u": int(os.environ.get("SPHCLASS_MAX_U", DEFAULT_MAX_U)),
    }


def _check_q(q: int) -> None:
    cap = caps()["max_q"]
    if q > cap:
        raise ResourceCapError(f"q = {q} exceeds the cap {cap} (SPHCLASS_MAX_Q)")


# -- generators ----------------------------------------------------------------------

def _unit_diag(tag: GroupTag, pos_weights: Sequence[int], z) -> Mat:
    f = tag.field
    z = f(z)
    return Mat.diag(tag, [z ** w for w in pos_weights])


def torus_generators(tag: GroupTag) -> list[Mat]:
    """Generators of the split torus T(F_q) of the matrix group."""
    g = tag.field.generator()
    s = tag.size
    if tag.kind == "GL":
        return [_unit_diag(tag, [int(k == i) for k in range(s)], g) for i in range(s)]
    if tag.kind == "SL":
        return [gen_h(tag, a, g) for a in tag.simple_roots()]
    # Sp and SO: diag(t_1..t_n, t_n^{-1}..t_1^{-1}) with every t_i free
    out = []
    for i in range(1, tag.n + 1):
        w = [0] * s
        w[i - 1], w[tag.bar(i) - 1] = 1, -1
        out.append(_unit_diag(tag, w, g))
    return out


def group_generators(tag: GroupTag) -> list[Mat]:
    """x_a(1), x_a(g) for simple +-a, plus torus generators (g generates F_q^*)."""
    if not tag.field.is_finite:
        raise ValueError("group generators are defined over F_q only")
    _check_q(tag.field.char)
    g = tag.field.generator()
    out = []
    for a in tag.simple_roots():
        for r in (a, tuple(-x for x in a)):
            out.append(gen_x(tag, r, 1))
            if g != 1:
                out.append(gen_x(tag, r, g))
    return out + torus_generators(tag)


def borel_generators(tag: GroupTag) -> list[Mat]:
    """Torus generators and x_a(1) for every positive root a (q prime)."""
    return torus_generators(tag) + [gen_x(tag, a, 1) for a in tag.positive_roots()]


def borel_order(tag: GroupTag) -> int:
    q = tag.field.char
    rank = tag.size if tag.kind == "GL" else tag.n
    return (q - 1) ** rank * q ** len(tag.positive_roots())


def group_order(tag: GroupTag) -> int:
    """|G(F_q)| from the standard order formulas (SO means the kernel of Dickson)."""
    q, n = tag.field.char, tag.n
    if tag.kind == "GL":
        return _gl_order(tag.size, q)
    if tag.kind == "SL":
        return _gl_order(tag.size, q) // (q - 1)
    out = q ** (n * n) if tag.kind == "Sp" else q ** (n * (n - 1)) * (q ** n - 1)
    for i in range(1, n + (1 if tag.kind == "Sp" else 0)):
        out *= q ** (2 * i) - 1
    return out


def _pack(mats: Sequence[Mat]) -> tuple[list, list]:
    return [m.packed() for m in mats], [m.inverse().packed() for m in mats]


def unpack(tag: GroupTag, key: Sequence[int]) -> Mat:
    s = tag.size
    return Mat([key[i * s:(i + 1) * s] for i in range(s)], tag)


# -- closures ---------------------------------------------------------------------

def group_elements(tag: GroupTag, cap: int | None = None) -> list[tuple]:
    """All of G(F_q) by left-multiplication closure (small groups only)."""
    cap = cap or caps()["max_class"]
    gens = group_generators(tag)
    ident = Mat.identity(tag).packed()
    g = [m.packed() for m in gens]
    elems, complete = kernels.closure(ident, g, [ident] * len(g), tag.size, tag.field.char, cap)
    if not complete:
        raise ResourceCapError(f"group closure exceeds {cap} elements", len(elems))
    return elems


def conjugacy_class(x: Mat, cap: int | None = None) -> list[tuple]:
    cap = cap or caps()["max_class"]
    _check_q(x.field.char)
    g, gi = _pack(group_generators(x.tag))
    elems, complete = kernels.closure(x.packed(), g, gi, x.size, x.field.char, cap)
    if not complete:
        raise ResourceCapError(f"class of x exceeds {cap} elements (stopped at {len(elems)})", len(elems))
    return elems


def subgroup_closure(tag: GroupTag, gens: Sequence[Mat], cap: int | None = None) -> list[tuple]:
    cap = cap or caps()["max_class"]
    ident = Mat.identity(tag).packed()
    g = [m.packed() for m in gens]
    elems, complete = kernels.closure(ident, g, [ident] * len(g), tag.size, tag.field.char, cap)
    if not complete:
        raise ResourceCapError(f"subgroup closure exceeds {cap} elements", len(elems))
    return elems


def flag_variety(tag: GroupTag, cap: int | None = None) -> list[tuple]:
    """Canonical representatives of G(F_q)/B(F_q)."""
    cap = cap or caps()["max_class"]
    g = [m.packed() for m in group_generators(tag)]
    ident = Mat.identity(tag).packed()
    elems, complete = kernels.closure(ident, g, g, tag.size, tag.field.char, cap, kernels.MODE_FLAG)
    if not complete:
        raise ResourceCapError(f"flag variety exceeds {cap} points", len(elems))
    return elems


# -- censuses -------------------------------------------------------------------------

@dataclass
class OrbitCensus:
    tag: GroupTag
    q: int
    base: tuple
    class_size: int | None
    b_orbit_count: int
    b_orbit_sizes: list[int]
    mode: str = "class"
    runtime: float = 0.0
    backend: str = kernels.BACKEND
    notes: list[str] = dc_field(default_factory=list)
    labels: dict = dc_field(default_factory=dict, repr=False)

    def orbit_of(self, key: Sequence[int]) -> int:
        return self.labels[tuple(key)]

    def largest_fraction(self) -> float | None:
        if not self.b_orbit_sizes or not self.class_size:
            return None
        return max(self.b_orbit_sizes) / self.class_size

    def to_dict(self) -> dict:
        return {
            "group": f"{self.tag.kind}({self.tag.size})", "q": self.q, "mode": self.mode,
            "class_size": self.class_size, "b_orbit_count": self.b_orbit_count,
            "b_orbit_sizes": sorted(self.b_orbit_sizes, reverse=True)[:20],
            "runtime_s": round(self.runtime, 3), "backend": self.backend,
            "notes": ["oracle evidence over F_q"] + list(self.notes),
        }


def b_orbit_census(x: Mat, cap: int | None = None, shuffle_seed: int | None = None) -> OrbitCensus:
    """Partition the class of x into B(F_q)-orbits by union-find."""
    t0 = time.perf_counter()
    tag, q = x.tag, x.field.char
    elems = conjugacy_class(x, cap)
    bg = borel_generators(tag)
    if shuffle_seed is not None:
        import random
        random.Random(shuffle_seed).shuffle(bg)
    g, gi = _pack(bg)
    roots = kernels.partition(elems, g, gi, tag.size, q)
    sizes = Counter(roots)
    labels = {e: r for e, r in zip(elems, roots)}
    return OrbitCensus(tag, q, x.packed(), len(elems), len(sizes), sorted(sizes.values()),
                       "class", time.perf_counter() - t0, labels=labels)


def centralizer_flag_census(x: Mat, cgens: Sequence[Mat], centralizer_order: int | None = None,
                            cap: int | None = None) -> OrbitCensus:
    """Count B-orbits on the class of x as C(x)-orbits on G/B.

    ``cgens`` must generate C(x)(F_q); each generator is checked to commute
    with x.  With ``centralizer_order`` the B-orbit sizes are recovered as
    |C-orbit| * |B| / |C|.
    """
    t0 = time.perf_counter()
    tag, q = x.tag, x.field.char
    _check_q(q)
    for c in cgens:
        if c * x != x * c:
            raise ValueError("centralizer generator does not commute with x")
    flags = flag_variety(tag, cap)
    g = [c.packed() for c in cgens]
    roots = kernels.partition(flags, g, g, tag.size, q, kernels.MODE_FLAG)
    sizes = Counter(roots)
    census = OrbitCensus(tag, q, x.packed(), None, len(sizes), [], "flags",
                         time.perf_counter() - t0)
    census.notes.append(f"{len(flags)} flags; C(x)-orbit sizes {sorted(sizes.values(), reverse=True)[:10]}")
    if centralizer_order:
        border = borel_order(tag)
        census.class_size = 0
        for s in sizes.values():
            num = s * border
            if num % centralizer_order:
                raise ValueError("orbit size bookkeeping is inconsistent")
            census.b_orbit_sizes.append(num // centralizer_order)
            census.class_size += num // centralizer_order
        census.b_orbit_sizes.sort()
    return census


# -- appendix lemmas ---------------------------------------------------------------------

def distinct_orbit_check(elems_keys: Sequence[tuple], census: OrbitCensus) -> tuple[int, bool]:
    """(number of distinct B-orbits met, all members lie in the class)."""
    if not all(k in census.labels for k in elems_keys):
        return 0, False
    return len({census.orbit_of(k) for k in elems_keys}), True


def default_gl3_triple(q: int) -> tuple[int, int, int]:
    """(1,2,3) when F_q has three distinct units, otherwise (1,1,2)."""
    return (1, 2, 3) if q - 1 >= 3 else (1, 1, 2)


def appendix_gl3_check(q: int, abc: Sequence[int] | None = None) -> dict:
    f = GF(q)
    a, b, c = abc or default_gl3_triple(q)
    xs = [appendix_gl3(m, a, b, c, f)[0] for m in range(1, q)]
    census = b_orbit_census(xs[0])
    met, inside = distinct_orbit_check([x.packed() for x in xs], census)
    want_cp = poly_from_roots([a, b, c], f)
    cps = all(char_poly(x) == want_cp for x in xs)
    w0_cells = all(bruhat_cell(x).ambient_perm == (3, 2, 1) for x in xs)
    degenerate = [m for m in range(1, q) if any((v + m) % q == 0 for v in (a, b, c))]
    return {
        "group": "GL(3)", "q": q, "params": {"a": a, "b": b, "c": c},
        "members": q - 1, "all_in_one_class": inside, "distinct_b_orbits": met,
        "expected_b_orbits": q - 1, "char_poly_ok": cps, "w0_cell": w0_cells,
        "census": census.to_dict(),
        "notes": ([f"m in {degenerate} zero the (2,3) entry; kept, the argument does not use it"]
                  if degenerate else []),
    }


def appendix_sp4_check(q: int, a: int = 2) -> dict:
    f = GF(q)
    aa = f(a)
    if not aa or aa == 1 or aa == -1:
        raise ValueError(f"a = {a} must avoid 0, 1, -1 in F_{q}")
    xs = [appendix_sp4(m, a, f) for m in range(1, q)]
    tag = xs[0].tag
    g = gen_h(tag, _sp4_beta1(tag), a) * gen_x(tag, tag.simple_roots()[1], 1)
    census = b_orbit_census(g)
    met, inside = distinct_orbit_check([x.packed() for x in xs], census)
    want_cp = poly_from_roots([1, 1, aa, 1 / aa], f)
    return {
        "group": "Sp(4)", "q": q, "params": {"a": a},
        "members": q - 1, "all_in_one_class": inside, "distinct_b_orbits": met,
        "expected_b_orbits": q - 1,
        "char_poly_ok": all(char_poly(x) == want_cp for x in xs),
        "one_eigenspace_dims": sorted({eigenspace_dim(x, 1) for x in xs}),
        "w0_cell": all(bruhat_cell(x).ambient_perm == (4, 3, 2, 1) for x in xs),
        "census": census.to_dict(), "notes": [],
    }


def _sp4_beta1(tag: GroupTag):
    """beta_1 = 2 e_1 in Sp(4)."""
    return (Fraction(2), Fraction(0))


# -- growth probes ----------------------------------------------------------------------

@dataclass
class ProbeCase:
    name: str
    spherical: bool
    description: str
    build: Callable[[int], tuple]  # q -> (x, centralizer generators, |C(x)(F_q)|)
    min_q: int = 2


def _roots_fixed(tag: GroupTag, x: Mat) -> list:
    out = []
    for r in tag.roots:
        a, b = tag.primary_positions(r)
        if x[a - 1, a - 1] == x[b - 1, b - 1]:
            out.append(r)
    return out


def _semisimple_centralizer(tag: GroupTag, x: Mat) -> list[Mat]:
    """T(F_q) and x_a(1) for the roots fixed by the diagonal x (connected case)."""
    return torus_generators(tag) + [gen_x(tag, r, 1) for r in _roots_fixed(tag, x)]


def _gl_order(m: int, q: int) -> int:
    out = 1
    for i in range(m):
        out *= q ** m - q ** i
    return out


def _sl2_semisimple(q: int):
    tag = GroupTag("SL", 1, GF(q))
    g = tag.field.generator()
    x = Mat.diag(tag, [g, 1 / g])
    return x, torus_generators(tag), q - 1


def _sl2_unipotent(q: int):
    tag = GroupTag("SL", 1, GF(q))
    a = tag.simple_roots()[0]
    x = gen_x(tag, a, 1)
    return x, [gen_x(tag, a, 1), gen_h(tag, a, -1)], 2 * q


def _sl4_two(q: int):
    tag = GroupTag("SL", 3, GF(q))
    x = Mat.diag(tag, [1, 1, -1, -1])
    return x, _semisimple_centralizer(tag, x), _gl_order(2, q) ** 2 // (q - 1)


def sl4_three_eigen(q: int) -> tuple:
    f = GF(q)
    for a, b, c in iproduct(f.units(), repeat=3):
        if len({a, b, c}) == 3 and a * b * c * c == 1:
            return a, b, c
    raise ValueError(f"no three distinct eigenvalues with a b c^2 = 1 in F_{q}")


def _sl4_three(q: int):
    tag = GroupTag("SL", 3, GF(q))
    a, b, c = sl4_three_eigen(q)
    x = Mat.diag(tag, [a, b, c, c])
    return x, _semisimple_centralizer(tag, x), (q - 1) ** 2 * _gl_order(2, q) // (q - 1)


def _gl4_three(q: int):
    """The same eigenvalues in GL(4), where C(x) = GL1 x GL1 x GL2 surjects onto det."""
    tag = GroupTag("GL", 4, GF(q))
    a, b, c = sl4_three_eigen(q)
    x = Mat.diag(tag, [a, b, c, c])
    return x, _semisimple_centralizer(tag, x), (q - 1) ** 2 * _gl_order(2, q)


def _sp4_mixed(q: int, a: int = 2):
    tag = GroupTag("Sp", 2, GF(q))
    if tag.field(a) in (tag.field(1), tag.field(-1)):
        raise ValueError(f"a = {a} must avoid +-1 in F_{q}")
    beta1, alpha2 = _sp4_beta1(tag), tag.simple_roots()[1]
    x = gen_h(tag, beta1, a) * gen_x(tag, alpha2, 1)
    cg = [gen_h(tag, beta1, tag.field.generator()), gen_x(tag, alpha2, 1), gen_h(tag, alpha2, -1)]
    return x, cg, (q - 1) * 2 * q


PROBES: dict[str, ProbeCase] = {
    "sl2-semisimple": ProbeCase("sl2-semisimple", True, "SL(2), diag(g, 1/g), g a generator", _sl2_semisimple, 5),
    "sl2-unipotent": ProbeCase("sl2-unipotent", True, "SL(2), x_a(1)", _sl2_unipotent, 2),
    "sl4-2eigen": ProbeCase("sl4-2eigen", True, "SL(4), diag(1,1,-1,-1)", _sl4_two, 3),
    "sl4-3eigen": ProbeCase("sl4-3eigen", False, "SL(4), diag(a,b,c,c) with a,b,c distinct", _sl4_three, 5),
    "gl4-3eigen": ProbeCase("gl4-3eigen", False, "GL(4), diag(a,b,c,c) with a,b,c distinct", _gl4_three, 5),
    "sp4-mixed": ProbeCase("sp4-mixed", False, "Sp(4), h_b1(a) x_a2(1) with a != +-1", _sp4_mixed, 5),
}


def growth_probe(case: str, qs: Sequence[int]) -> dict:
    """B-orbit counts per q and the growth signature (oracle heuristic)."""
    pc = PROBES[case]
    rows, skipped = [], []
    for q in qs:
        if q < pc.min_q:
            skipped.append({"q": q, "reason": f"no instance of '{pc.description}' over F_{q}"})
            continue
        x, cg, corder = pc.build(q)
        census = centralizer_flag_census(x, cg, corder)
        rows.append({"q": q, "b_orbit_count": census.b_orbit_count, "class_size": census.class_size,
                     "largest_orbit_fraction": census.largest_fraction(), "runtime_s": round(census.runtime, 3)})
    counts = [r["b_orbit_count"] for r in rows]
    increasing = len(counts) >= 2 and all(a < b for a, b in zip(counts, counts[1:]))
    stable = len(counts) >= 2 and all(a >= b for a, b in zip(counts, counts[1:]))
    signature = "increasing" if increasing else ("stable" if stable else "mixed")
    expected = "stable" if pc.spherical else "increasing"
    return {"case": case, "description": pc.description, "spherical_expected": pc.spherical,
            "rows": rows, "skipped": skipped, "signature": signature,
            "pass": signature == expected, "notes": ["oracle evidence over F_q"]}


# -- dense-orbit centralizers --------------------------------------------------------------

def _unipotent_keys(tag: GroupTag, roots: Sequence) -> set:
    """Packed elements of the group generated by x_a(1), a in ``roots``."""
    if not roots:
        return {Mat.identity(tag).packed()}
    return set(subgroup_closure(tag, [gen_x(tag, r, 1) for r in roots], caps()["max_u"]))


def _weyl_matrix(tag: GroupTag, word: Sequence[int]) -> Mat:
    simple = tag.simple_roots()
    m = Mat.identity(tag)
    for i in word:
        m = m * gen_n(tag, simple[i])
    return m


def _position_perm(m: Mat) -> list[int]:
    """sigma with m e_j = +- e_sigma(j) (0-based) for a monomial matrix."""
    s = m.size
    return [next(i for i in range(s) if m[i, j]) for j in range(s)]


def _fixed_torus_identity_component(tag: GroupTag, sigma: Sequence[int]) -> list[list[int]]:
    """Basis of Y^w as position-weight vectors for the permutation sigma."""
    s = tag.size
    seen, cycles = [False] * s, []
    for i in range(s):
        if not seen[i]:
            c, j = [], i
            while not seen[j]:
                seen[j] = True
                c.append(j)
                j = sigma[j]
            cycles.append(c)
    if tag.kind == "SL":
        ker = integer_kernel([[len(c) for c in cycles]])
        return [[sum(v[k] for k, c in enumerate(cycles) if i in c) for i in range(s)] for v in ker]
    out, done = [], set()
    for k, c in enumerate(cycles):
        barc = sorted(tag.bar(i + 1) - 1 for i in c)
        kb = next(j for j, d in enumerate(cycles) if sorted(d) == barc)
        if kb == k or kb in done:
            continue
        done.add(k)
        out.append([1 if i in c else (-1 if i in cycles[kb] else 0) for i in range(s)])
    return out


def dense_orbit_centralizer_check(f, n: int, q: int, params: dict | None = None, inst=None) -> dict:
    """C_U(x) = U_{w_J} and (T^w)^o <= C_T(x) <= T^w for x = g rep g^{-1} over F_q."""
    from .bruhat import verify_cell_claim
    field = GF(q)
    params = dict(params or {})
    inst = inst or f.instances(f.fixed_rank or n)[0]
    out = {"family_id": f.family_id, "n": n, "q": q, "checks": [], "notes": ["oracle evidence over F_q"],
           "status": "pass"}
    cell = verify_cell_claim(f, n, params, field, inst)
    if cell.status == "skipped":
        out["status"] = "skipped"
        out["notes"] += cell.notes
        return out
    lam = next((int(s.split("= ")[1].split()[0]) for s in cell.notes if "used lambda" in s), None)
    if lam is not None:
        params["lambda"] = lam
    x0 = representative(f, n, params, field, inst)
    tag = x0.tag
    g = conjugator(f, n, field, inst)
    x = g * x0 * g.inverse()
    rs = tag.rs
    J = f.J(inst)
    npos = len(tag.positive_roots())
    if q ** npos > caps()["max_u"]:
        out["status"] = "skipped"
        out["notes"].append(f"|U(F_q)| = {q}^{npos} exceeds the cap")
        return out
    size, xk = tag.size, x.packed()
    cu = {u for u in _unipotent_keys(tag, tag.positive_roots())
          if kernels.matmul(u, xk, size, q) == kernels.matmul(xk, u, size, q)}
    wJ = longest_in_subset(rs, J)
    uj_roots = [r for r in tag.positive_roots() if not rs.is_positive(_apply_w(rs, wJ, r))]
    uj = _unipotent_keys(tag, uj_roots)
    ell = wJ.length()

    def add(name, expected, computed):
        ok = expected == computed
        out["checks"].append({"name": name, "expected": expected, "computed": computed, "pass": ok})
        if not ok:
            out["status"] = "fail"

    add("C_U(x) order", q ** ell, len(cu))
    add("C_U(x) = U_wJ", True, cu == uj)

    w, _ = w_of_class(rs, J)
    wm = _weyl_matrix(tag, w.reduced_word())
    sigma = _position_perm(wm)
    T = _torus_elements(tag)
    tw = [t for t in T if wm * t == t * wm]
    ct = [t for t in T if t * x == x * t]
    basis = _fixed_torus_identity_component(tag, sigma)
    gen = field.generator()
    tw0 = {Mat.diag(tag, [gen ** (sum(k * b[i] for k, b in zip(ks, basis)) % (q - 1)) for i in range(tag.size)]).packed()
           for ks in iproduct(range(q - 1), repeat=len(basis))}
    ct_keys = {t.packed() for t in ct}
    tw_keys = {t.packed() for t in tw}
    add("(T^w)o <= C_T(x)", True, tw0 <= ct_keys)
    add("C_T(x) <= T^w", True, ct_keys <= tw_keys)
    out["notes"].append(f"|(T^w)o|={len(tw0)} |C_T(x)|={len(ct_keys)} |T^w|={len(tw_keys)} l(w_J)={ell}")
    return out


def _apply_w(rs, w, ambient_root):
    return rs.ambient(w.apply(rs.coeffs_of(ambient_root)))


def _torus_elements(tag: GroupTag) -> list[Mat]:
    f = tag.field
    units = f.units()
    s = tag.size
    out = []
    if tag.kind == "SL":
        for ts in iproduct(units, repeat=s - 1):
            prod = f.one
            for t in ts:
                prod = prod * t
            out.append(Mat.diag(tag, list(ts) + [1 / prod]))
        return out
    for ts in iproduct(units, repeat=tag.n):
        out.append(Mat.diag(tag, list(ts) + [1 / t for t in reversed(ts)]))
    return out
