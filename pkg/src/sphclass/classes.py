"""Catalog of spherical semisimple (and mixed) class families, and the driver
that checks each family's dimension three ways.

Every family row records: the ambient type, the characteristics it is stated
for, a symbolic torus representative, the subset J with w_O = w_0 w_J, the
printed dimension, the printed centralizer type, the root list whose
reflections give w_O, and (where one exists) the conjugator recipe.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Callable, Sequence

from . import torus as tr
from .pseudolevi import (canonical, closed_subsystem_from_roots,
                         format_components, reduced_center, subsystem)
from .rootsystem import RootSystem, build, dot, paper_beta_roots
from .weyl import product_of_reflections, rank_one_minus, w_of_class

ANY = None  # characteristic constraint meaning "every characteristic"


# -- report types ------------------------------------------------------------

@dataclass
class Check:
    name: str
    expected: object
    computed: object
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": _jsonable(self.expected),
                "computed": _jsonable(self.computed), "pass": bool(self.passed)}


def _jsonable(x):
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return str(x)


@dataclass
class VerificationReport:
    family_id: str
    group: str
    n: int
    p: int
    field: str = ""
    checks: list[Check] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)
    status: str = "pass"  # pass | fail | skipped | conditional

    def add(self, name, expected, computed, passed=None) -> bool:
        ok = (expected == computed) if passed is None else bool(passed)
        self.checks.append(Check(name, expected, computed, ok))
        if not ok and self.status == "pass":
            self.status = "fail"
        return ok

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "skipped") and all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "family_id": self.family_id, "group": self.group, "n": self.n, "p": self.p,
            "field": self.field or ("Q" if self.p == 0 else f"F{self.p}"),
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }


# -- family description -------------------------------------------------------

@dataclass(frozen=True)
class Instance:
    """A concrete member of a family: the rank and any sub-parameter (k, variant)."""
    n: int
    sub: tuple = ()

    def get(self, key, default=None):
        return dict(self.sub).get(key, default)


@dataclass(frozen=True)
class ClassFamily:
    family_id: str
    type_label: str
    table: str
    rep_text: str
    chars: tuple | None
    dim_text: str
    centralizer_text: str
    fixed_rank: int | None = None
    min_rank: int = 1
    parity: str | None = None  # "even" / "odd"
    J: Callable[[Instance], tuple] | None = None
    dim: Callable[[Instance], int] | None = None
    centralizer: Callable[[Instance], tuple] | None = None  # (components, torus rank)
    torus_rep: Callable[[RootSystem, Instance, int], "tr.TorusElem"] | None = None
    w_roots: Callable[[RootSystem, Instance], list] | None = None
    conj_n: Callable[[RootSystem, Instance], list] | None = None
    conj_x: Callable[[RootSystem, Instance], list] | None = None
    y_square: Callable[[RootSystem, Instance], tuple] | None = None  # (lhs, rhs) torus elements
    subparams: Callable[[int], list[tuple]] | None = None
    matrix_kind: str | None = None
    matrix_diag: Callable[[Instance, dict], list] | None = None  # block-convention diagonal
    mixed: bool = False
    none_row: bool = False
    none_candidates: tuple = ()
    notes: tuple = ()

    @property
    def classical(self) -> bool:
        return self.matrix_kind is not None

    def allows_char(self, p: int) -> bool:
        return self.chars is None or p in self.chars

    def admissible_rank(self, n: int) -> bool:
        if self.fixed_rank is not None:
            return n == self.fixed_rank
        if n < self.min_rank:
            return False
        if self.parity == "even" and n % 2:
            return False
        if self.parity == "odd" and not n % 2:
            return False
        return True

    def ranks(self, max_rank: int = 8) -> list[int]:
        if self.fixed_rank is not None:
            return [self.fixed_rank]
        return [n for n in range(self.min_rank, max_rank + 1) if self.admissible_rank(n)]

    def instances(self, n: int) -> list[Instance]:
        subs = self.subparams(n) if self.subparams else [()]
        return [Instance(n, s) for s in subs]

    def root_system(self, n: int) -> RootSystem:
        return build(self.type_label, self.fixed_rank or n)


# -- helpers for recipes -------------------------------------------------------

def _simple(rs: RootSystem, i: int):
    return rs.simple[i - 1]


def _betas(rs: RootSystem, key: str = "beta") -> list:
    return paper_beta_roots(rs.type_label, rs.rank)[key]


def _h_all(rs, roots, z) -> "tr.TorusElem":
    return tr.product(rs, [tr.h(rs, r, z) for r in roots])


def _coroot_elem(rs, vec, z) -> "tr.TorusElem":
    return tr.TorusElem(rs, {z: vec})


def lam_symbol(p: int, name: str = "lambda") -> "tr.ScalarSymbol":
    """lambda != +-1 (the condition collapses to lambda != 1 when p = 2)."""
    return tr.generic(name, 1, 2)


def _k_values(n: int) -> list[tuple]:
    return [(("k", k),) for k in range(1, (n + 1) // 2 + 1)]


def _a_J(inst: Instance) -> tuple:
    n, k = inst.n, inst.get("k")
    if k == (n + 1) // 2:
        return ()
    return tuple(range(k + 1, n - k + 1))


def _a_torus(rs, inst, p):
    n, k = inst.n, inst.get("k")
    mu = tr.generic("mu", n + 1)
    vec = [min(j * (n + 1 - k), k * (n + 1 - j)) for j in range(1, n + 1)]
    return _coroot_elem(rs, vec, mu)


def _c_J2(inst):
    return () if inst.n == 2 else tuple(range(3, inst.n + 1))


def _d_r(inst):
    return inst.n // 2


def _d_odd_torus(rs, inst, p):
    n = inst.n
    r = n // 2
    mu = tr.generic("mu", 1, 2, 4)  # lambda = mu^2 != +-1
    b = _betas(rs)[:r]
    t = tr.product(rs, [tr.h(rs, x, mu) ** 2 for x in b])
    return t * tr.h(rs, _simple(rs, n), mu) * tr.h(rs, _simple(rs, n - 1), mu).inverse()


def _diag_block(first: list, n: int) -> list:
    """Block-convention diagonal diag(D, D^{-1}) from the first n entries."""
    return list(first) + [1 / x for x in first]


# -- the catalog ----------------------------------------------------------------

def _build_catalog() -> list[ClassFamily]:
    fams: list[ClassFamily] = []
    M1 = tr.MINUS_ONE

    fams.append(ClassFamily(
        family_id="A.two_eigen", type_label="A", table="A_n semisimple",
        rep_text="diag(a I_k, b I_{n+1-k}), a != b", chars=ANY,
        dim_text="2k(n+1-k)", centralizer_text="T1 A_{k-1} A_{n-k}", min_rank=1,
        subparams=_k_values, J=_a_J,
        dim=lambda i: 2 * i.get("k") * (i.n + 1 - i.get("k")),
        centralizer=lambda i: (canonical([("A", i.get("k") - 1), ("A", i.n - i.get("k"))]), 1),
        torus_rep=_a_torus,
        w_roots=lambda rs, i: _betas(rs)[:i.get("k")],
        conj_n=lambda rs, i: _betas(rs)[:i.get("k")],
        conj_x=lambda rs, i: _betas(rs)[:i.get("k")],
        matrix_kind="SL",
        matrix_diag=lambda i, v: [v["a"]] * i.get("k") + [v["b"]] * (i.n + 1 - i.get("k")),
    ))
    fams.append(ClassFamily(
        family_id="SL2.all", type_label="A", table="SL(2)",
        rep_text="diag(f, 1/f), f != +-1", chars=ANY, dim_text="2", centralizer_text="T1",
        fixed_rank=1, J=lambda i: (), dim=lambda i: 2,
        centralizer=lambda i: ((), 1),
        torus_rep=lambda rs, i, p: tr.h(rs, _simple(rs, 1), lam_symbol(p, "f")),
        w_roots=lambda rs, i: [_simple(rs, 1)],
        conj_n=lambda rs, i: [_simple(rs, 1)],
        conj_x=lambda rs, i: [_simple(rs, 1)],
        matrix_kind="SL", matrix_diag=lambda i, v: [v["lambda"], 1 / v["lambda"]],
    ))
    fams.append(ClassFamily(
        family_id="C.c", type_label="C", table="C_n semisimple",
        rep_text="c_lambda = diag(lambda, I_{n-1}, lambda^{-1}, I_{n-1})", chars=ANY,
        dim_text="4n-2", centralizer_text="T1 C_{n-1}", min_rank=2,
        J=_c_J2, dim=lambda i: 4 * i.n - 2,
        centralizer=lambda i: (canonical([("C", i.n - 1)]), 1),
        torus_rep=lambda rs, i, p: tr.h(rs, _betas(rs)[0], lam_symbol(p)),
        w_roots=lambda rs, i: _betas(rs)[:2],
        conj_n=lambda rs, i: _betas(rs)[:2],
        conj_x=lambda rs, i: [_betas(rs, "gamma")[0], _betas(rs)[0]],
        matrix_kind="Sp",
        matrix_diag=lambda i, v: _diag_block([v["lambda"]] + [1] * (i.n - 1), i.n),
        notes=("J_2 is empty for n = 2 and {3..n} otherwise",),
    ))
    fams.append(ClassFamily(
        family_id="C.a", type_label="C", table="C_n semisimple",
        rep_text="a_lambda = diag(lambda I_n, lambda^{-1} I_n)", chars=ANY,
        dim_text="n^2+n", centralizer_text="T1 A~_{n-1}", min_rank=2,
        J=lambda i: (), dim=lambda i: i.n * i.n + i.n,
        centralizer=lambda i: (canonical([("A~", i.n - 1)]), 1),
        torus_rep=lambda rs, i, p: _h_all(rs, _betas(rs), lam_symbol(p)),
        w_roots=lambda rs, i: _betas(rs),
        conj_n=lambda rs, i: _betas(rs), conj_x=lambda rs, i: _betas(rs),
        matrix_kind="Sp",
        matrix_diag=lambda i, v: _diag_block([v["lambda"]] * i.n, i.n),
    ))
    for parity in ("even", "odd"):
        tag = "Deven" if parity == "even" else "Dodd"
        minr = 4 if parity == "even" else 5
        fams.append(ClassFamily(
            family_id=f"{tag}.c", type_label="D", table=f"D_n semisimple ({parity} n)",
            rep_text="c_lambda = h_beta1(lambda) h_delta1(lambda)", chars=ANY,
            dim_text="4(n-1)", centralizer_text="T1 D_{n-1}", min_rank=minr, parity=parity,
            J=lambda i: tuple(range(3, i.n + 1)), dim=lambda i: 4 * (i.n - 1),
            centralizer=lambda i: (canonical([("D", i.n - 1)]), 1),
            torus_rep=lambda rs, i, p: (tr.h(rs, _betas(rs)[0], lam_symbol(p))
                                        * tr.h(rs, _betas(rs, "delta")[0], lam_symbol(p))),
            w_roots=lambda rs, i: [_betas(rs)[0], _betas(rs, "delta")[0]],
            conj_n=lambda rs, i: [_betas(rs)[0], _betas(rs, "delta")[0]],
            conj_x=lambda rs, i: [_betas(rs)[0], _betas(rs, "delta")[0]],
            matrix_kind="SO",
            matrix_diag=lambda i, v: _diag_block([v["lambda"] ** 2] + [1] * (i.n - 1), i.n),
        ))
    fams.append(ClassFamily(
        family_id="Deven.a", type_label="D", table="D_n semisimple (even n)",
        rep_text="a_lambda = h_beta1(lambda) ... h_beta_r(lambda)", chars=ANY,
        dim_text="n^2-n", centralizer_text="T1 A_{n-1}", min_rank=4, parity="even",
        J=lambda i: tuple(range(1, 2 * _d_r(i), 2)), dim=lambda i: i.n * i.n - i.n,
        centralizer=lambda i: (canonical([("A", i.n - 1)]), 1),
        torus_rep=lambda rs, i, p: _h_all(rs, _betas(rs)[:_d_r(i)], lam_symbol(p)),
        w_roots=lambda rs, i: _betas(rs)[:_d_r(i)],
        conj_n=lambda rs, i: _betas(rs)[:_d_r(i)], conj_x=lambda rs, i: _betas(rs)[:_d_r(i)],
        matrix_kind="SO", matrix_diag=lambda i, v: _diag_block([v["lambda"]] * i.n, i.n),
    ))
    fams.append(ClassFamily(
        family_id="Deven.a_prime", type_label="D", table="D_n semisimple (even n)",
        rep_text="a'_lambda = h_beta1(lambda) ... h_beta_{r-1}(lambda) h_alpha_{n-1}(lambda)", chars=ANY,
        dim_text="n^2-n", centralizer_text="(T1 A_{n-1})'", min_rank=4, parity="even",
        J=lambda i: tuple(range(1, i.n - 2, 2)) + (i.n,), dim=lambda i: i.n * i.n - i.n,
        centralizer=lambda i: (canonical([("A", i.n - 1)]), 1),
        torus_rep=lambda rs, i, p: (_h_all(rs, _betas(rs)[:_d_r(i) - 1], lam_symbol(p))
                                    * tr.h(rs, _simple(rs, i.n - 1), lam_symbol(p))),
        w_roots=lambda rs, i: _betas(rs)[:_d_r(i) - 1] + [_simple(rs, i.n - 1)],
        conj_n=lambda rs, i: _betas(rs)[:_d_r(i) - 1] + [_simple(rs, i.n - 1)],
        conj_x=lambda rs, i: _betas(rs)[:_d_r(i) - 1] + [_simple(rs, i.n - 1)],
        matrix_kind="SO",
        matrix_diag=lambda i, v: ([v["lambda"]] * (i.n - 1) + [1 / v["lambda"]]
                                  + [1 / v["lambda"]] * (i.n - 1) + [v["lambda"]]),
        notes=("conjugator obtained from the a_lambda one by the graph automorphism swapping n-1 and n",),
    ))
    fams.append(ClassFamily(
        family_id="Dodd.a", type_label="D", table="D_n semisimple (odd n)",
        rep_text="a_lambda with lambda = mu^2: h_beta1(mu^2)...h_beta_r(mu^2) h_alpha_n(mu) h_alpha_{n-1}(mu^{-1})",
        chars=ANY, dim_text="n^2-n", centralizer_text="T1 A_{n-1}", min_rank=5, parity="odd",
        J=lambda i: tuple(range(1, 2 * _d_r(i), 2)), dim=lambda i: i.n * i.n - i.n,
        centralizer=lambda i: (canonical([("A", i.n - 1)]), 1),
        torus_rep=_d_odd_torus,
        w_roots=lambda rs, i: _betas(rs)[:_d_r(i)],
        conj_n=lambda rs, i: _betas(rs)[:_d_r(i)], conj_x=lambda rs, i: _betas(rs)[:_d_r(i)],
        matrix_kind="SO", matrix_diag=lambda i, v: _diag_block([v["lambda"]] * i.n, i.n),
        notes=("the product of h_beta_i(lambda) alone is diag(lambda I_{n-1}, 1, ...) for odd n; "
               "the torus word uses a square root mu of lambda",),
    ))

    # E6
    hz6 = (4, 3, 5, 6, 4, 2)
    for p, excl in ((2, (3,)), (3, (1,))):
        fams.append(ClassFamily(
            family_id=f"E6.p{p}.hz", type_label="E", fixed_rank=6, table=f"E6 p={p}",
            rep_text="h(z) = h_a1(z^4) h_a2(z^3) h_a3(z^5) h_a4(z^6) h_a5(z^4) h_a6(z^2)"
                     + (", z^3 != 1" if p == 2 else ", z != 1"),
            chars=(p,), dim_text="32", centralizer_text="D5 T1",
            J=lambda i: (3, 4, 5), dim=lambda i: 32,
            centralizer=lambda i: (canonical([("D", 5)]), 1),
            torus_rep=(lambda excl: lambda rs, i, p: _coroot_elem(rs, hz6, tr.generic("z", *excl)))(excl),
            w_roots=lambda rs, i: _betas(rs)[:2],
            conj_n=lambda rs, i: _betas(rs)[:2], conj_x=lambda rs, i: _betas(rs)[:2],
        ))
    fams.append(ClassFamily(
        family_id="E6.p3.inv", type_label="E", fixed_rank=6, table="E6 p=3",
        rep_text="h_a1(-1) h_a4(-1) h_a6(-1)", chars=(3,), dim_text="40", centralizer_text="A1 A5",
        J=lambda i: (), dim=lambda i: 40, centralizer=lambda i: (canonical([("A", 1), ("A", 5)]), 0),
        torus_rep=lambda rs, i, p: tr.product(rs, [tr.h_simple(rs, j, M1) for j in (1, 4, 6)]),
        w_roots=lambda rs, i: _betas(rs),
        y_square=lambda rs, i: (_h_all(rs, _betas(rs), M1), tr.TorusElem.identity(rs)),
    ))

    # E7
    hz7 = (2, 3, 4, 6, 5, 4, 3)

    def tau(rs):
        return tr.product(rs, [tr.h_simple(rs, j, M1) for j in (2, 5, 7)])

    for p, excl in ((2, (1,)), (3, (1, 2))):
        fams.append(ClassFamily(
            family_id=f"E7.p{p}.hz", type_label="E", fixed_rank=7, table=f"E7 p={p}",
            rep_text="h(z) = h_a1(z^2) h_a2(z^3) h_a3(z^4) h_a4(z^6) h_a5(z^5) h_a6(z^4) h_a7(z^3)"
                     + (", z != 1" if p == 2 else ", z != +-1"),
            chars=(p,), dim_text="54", centralizer_text="E6 T1",
            J=lambda i: (2, 3, 4, 5), dim=lambda i: 54,
            centralizer=lambda i: (canonical([("E", 6)]), 1),
            torus_rep=(lambda excl: lambda rs, i, p: _coroot_elem(rs, hz7, tr.generic("z", *excl)))(excl),
            w_roots=lambda rs, i: _betas(rs)[:2] + [_simple(rs, 7)],
            conj_n=lambda rs, i: _betas(rs)[:2] + [_simple(rs, 7)],
            conj_x=lambda rs, i: _betas(rs)[:2] + [_simple(rs, 7)],
        ))
    fams.append(ClassFamily(
        family_id="E7.p3.inv", type_label="E", fixed_rank=7, table="E7 p=3",
        rep_text="h_a1(-1), h_a1(-1) tau", chars=(3,), dim_text="64", centralizer_text="D6 A1",
        J=lambda i: (2, 5, 7), dim=lambda i: 64,
        centralizer=lambda i: (canonical([("D", 6), ("A", 1)]), 0),
        subparams=lambda n: [(("variant", "plain"),), (("variant", "tau"),)],
        torus_rep=lambda rs, i, p: (tr.h_simple(rs, 1, M1) * (tau(rs) if i.get("variant") == "tau"
                                                              else tr.TorusElem.identity(rs))),
        w_roots=lambda rs, i: _betas(rs)[:3] + [_simple(rs, 3)],
        y_square=lambda rs, i: (_h_all(rs, _betas(rs)[:3] + [_simple(rs, 3)], M1), tr.TorusElem.identity(rs)),
    ))
    fams.append(ClassFamily(
        family_id="E7.p3.zeta", type_label="E", fixed_rank=7, table="E7 p=3",
        rep_text="h_a2(-zeta) h_a5(zeta) h_a6(-1) h_a7(-zeta), zeta^2 = -1", chars=(3,),
        dim_text="70", centralizer_text="A7",
        J=lambda i: (), dim=lambda i: 70, centralizer=lambda i: (canonical([("A", 7)]), 0),
        torus_rep=lambda rs, i, p: _coroot_elem(rs, (0, 3, 0, 0, 1, 2, 3), tr.ZETA4),
        w_roots=lambda rs, i: _betas(rs),
        y_square=lambda rs, i: (_h_all(rs, _betas(rs), M1), tau(rs)),
        notes=("-zeta = zeta^3 and -1 = zeta^2 for a primitive 4th root of unity zeta",),
    ))

    # E8
    fams.append(ClassFamily(
        family_id="E8.p35.e7a1", type_label="E", fixed_rank=8, table="E8 p=3,5",
        rep_text="h_a8(-1)", chars=(3, 5), dim_text="112", centralizer_text="E7 A1",
        J=lambda i: (2, 3, 4, 5), dim=lambda i: 112,
        centralizer=lambda i: (canonical([("E", 7), ("A", 1)]), 0),
        torus_rep=lambda rs, i, p: tr.h_simple(rs, 8, M1),
        w_roots=lambda rs, i: _betas(rs)[:3] + [_simple(rs, 7)],
        conj_n=lambda rs, i: _betas(rs)[:3] + [_simple(rs, 7)],
        conj_x=lambda rs, i: _betas(rs)[:3] + [_simple(rs, 7)],
    ))
    fams.append(ClassFamily(
        family_id="E8.p35.d8", type_label="E", fixed_rank=8, table="E8 p=3,5",
        rep_text="h_a2(-1) h_a3(-1)", chars=(3, 5), dim_text="128", centralizer_text="D8",
        J=lambda i: (), dim=lambda i: 128, centralizer=lambda i: (canonical([("D", 8)]), 0),
        torus_rep=lambda rs, i, p: tr.h_simple(rs, 2, M1) * tr.h_simple(rs, 3, M1),
        w_roots=lambda rs, i: _betas(rs),
        y_square=lambda rs, i: (_h_all(rs, _betas(rs), M1), tr.TorusElem.identity(rs)),
    ))
    fams.append(ClassFamily(
        family_id="E8.p2.none", type_label="E", fixed_rank=8, table="E8 p=2",
        rep_text="none", chars=(2,), dim_text="-", centralizer_text="-", none_row=True,
        none_candidates=(((("E", 7), ("A", 1)), 0), ((("D", 8),), 0)),
    ))

    # F4
    fams.append(ClassFamily(
        family_id="F4.p3.b4", type_label="F", fixed_rank=4, table="F4 p=3",
        rep_text="h_a4(-1)", chars=(3,), dim_text="16", centralizer_text="B4",
        J=lambda i: (1, 2, 3), dim=lambda i: 16, centralizer=lambda i: (canonical([("B", 4)]), 0),
        torus_rep=lambda rs, i, p: tr.h_simple(rs, 4, M1),
        w_roots=lambda rs, i: _betas(rs, "gamma"),
        conj_n=lambda rs, i: _betas(rs, "gamma"), conj_x=lambda rs, i: _betas(rs, "gamma"),
    ))
    fams.append(ClassFamily(
        family_id="F4.p3.c3a1", type_label="F", fixed_rank=4, table="F4 p=3",
        rep_text="h_a1(-1)", chars=(3,), dim_text="28", centralizer_text="C3 A1",
        J=lambda i: (), dim=lambda i: 28, centralizer=lambda i: (canonical([("C", 3), ("A", 1)]), 0),
        torus_rep=lambda rs, i, p: tr.h_simple(rs, 1, M1),
        w_roots=lambda rs, i: _betas(rs),
        y_square=lambda rs, i: (_h_all(rs, _betas(rs), M1), tr.TorusElem.identity(rs)),
    ))
    fams.append(ClassFamily(
        family_id="F4.p3.mixed", type_label="F", fixed_rank=4, table="F4 p=3 mixed",
        rep_text="h_a4(-1) x_a4(1)", chars=(3,), dim_text="28", centralizer_text="-",
        J=lambda i: (), dim=lambda i: 28, mixed=True,
        torus_rep=lambda rs, i, p: tr.h_simple(rs, 4, M1),
        w_roots=lambda rs, i: _betas(rs),
    ))
    fams.append(ClassFamily(
        family_id="F4.p2.none", type_label="F", fixed_rank=4, table="F4 p=2",
        rep_text="none", chars=(2,), dim_text="-", centralizer_text="-", none_row=True,
        none_candidates=(((("C", 3), ("A", 1)), 0), ((("B", 4),), 0)),
    ))

    # G2
    fams.append(ClassFamily(
        family_id="G2.p2.a2", type_label="G", fixed_rank=2, table="G2 p=2",
        rep_text="h_a1(zeta), zeta a primitive cube root of 1", chars=(2,), dim_text="6",
        centralizer_text="A2",
        J=lambda i: (2,), dim=lambda i: 6, centralizer=lambda i: (canonical([("A", 2)]), 0),
        torus_rep=lambda rs, i, p: tr.h_simple(rs, 1, tr.ZETA3),
        w_roots=lambda rs, i: _betas(rs, "gamma"),
        conj_n=lambda rs, i: _betas(rs, "gamma"), conj_x=lambda rs, i: _betas(rs, "gamma"),
    ))
    fams.append(ClassFamily(
        family_id="G2.p3.a1a1", type_label="G", fixed_rank=2, table="G2 p=3",
        rep_text="h_a1(-1)", chars=(3,), dim_text="8", centralizer_text="A1 A~1",
        J=lambda i: (), dim=lambda i: 8, centralizer=lambda i: (canonical([("A", 1), ("A~", 1)]), 0),
        torus_rep=lambda rs, i, p: tr.h_simple(rs, 1, M1),
        w_roots=lambda rs, i: _betas(rs),
        y_square=lambda rs, i: (_h_all(rs, _betas(rs), M1), tr.TorusElem.identity(rs)),
    ))
    return fams


_CATALOG: list[ClassFamily] | None = None


def catalog() -> list[ClassFamily]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    return list(_CATALOG)


def get_family(family_id: str) -> ClassFamily:
    for f in catalog():
        if f.family_id == family_id:
            return f
    raise KeyError(family_id)


def group_name(f: ClassFamily, n: int) -> str:
    return f"{f.type_label}{f.fixed_rank or n}"


# -- verification -----------------------------------------------------------------

def _sub_label(inst: Instance) -> str:
    return ",".join(f"{k}={v}" for k, v in inst.sub)


def verify_family(f: ClassFamily, n: int, p: int, inst: Instance | None = None) -> VerificationReport:
    """Check one family instance: formula, centralizer and table dimensions."""
    n = f.fixed_rank or n
    rep = VerificationReport(f.family_id, group_name(f, n), n, p)
    if inst is None:
        insts = f.instances(n)
        if len(insts) != 1:
            raise ValueError("family has sub-parameters; pass an Instance")
        inst = insts[0]
    if inst.sub:
        rep.notes.append(_sub_label(inst))
    if not f.admissible_rank(n):
        rep.status = "skipped"
        rep.notes.append(f"rank {n} not admissible")
        return rep
    if not f.allows_char(p):
        rep.status = "skipped"
        rep.notes.append(f"characteristic {p} outside {f.chars}")
        return rep
    rs = f.root_system(n)
    if f.none_row:
        return _verify_none_row(f, rs, p, rep)

    J = f.J(inst)
    w, side = w_of_class(rs, J)
    ell, rk = w.length(), rank_one_minus(w)
    table_dim = f.dim(inst)
    rep.add("dim_formula", table_dim, ell + rk)
    rep.notes.append(f"J={list(J)} l(w)={ell} rk(1-w)={rk}")
    rep.add("theta_invariant_J", True, side["theta_invariant"])
    rep.add("w0_equals_wJ_on_J", True, side["w0_equals_wJ_on_J"])
    if f.w_roots is not None:
        wl = product_of_reflections(rs, f.w_roots(rs, inst))
        rep.add("w_from_reflections", True, wl == w)
    if f.none_row:
        return rep

    if f.mixed:
        rep.notes.append("centralizer cross-check not applicable to a mixed element")
    elif f.torus_rep is not None:
        t = f.torus_rep(rs, inst, p)
        fixed, cond = tr.centralizer_roots(t, p)
        if cond:
            rep.status = "conditional"
            rep.add("centralizer_decidable", [], [rs.root_from_coeffs(c) for c in cond[:3]], False)
        else:
            _, comps, trank = closed_subsystem_from_roots(rs, fixed)
            want_comps, want_t = f.centralizer(inst)
            rep.add("centralizer_type", format_components(want_comps, want_t),
                    format_components(comps, trank))
            rep.add("dim_centralizer", table_dim, len(rs.roots) - len(fixed))
    if f.y_square is not None:
        lhs, rhs = f.y_square(rs, inst)
        rep.add("y_square_identity", True, tr.equal(lhs, rhs, p))
    return rep


def _verify_none_row(f: ClassFamily, rs: RootSystem, p: int, rep: VerificationReport) -> VerificationReport:
    """Every candidate centralizer type has trivial reduced center in characteristic p."""
    for comps, trank in f.none_candidates:
        label = format_components(canonical(comps), trank)
        hits = [J for J in _deletions(rs) if subsystem(rs, J).components == canonical(comps)]
        orders = sorted({reduced_center(rs, J, p)[1] for J in hits})
        rep.add(f"reduced_center[{label}]", [1], orders, bool(hits) and orders == [1])
        rep.notes.append(f"{label}: J in {[list(J) for J in hits]}")
    return rep


def _deletions(rs: RootSystem) -> list[tuple]:
    full = range(rs.rank + 1)
    return [tuple(j for j in full if j != d) for d in full]


def verify_scambio_hypotheses(f: ClassFamily, n: int, p: int, inst: Instance | None = None) -> VerificationReport:
    """Hypotheses of the exchange lemma for a family's conjugator.

    The conjugator must have the shape n_b1...n_bl x_b1(1)...x_bl(1); the
    roots b_i must be pairwise orthogonal and either long or p = 2; and
    b_i(h) != 1 must follow from the symbol constraints.
    """
    n = f.fixed_rank or n
    rep = VerificationReport(f.family_id, group_name(f, n), n, p)
    inst = inst or f.instances(n)[0]
    if f.conj_n is None or f.none_row or f.mixed:
        rep.status = "skipped"
        rep.notes.append("no conjugator recipe of exchange-lemma shape")
        return rep
    rs = f.root_system(n)
    bn, bx = f.conj_n(rs, inst), f.conj_x(rs, inst)
    if [tuple(b) for b in bn] != [tuple(b) for b in bx]:
        rep.status = "skipped"
        rep.notes.append("conjugator is not of exchange-lemma shape")
        return rep
    for b in bn:
        if not rs.is_positive(b):
            rep.add("positive", True, False)
    bad = [(i + 1, j + 1) for i, j in combinations(range(len(bn)), 2) if dot(bn[i], bn[j]) != 0]
    rep.add("pairwise_orthogonal", [], bad)
    all_long = all(rs.is_long(b) for b in bn)
    if len(bn) > 1 and not all_long:
        rep.add("long_or_char2", True, p == 2)
        rep.notes.append("relies on commutation of orthogonal root subgroups in characteristic 2")
    else:
        rep.add("long_or_char2", True, True)
    t = f.torus_rep(rs, inst, p)
    vals = []
    for b in bn:
        mono = tr.eval_root(t, b)
        vals.append(tr.monomial_is_one(mono, p))
    rep.add("beta_values_nontrivial", [False] * len(bn), vals)
    return rep


def table_instances(max_rank: int = 8, chars: Sequence[int] = (0, 2, 3, 5),
                    type_filter: str | None = None, only_char: int | None = None):
    """Yield (family, n, p, instance) over the admissible range, in catalog order."""
    for f in catalog():
        if type_filter and not _type_matches(f, type_filter):
            continue
        for n in f.ranks(max_rank):
            for p in chars:
                if only_char is not None and p != only_char:
                    continue
                if not f.allows_char(p):
                    continue
                for inst in f.instances(n):
                    yield f, n, p, inst


def _type_matches(f: ClassFamily, flt: str) -> bool:
    flt = flt.upper()
    if flt == "SL2":
        return f.family_id.startswith("SL2")
    if len(flt) == 1:
        return f.type_label == flt
    return f.type_label == flt[0] and f.fixed_rank == int(flt[1:])
