"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they are also repeated in the terminal summary.
"""

import pytest

from sphclass import torus as tr
from sphclass.bruhat import verify_cell_claim
from sphclass.classes import catalog, table_instances, verify_family
from sphclass.orbits import appendix_gl3_check, appendix_sp4_check, growth_probe
from sphclass.pseudolevi import canonical, find_pseudolevi_of_type, reduced_center, subsystem
from sphclass.rootsystem import RootSystemError, build, paper_beta_roots, sub
from sphclass.scalars import parse_field
from sphclass.weyl import involutions, longest_element, rank_one_minus

import steinberg

RESULTS: list[str] = []

PRINTED = {
    "SL2.all": lambda n, s: 2,
    "A.two_eigen": lambda n, s: 2 * dict(s)["k"] * (n + 1 - dict(s)["k"]),
    "C.c": lambda n, s: 4 * n - 2, "C.a": lambda n, s: n * n + n,
    "Deven.c": lambda n, s: 4 * (n - 1), "Dodd.c": lambda n, s: 4 * (n - 1),
    "Deven.a": lambda n, s: n * n - n, "Deven.a_prime": lambda n, s: n * n - n,
    "Dodd.a": lambda n, s: n * n - n,
    "E6.p2.hz": lambda n, s: 32, "E6.p3.hz": lambda n, s: 32, "E6.p3.inv": lambda n, s: 40,
    "E7.p2.hz": lambda n, s: 54, "E7.p3.hz": lambda n, s: 54, "E7.p3.inv": lambda n, s: 64,
    "E7.p3.zeta": lambda n, s: 70,
    "E8.p35.e7a1": lambda n, s: 112, "E8.p35.d8": lambda n, s: 128,
    "F4.p3.b4": lambda n, s: 16, "F4.p3.c3a1": lambda n, s: 28, "F4.p3.mixed": lambda n, s: 28,
    "G2.p2.a2": lambda n, s: 6, "G2.p3.a1a1": lambda n, s: 8,
}


def verdict(num: int, title: str, failures: list, detail: str = ""):
    line = f"{'PASS' if not failures else 'FAIL'} criterion {num}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f"; {len(failures)} failing, first: {failures[0]}"
    RESULTS.append(line)
    print("\n" + line)
    assert not failures, line


def test_criterion_1_table_dimensions():
    bad, seen, none_rows = [], 0, 0
    for f, n, p, inst in table_instances(8, (0, 2, 3, 5)):
        rep = verify_family(f, n, p, inst)
        if f.none_row:
            none_rows += 1
            if not rep.passed:
                bad.append((f.family_id, n, p, "none row"))
            continue
        seen += 1
        dim = {c.name: c for c in rep.checks}["dim_formula"]
        if dim.computed != PRINTED[f.family_id](n, inst.sub) or dim.expected != dim.computed:
            bad.append((f.family_id, n, p, inst.sub, dim.computed))
    verdict(1, "l(w0 wJ) + rk(1 - w0 wJ) equals the printed dimension", bad,
            f"{seen} instances, {none_rows} none rows")


def test_criterion_2_centralizer_cross_check():
    bad, seen = [], 0
    for f, n, p, inst in table_instances(8, (0, 2, 3, 5)):
        if f.none_row or f.mixed or f.torus_rep is None:
            continue
        rep = verify_family(f, n, p, inst)
        checks = {c.name: c for c in rep.checks}
        for name in ("centralizer_type", "dim_centralizer"):
            if name not in checks or not checks[name].passed:
                bad.append((f.family_id, n, p, inst.sub, name))
        seen += 1
    verdict(2, "|Phi| - |Phi_C| and centralizer type match", bad, f"{seen} semisimple instances")


def test_criterion_3_cell_membership():
    bad, ran, skipped = [], 0, 0
    for f in catalog():
        if not f.classical:
            continue
        for n in f.ranks(6):
            if n < 2:
                continue
            for fname in ("Q", "F2", "F3", "F5"):
                field = parse_field(fname)
                if not f.allows_char(field.char):
                    continue
                lams = (2, 3) if field.char == 0 else (2,)
                for inst in f.instances(n):
                    for lam in lams:
                        rep = verify_cell_claim(f, n, {"lambda": lam, "mu": 2}, field, inst)
                        if rep.status == "skipped":
                            skipped += 1
                            continue
                        ran += 1
                        names = {c.name for c in rep.checks}
                        if not rep.passed or not {"cell_is_w0_wJ", "in_opposite_borel"} <= names:
                            bad.append((f.family_id, n, fname, inst.sub, lam))
    verdict(3, "g x g^-1 in B w0 wJ B and lower triangular", bad,
            f"{ran} verified, {skipped} without an admissible parameter")
    assert ran > 50


def _hprod(rs, roots):
    return tr.product(rs, [tr.h(rs, r, tr.MINUS_ONE) for r in roots])


def test_criterion_4_torus_identities():
    bad = []
    e6 = build("E", 6)
    for p in (0, 3, 5):
        if not tr.is_identity(_hprod(e6, paper_beta_roots("E", 6)["beta"]), p):
            bad.append(f"E6 p={p}")
    e7 = build("E", 7)
    b7 = paper_beta_roots("E", 7)["beta"]
    tau = tr.product(e7, [tr.h_simple(e7, j, tr.MINUS_ONE) for j in (2, 5, 7)])
    if not tr.equal(_hprod(e7, b7), tau, 0) or tr.is_identity(tau, 0):
        bad.append("E7 product is tau")
    if not tr.is_identity(_hprod(e7, b7[:3] + [e7.simple[2]]), 0):
        bad.append("E7 partial product")
    for t, n in (("E", 8), ("F", 4)):
        if not tr.is_identity(_hprod(build(t, n), paper_beta_roots(t, n)["beta"]), 0):
            bad.append(f"{t}{n} product")
    if not e7.is_root(sub(b7[0], e7.simple[0])):
        bad.append("E7 gamma = beta1 - alpha1 is not a root")
    verdict(4, "torus identities in E6, E7, E8, F4", bad)


def _deletion(n, d):
    return [j for j in range(n + 1) if j != d]


def test_criterion_5_center_reductions():
    bad = []
    for n in range(2, 9):
        rs = build("C", n)
        for ell in range(1, n // 2 + 1):
            J = _deletion(n, ell)
            if subsystem(rs, J).components != canonical([("C", ell), ("C", n - ell)]) \
                    or reduced_center(rs, J, 2)[1] != 1:
                bad.append(f"C{ell}C{n - ell}")
    for n in range(4, 9):
        rs = build("D", n)
        for ell in range(2, n // 2 + 1):
            J = _deletion(n, ell)
            if subsystem(rs, J).components != canonical([("D", ell), ("D", n - ell)]) \
                    or reduced_center(rs, J, 2)[1] != 1:
                bad.append(f"D{ell}D{n - ell}")
    cases = [
        ("E", 8, [("E", 7), ("A", 1)], 2, 1), ("E", 8, [("D", 8)], 2, 1),
        ("F", 4, [("C", 3), ("A", 1)], 2, 1), ("F", 4, [("B", 4)], 2, 1),
        ("G", 2, [("A", 1), ("A~", 1)], 2, 1), ("G", 2, [("A", 2)], 3, 1),
        ("E", 6, [("A", 1), ("A", 5)], 2, 3),
    ]
    for t, n, comps, p, order in cases:
        rs = build(t, n)
        hits = find_pseudolevi_of_type(rs, comps, torus_rank=0)
        got = {reduced_center(rs, J, p)[1] for J in hits}
        if got != {order}:
            bad.append(f"{comps} in {t}{n}, p={p}: {sorted(got)}")
    verdict(5, "reduced center orders", bad)


def test_criterion_6_appendix_lemmas():
    bad = []
    for q in (3, 5):
        r = appendix_gl3_check(q)
        if r["distinct_b_orbits"] != q - 1 or not r["all_in_one_class"] or not r["char_poly_ok"]:
            bad.append(f"GL3 q={q}: {r['distinct_b_orbits']} orbits")
    r = appendix_sp4_check(5, 2)
    if r["distinct_b_orbits"] != 4 or not r["all_in_one_class"] or not r["char_poly_ok"] \
            or r["one_eigenspace_dims"] != [1]:
        bad.append(f"Sp4 q=5: {r['distinct_b_orbits']} orbits, eigenspace {r['one_eigenspace_dims']}")
    verdict(6, "GL(3) and Sp(4) families give q-1 distinct B-orbits", bad)


def test_criterion_7_steinberg_relations():
    bad = []
    for kind, n in steinberg.GROUPS:
        for fname in steinberg.FIELDS:
            bad += [f"{kind}{n} {fname}: {m}" for m in steinberg.check_group(kind, n, fname)]
    verdict(7, "Steinberg relations in SL(<=5), Sp(<=6), SO(8) over Q, F2, F3", bad,
            f"{len(steinberg.GROUPS) * len(steinberg.FIELDS)} group/field pairs")


def test_criterion_8_growth_probes():
    bad, counts = [], []
    for case, want in (("sl2-semisimple", "stable"), ("sl2-unipotent", "stable"), ("sl4-2eigen", "stable"),
                       ("sl4-3eigen", "increasing"), ("sp4-mixed", "increasing")):
        r = growth_probe(case, (3, 5, 7))
        seq = [row["b_orbit_count"] for row in r["rows"]]
        counts.append(f"{case} {seq}")
        if r["signature"] != want:
            bad.append(f"{case}: {seq} is {r['signature']}, expected {want}")
    verdict(8, "B-orbit growth over q in {3,5,7}", bad, "; ".join(counts))


def test_criterion_9_involution_sweep():
    bad, total = [], 0
    types = [(t, n) for t in "ABCD" for n in range(1, 5)] + [("G", 2), ("F", 4)]
    for t, n in types:
        try:
            rs = build(t, n)
        except RootSystemError:
            continue
        w0 = longest_element(rs)
        bound = w0.length() + rank_one_minus(w0)
        for w in involutions(rs):
            total += 1
            if w.length() + rank_one_minus(w) > bound:
                bad.append((t, n, w.reduced_word()))
    verdict(9, "l(w) + rk(1-w) <= l(w0) + rk(1-w0) for involutions", bad, f"{total} involutions")


@pytest.fixture(scope="module", autouse=True)
def _summary():
    yield
    print("\nacceptance summary:")
    for line in RESULTS:
        print("  " + line)
