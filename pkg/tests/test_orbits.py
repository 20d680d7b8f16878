import pytest

from sphclass.classes import get_family
from sphclass.matrixgroups import GroupTag, Mat
from sphclass.orbits import (PROBES, ResourceCapError, appendix_gl3_check, b_orbit_census, borel_order,
                             centralizer_flag_census, conjugacy_class, default_gl3_triple,
                             dense_orbit_centralizer_check, group_elements, group_order, growth_probe,
                             sl4_three_eigen, subgroup_closure)
from sphclass.scalars import GF


@pytest.mark.parametrize("kind,n,q,order", [
    ("SL", 1, 3, 24), ("SL", 1, 5, 120), ("SL", 2, 2, 168), ("SL", 2, 3, 5616), ("GL", 2, 3, 48),
    ("GL", 3, 2, 168), ("Sp", 2, 3, 51840), ("Sp", 2, 2, 720),
])
def test_group_order_formula_and_closure(kind, n, q, order):
    tag = GroupTag(kind, n, GF(q))
    assert group_order(tag) == order
    assert len(group_elements(tag)) == order


def test_so8_order_formula():
    # |Omega+(8, 2)| = 2^12 (2^4 - 1)(2^2 - 1)(2^4 - 1)(2^6 - 1)
    assert group_order(GroupTag("SO", 4, GF(2))) == 174182400


def _check_census(census, tag):
    border = borel_order(tag)
    assert sum(census.b_orbit_sizes) == census.class_size
    assert all(border % s == 0 for s in census.b_orbit_sizes)


def test_regular_semisimple_sl3():
    tag = GroupTag("SL", 2, GF(5))
    x = Mat.diag(tag, [1, 2, 3])
    c = b_orbit_census(x)
    assert c.class_size == group_order(tag) // 16  # C(x) = T(F_5)
    assert c.b_orbit_count == 24
    _check_census(c, tag)
    d = c.to_dict()
    assert d["notes"][0] == "oracle evidence over F_q"


def test_shuffled_generators_same_partition():
    tag = GroupTag("SL", 2, GF(3))
    x = Mat.diag(tag, [1, 2, 2])
    a, b = b_orbit_census(x), b_orbit_census(x, shuffle_seed=11)
    assert a.labels == b.labels


@pytest.mark.parametrize("case,q", [("sl2-semisimple", 5), ("sl2-unipotent", 3), ("sl4-2eigen", 3),
                                    ("sp4-mixed", 5)])
def test_flag_and_class_modes_agree(case, q):
    x, cg, corder = PROBES[case].build(q)
    assert len(subgroup_closure(x.tag, cg)) == corder
    direct = b_orbit_census(x)
    dual = centralizer_flag_census(x, cg, corder)
    assert direct.class_size == dual.class_size == group_order(x.tag) // corder
    assert direct.b_orbit_count == dual.b_orbit_count
    assert direct.b_orbit_sizes == dual.b_orbit_sizes
    _check_census(direct, x.tag)


def test_flag_census_rejects_non_commuting_generator():
    x, cg, corder = PROBES["sl2-semisimple"].build(5)
    from sphclass.matrixgroups import gen_x
    with pytest.raises(ValueError):
        centralizer_flag_census(x, cg + [gen_x(x.tag, x.tag.simple_roots()[0], 1)], corder)


def test_three_eigenvalue_instances():
    with pytest.raises(ValueError):
        sl4_three_eigen(3)
    a, b, c = sl4_three_eigen(5)
    assert len({a, b, c}) == 3 and a * b * c * c == 1


def test_growth_probe_reports_skips():
    r = growth_probe("sl2-semisimple", [3, 5, 7])
    assert [s["q"] for s in r["skipped"]] == [3]
    assert [row["b_orbit_count"] for row in r["rows"]] == [4, 4]
    assert r["signature"] == "stable" and r["pass"]


def test_gl3_defaults_and_degeneracies():
    assert default_gl3_triple(3) == (1, 1, 2)
    assert default_gl3_triple(5) == (1, 2, 3)
    r = appendix_gl3_check(3)
    assert r["distinct_b_orbits"] == 2 and r["notes"]


def test_caps(monkeypatch):
    monkeypatch.setenv("SPHCLASS_MAX_CLASS", "100")
    x = Mat.diag(GroupTag("SL", 2, GF(5)), [1, 2, 3])
    with pytest.raises(ResourceCapError) as err:
        conjugacy_class(x)
    assert err.value.partial == 100
    monkeypatch.setenv("SPHCLASS_MAX_Q", "3")
    with pytest.raises(ResourceCapError):
        group_elements(GroupTag("SL", 1, GF(5)))


@pytest.mark.parametrize("fid,n,q,sub,cu", [
    ("A.two_eigen", 3, 7, (("k", 1),), 7),
    ("A.two_eigen", 3, 3, (("k", 2),), 1),
    ("A.two_eigen", 2, 3, (("k", 1),), 1),
    ("A.two_eigen", 4, 3, (("k", 1),), 27),
    ("C.c", 2, 5, (), 1),
    ("C.a", 2, 5, (), 1),
    ("SL2.all", 1, 5, (), 1),
])
def test_dense_orbit_centralizers(fid, n, q, sub, cu):
    from sphclass.classes import Instance
    f = get_family(fid)
    r = dense_orbit_centralizer_check(f, n, q, {"lambda": 2}, Instance(f.fixed_rank or n, sub))
    assert r["status"] == "pass", r
    order = next(c for c in r["checks"] if c["name"] == "C_U(x) order")
    assert order["computed"] == cu


def test_dense_orbit_skips():
    from sphclass.classes import Instance
    f = get_family("A.two_eigen")
    r = dense_orbit_centralizer_check(f, 3, 3, {}, Instance(3, (("k", 1),)))
    assert r["status"] == "skipped"
    r = dense_orbit_centralizer_check(get_family("C.c"), 2, 3, {"lambda": 2})
    assert r["status"] == "skipped"
