import pytest
from hypothesis import given, strategies as st

from sphclass.pseudolevi import (canonical, find_pseudolevi_of_type, format_components, recognize_connected,
                                 reduced_center, subsystem)
from sphclass.rootsystem import build


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 5), ("B", 3), ("C", 3), ("B", 5), ("C", 5), ("D", 4),
                                 ("D", 7), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])
def test_recognize_full_cartan(t, n):
    rs = build(t, n)
    want = canonical([(t, n)])
    assert (recognize_connected(rs.cartan),) == want or canonical([recognize_connected(rs.cartan)]) == want


def test_full_subsystem_is_the_whole_group():
    for t, n in [("C", 4), ("E", 7), ("G", 2)]:
        rs = build(t, n)
        s = subsystem(rs, range(1, n + 1))
        assert s.components == canonical([(t, n)]) and s.torus_rank == 0
        assert s.dim == n + len(rs.roots)


def test_short_components_marked():
    rs = build("G", 2)
    assert subsystem(rs, (0, 1)).components == (("A", 1), ("A~", 1))
    assert format_components(subsystem(rs, (0, 1)).components) == "A1A~1"


def test_levi_torus_rank():
    rs = build("E", 7)
    s = subsystem(rs, (2, 3, 4, 5, 6, 1))
    assert s.label == "E6T1"


def _extended_deletion(n, d):
    return [j for j in range(n + 1) if j != d]


@pytest.mark.parametrize("n", range(2, 9))
def test_c_times_c_trivial_in_char_2(n):
    rs = build("C", n)
    for ell in range(1, n // 2 + 1):
        J = _extended_deletion(n, ell)
        assert subsystem(rs, J).components == canonical([("C", ell), ("C", n - ell)])
        assert reduced_center(rs, J, 2)[1] == 1


@pytest.mark.parametrize("n", range(4, 9))
def test_d_times_d_trivial_in_char_2(n):
    rs = build("D", n)
    for ell in range(2, n // 2 + 1):
        J = _extended_deletion(n, ell)
        assert subsystem(rs, J).components == canonical([("D", ell), ("D", n - ell)])
        assert reduced_center(rs, J, 2)[1] == 1


@pytest.mark.parametrize("t,n,comps,p,order", [
    ("E", 8, [("E", 7), ("A", 1)], 2, 1),
    ("E", 8, [("D", 8)], 2, 1),
    ("F", 4, [("C", 3), ("A", 1)], 2, 1),
    ("F", 4, [("B", 4)], 2, 1),
    ("G", 2, [("A", 1), ("A~", 1)], 2, 1),
    ("G", 2, [("A", 2)], 3, 1),
    ("E", 6, [("A", 1), ("A", 5)], 2, 3),
    # away from the bad prime the center survives
    ("G", 2, [("A", 2)], 2, 3),
    ("E", 8, [("D", 8)], 3, 2),
])
def test_reduced_center_orders(t, n, comps, p, order):
    rs = build(t, n)
    hits = find_pseudolevi_of_type(rs, comps, torus_rank=0)
    assert hits
    assert {reduced_center(rs, J, p)[1] for J in hits} == {order}


@given(st.sampled_from([("A", 4), ("C", 4), ("D", 5), ("F", 4), ("G", 2), ("E", 6)]), st.data())
def test_subsystem_closed_under_negation_and_dimension(tn, data):
    rs = build(*tn)
    J = data.draw(st.sets(st.integers(min_value=0, max_value=rs.rank), max_size=rs.rank))
    s = subsystem(rs, J)
    roots = set(s.roots)
    assert all(rs.neg(c) in roots for c in roots)
    # proper subsets of the extended set have full rank semisimple part or a central torus
    assert s.torus_rank == rs.rank - sum(r for _, r in s.components)
    assert len(s.base) == sum(r for _, r in s.components)
