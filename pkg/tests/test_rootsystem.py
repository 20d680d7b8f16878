import pytest
from hypothesis import given, strategies as st

from sphclass.rootsystem import RootSystemError, build, extended_simple_set, paper_beta_roots, pairing

TYPES = [("A", 1), ("A", 4), ("B", 3), ("C", 2), ("C", 4), ("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8),
         ("F", 4), ("G", 2)]


def expected_root_count(t, n):
    return {"A": n * (n + 1), "B": 2 * n * n, "C": 2 * n * n, "D": 2 * n * (n - 1)}.get(
        t, {("E", 6): 72, ("E", 7): 126, ("E", 8): 240, ("F", 4): 48, ("G", 2): 12}.get((t, n)))


@pytest.mark.parametrize("t,n", TYPES)
def test_root_counts(t, n):
    rs = build(t, n)
    assert len(rs.roots) == expected_root_count(t, n)
    assert len(rs.positive_roots) * 2 == len(rs.roots)


@pytest.mark.parametrize("t,n,marks", [
    ("E", 6, [1, 2, 2, 3, 2, 1]), ("E", 7, [2, 2, 3, 4, 3, 2, 1]), ("E", 8, [2, 3, 4, 6, 5, 4, 3, 2]),
    ("F", 4, [2, 3, 4, 2]), ("G", 2, [3, 2]), ("A", 4, [1, 1, 1, 1]), ("C", 3, [2, 2, 1]),
    ("D", 5, [1, 2, 2, 1, 1]), ("B", 3, [1, 2, 2]),
])
def test_highest_root_marks(t, n, marks):
    assert build(t, n).marks() == marks


def test_cartan_orientation():
    # cartan[i][j] = 2(a_i, a_j)/(a_j, a_j); in C2 the long root is a_2
    assert build("C", 2).cartan == ((2, -1), (-2, 2))
    assert build("B", 2).cartan == ((2, -2), (-1, 2))
    assert build("G", 2).cartan == ((2, -1), (-3, 2))


def test_invalid_types():
    for t, n in [("D", 3), ("C", 1), ("E", 5), ("F", 3), ("X", 2)]:
        with pytest.raises(RootSystemError):
            build(t, n)


def test_extended_simple_set_sums_to_zero():
    for t, n in TYPES:
        rs = build(t, n)
        ext = rs.extended_coeffs()
        marks = [1] + rs.marks()
        total = [sum(m * c[k] for m, c in zip(marks, ext)) for k in range(n)]
        assert total == [0] * n
        assert len(extended_simple_set(rs)) == n + 1


def test_beta_lists_are_orthogonal_roots():
    for t, n in [("A", 5), ("C", 4), ("D", 6), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]:
        rs = build(t, n)
        betas = paper_beta_roots(t, n)["beta"]
        assert all(rs.is_root(b) for b in betas)
        if t in "ACDE":
            for i, a in enumerate(betas):
                for b in betas[i + 1:]:
                    assert pairing(a, b) == 0


def test_e7_gamma_is_root():
    rs = build("E", 7)
    b1 = paper_beta_roots("E", 7)["beta"][0]
    gamma = tuple(x - y for x, y in zip(b1, rs.simple[0]))
    assert rs.is_root(gamma)


@given(st.sampled_from(TYPES), st.data())
def test_pairing_integral_and_reflection_closed(tn, data):
    rs = build(*tn)
    a = data.draw(st.sampled_from(rs.roots))
    b = data.draw(st.sampled_from(rs.roots))
    k = pairing(b, a)
    assert k in (-3, -2, -1, 0, 1, 2, 3)
    assert rs.is_root(tuple(x - k * y for x, y in zip(b, a)))
    assert rs.coeff_pairing(rs.coeffs_of(b), rs.coeffs_of(a)) == k


@given(st.sampled_from(TYPES), st.data())
def test_coefficients_round_trip(tn, data):
    rs = build(*tn)
    r = data.draw(st.sampled_from(rs.roots))
    c = rs.coeffs_of(r)
    assert rs.root_from_coeffs(c) == r
    assert all(x >= 0 for x in c) or all(x <= 0 for x in c)
