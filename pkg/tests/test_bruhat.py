import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sphclass.bruhat import (CellError, ambient_length, bruhat_cell, in_opposite_borel, perm_matrix,
                             perm_to_weyl, rank_array, ranks_of_perm, verify_cell_claim)
from sphclass.classes import get_family
from sphclass.matrixgroups import GroupTag, Mat, conjugator, gen_h, gen_n, gen_x, representative
from sphclass.rootsystem import paper_beta_roots
from sphclass.scalars import GF, QQ
from sphclass.weyl import WeylElem, all_elements, product_of_reflections

ROUND_TRIP_GROUPS = [("SL", 1), ("SL", 2), ("SL", 3), ("Sp", 2), ("Sp", 3)]


def weyl_rep(tag, w):
    m = Mat.identity(tag)
    for i in w.reduced_word():
        m = m * gen_n(tag, tag.simple_roots()[i])
    return m


def random_borel(tag, rng):
    b = Mat.identity(tag)
    for a in tag.simple_roots():
        b = b * gen_h(tag, a, rng.choice([2, 3, -1]))
    for _ in range(4):
        b = b * gen_x(tag, rng.choice(tag.positive_roots()), rng.randint(-4, 4))
    return b


@pytest.mark.parametrize("kind,n", ROUND_TRIP_GROUPS)
def test_round_trip_random_borel_sandwich(kind, n):
    tag = GroupTag(kind, n, QQ)
    rng = random.Random(1000 * n + len(kind))
    elems = all_elements(tag.rs)
    samples = max(100, len(elems))
    for k in range(samples):
        w = elems[k % len(elems)]
        m = random_borel(tag, rng) * weyl_rep(tag, w) * random_borel(tag, rng)
        cell = bruhat_cell(m)
        assert cell.weyl == w
        assert ambient_length(tag, cell.ambient_perm) == w.length()


def test_round_trip_so8_sample():
    tag = GroupTag("SO", 4, GF(5))
    rng = random.Random(7)
    elems = all_elements(tag.rs)
    for w in rng.sample(elems, 40):
        m = random_borel(tag, rng) * weyl_rep(tag, w) * random_borel(tag, rng)
        assert bruhat_cell(m).weyl == w


def test_rank_array_of_permutation():
    tag = GroupTag("GL", 4)
    for sigma in [(1, 2, 3, 4), (4, 3, 2, 1), (2, 4, 1, 3)]:
        assert rank_array(perm_matrix(tag, sigma)) == ranks_of_perm(sigma)
        assert bruhat_cell(perm_matrix(tag, sigma)).ambient_perm == sigma


def test_singular_matrix_rejected():
    tag = GroupTag("GL", 2)
    with pytest.raises(CellError):
        bruhat_cell(Mat([[1, 2], [2, 4]], tag))


def test_opposite_borel_examples():
    tag = GroupTag("SL", 1)
    assert in_opposite_borel(Mat.diag(tag, [2, Fraction(1, 2)]))
    a = tag.simple_roots()[0]
    assert not in_opposite_borel(gen_x(tag, a, 1))
    f = get_family("SL2.all")
    x = representative(f, 1, {"lambda": 3})
    g = conjugator(f, 1)
    y = g * x * g.inverse()
    assert in_opposite_borel(y)
    assert bruhat_cell(y).weyl.length() == 1


def test_cell_example_a3_k2():
    f = get_family("A.two_eigen")
    inst = [i for i in f.instances(3) if dict(i.sub)["k"] == 2][0]
    rep = verify_cell_claim(f, 3, {"mu": 2}, QQ, inst)
    assert rep.passed, rep.to_dict()
    rs = GroupTag("SL", 3).rs
    b = paper_beta_roots("A", 3)["beta"]
    cell = next(c for c in rep.checks if c.name == "cell_is_product_of_reflections")
    assert cell.computed == product_of_reflections(rs, b[:2]).reduced_word()


def test_cell_example_c3():
    rep = verify_cell_claim(get_family("C.c"), 3, {"lambda": 3}, QQ)
    assert rep.passed, rep.to_dict()
    rs = GroupTag("Sp", 3).rs
    b = paper_beta_roots("C", 3)["beta"]
    cell = next(c for c in rep.checks if c.name == "cell_is_product_of_reflections")
    assert cell.computed == product_of_reflections(rs, b[:2]).reduced_word()


def test_cell_example_d4_f5():
    rep = verify_cell_claim(get_family("Deven.a"), 4, {"lambda": 2}, GF(5))
    assert rep.passed, rep.to_dict()
    rs = GroupTag("SO", 4).rs
    b = paper_beta_roots("D", 4)["beta"]
    cell = next(c for c in rep.checks if c.name == "cell_is_product_of_reflections")
    assert cell.computed == product_of_reflections(rs, b).reduced_word()


def test_exceptional_family_not_applicable():
    rep = verify_cell_claim(get_family("F4.p3.b4"), 4)
    assert rep.status == "skipped"
    assert rep.notes[-1] == "not applicable: no classical realization"


def test_lambda_fallback_and_skip():
    rep = verify_cell_claim(get_family("C.a"), 3, {"lambda": 4}, GF(5))
    assert rep.passed and any("used lambda" in n for n in rep.notes)
    assert verify_cell_claim(get_family("C.a"), 3, {"lambda": 2}, GF(3)).status == "skipped"


@given(st.sampled_from([("SL", 3), ("Sp", 2), ("Sp", 3)]), st.data())
def test_permutation_length_matches_weyl_length(kn, data):
    tag = GroupTag(*kn)
    word = data.draw(st.lists(st.integers(min_value=0, max_value=tag.rs.rank - 1), max_size=10))
    w = WeylElem.identity(tag.rs)
    for i in word:
        w = w * WeylElem.simple_reflection(tag.rs, i)
    cell = bruhat_cell(weyl_rep(tag, w))
    assert perm_to_weyl(tag, cell.ambient_perm) == w
    if tag.kind == "SL":
        assert cell.inversions() == w.length()
    assert ambient_length(tag, cell.ambient_perm) == w.length()
