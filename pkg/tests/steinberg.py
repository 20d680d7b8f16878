"""Steinberg relations as matrix identities (shared by unit and acceptance tests)."""

from sphclass.matrixgroups import GroupTag, Mat, gen_h, gen_n, gen_x, is_member
from sphclass.rootsystem import pairing
from sphclass.scalars import parse_field

GROUPS = [("SL", n) for n in (1, 2, 3, 4)] + [("Sp", n) for n in (2, 3)] + [("SO", 4)]
FIELDS = ["Q", "F2", "F3"]


def sample_values(field):
    """(unit xi, ring element x) pairs covering the field's small elements."""
    if field.char == 0:
        return [(field(2), field(5)), (field(-3), field(1) / 2)]
    units = field.units()
    return [(units[-1], field(1)), (units[0], field(field.char - 1))]


def neg(r):
    return tuple(-c for c in r)


def reflect(b, a):
    k = pairing(b, a)
    return tuple(x - k * y for x, y in zip(b, a))


def check_group(kind: str, n: int, field_name: str) -> list[str]:
    """All failures (empty when every relation holds)."""
    field = parse_field(field_name)
    tag = GroupTag(kind, n, field)
    one = Mat.identity(tag)
    bad = []
    roots = tag.roots
    for a in roots:
        na = gen_n(tag, a)
        if not is_member(na) or not is_member(gen_x(tag, a, 1)):
            bad.append(f"membership {a}")
        if na != gen_x(tag, a, 1) * gen_x(tag, neg(a), -1) * gen_x(tag, a, 1):
            bad.append(f"n_a definition {a}")
        if na * na != gen_h(tag, a, -1):
            bad.append(f"n_a^2 = h_a(-1) {a}")
        for xi, x in sample_values(field):
            xa = gen_x(tag, a, x)
            if gen_x(tag, a, xi) * gen_x(tag, a, x) != gen_x(tag, a, xi + x):
                bad.append(f"additive {a}")
            if gen_x(tag, a, x) * gen_x(tag, a, -x) != one:
                bad.append(f"inverse {a}")
            lhs = gen_x(tag, a, xi) * gen_x(tag, neg(a), -1 / xi) * gen_x(tag, a, xi)
            if lhs != gen_h(tag, a, xi) * na:
                bad.append(f"x x x = h n {a}")
            if na * xa * na.inverse() != gen_x(tag, neg(a), -x):
                bad.append(f"n_a x_a n_a^-1 {a}")
            if gen_h(tag, a, xi) * gen_h(tag, a, 1 / xi) != one:
                bad.append(f"h multiplicative {a}")
            h = gen_h(tag, a, xi)
            hinv = h.inverse()
            for b in roots:
                xb = gen_x(tag, b, x)
                if h * xb * hinv != gen_x(tag, b, xi ** pairing(b, a) * x):
                    bad.append(f"h_a x_b h_a^-1 {a} {b}")
                img = na * xb * na.inverse()
                sb = reflect(b, a)
                if img != gen_x(tag, sb, x) and img != gen_x(tag, sb, -x):
                    bad.append(f"n_a X_b n_a^-1 = X_(s_a b) {a} {b}")
    return bad
