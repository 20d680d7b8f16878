"""The maximal torus of the simply connected group, kept symbolic.

A torus element is a finite product of cocharacters evaluated at scalar
symbols.  Internally every symbol maps to one integer vector in the coroot
basis (alpha_1^vee, ..., alpha_n^vee); since the group is simply connected the
fundamental weights are dual to that basis, so the vector *is* the list of
fundamental-weight exponents.

Distinct symbols are treated as independent: a product of powers of distinct
symbols is the identity only when each factor is.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .rootsystem import RootSystem

CONDITIONAL = "conditional"


class UndecidableError(ValueError):
    """Raised when identity testing meets a symbol of unknown order."""


@dataclass(frozen=True)
class ScalarSymbol:
    """A named scalar in k^*.

    ``order`` is a declared finite multiplicative order.  When ``order`` is
    None the symbol is generic: ``exclusions`` lists the exponents e for which
    z^e != 1 is assumed (``()`` means nothing is known beyond z != 0, while
    ``generic=True`` means z has infinite order).
    """

    name: str
    order: int | None = None
    exclusions: tuple[int, ...] = ()
    generic: bool = False

    def effective_order(self, p: int) -> int | None:
        """Order after removing the p-part (elements of p-power order are 1)."""
        if self.order is None:
            return None
        o = self.order
        if p:
            while o % p == 0:
                o //= p
        return o

    def power_is_one(self, k: int, p: int) -> bool | str:
        """Decide z^k == 1: True, False, or :data:`CONDITIONAL`."""
        if k == 0:
            return True
        o = self.effective_order(p)
        if o is not None:
            return k % o == 0
        if self.generic:
            return False
        # z^k = 1 iff ord(z) | k; an order d is ruled out when p | d or when
        # d divides an excluded exponent
        for d in _divisors(abs(k)):
            if p and d % p == 0:
                continue
            if not any(ex % d == 0 for ex in self.exclusions):
                return CONDITIONAL
        return False

    def __str__(self):
        return self.name


def _divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


MINUS_ONE = ScalarSymbol("-1", order=2)
ZETA3 = ScalarSymbol("zeta", order=3)
ZETA4 = ScalarSymbol("zeta4", order=4)


def generic(name: str, *exclusions: int) -> ScalarSymbol:
    """A symbol subject to z^e != 1 for every listed e."""
    return ScalarSymbol(name, None, tuple(sorted(set(exclusions))))


class TorusElem:
    """Element of T = Y (x) k^* with Y the coroot lattice."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms: dict[ScalarSymbol, Sequence[int]] | None = None):
        self.rs = rs
        clean = {}
        for z, y in (terms or {}).items():
            y = tuple(int(c) for c in y)
            if any(y):
                clean[z] = y
        self.terms = clean

    @classmethod
    def identity(cls, rs: RootSystem) -> "TorusElem":
        return cls(rs)

    def __mul__(self, other: "TorusElem") -> "TorusElem":
        terms = dict(self.terms)
        for z, y in other.terms.items():
            old = terms.get(z, (0,) * self.rs.rank)
            terms[z] = tuple(a + b for a, b in zip(old, y))
        return TorusElem(self.rs, terms)

    def __pow__(self, k: int) -> "TorusElem":
        return TorusElem(self.rs, {z: tuple(k * c for c in y) for z, y in self.terms.items()})

    def inverse(self) -> "TorusElem":
        return self ** -1

    def square(self) -> "TorusElem":
        return self ** 2

    def __eq__(self, other):
        return isinstance(other, TorusElem) and other.rs is self.rs and other.terms == self.terms

    def __hash__(self):
        return hash(tuple(sorted((z.name, y) for z, y in self.terms.items())))

    def __repr__(self):
        parts = [f"{z}^{list(y)}" for z, y in sorted(self.terms.items(), key=lambda t: t[0].name)]
        return f"TorusElem({self.rs.name}: {' '.join(parts) or '1'})"

    def symbols(self) -> list[ScalarSymbol]:
        return sorted(self.terms, key=lambda z: z.name)


def coroot_coords(rs: RootSystem, alpha_coeffs: Sequence[int]) -> tuple[int, ...]:
    """alpha^vee in the coroot basis: c_i = m_i (alpha_i,alpha_i)/(alpha,alpha)."""
    na = rs.norm2(alpha_coeffs)
    out = []
    for i, m in enumerate(alpha_coeffs):
        num = m * rs.gram[i][i]
        if num % na:
            raise AssertionError("coroot is not integral")
        out.append(num // na)
    return tuple(out)


def h(rs: RootSystem, alpha: Sequence, z: ScalarSymbol, *, coeffs: bool = False) -> TorusElem:
    """h_alpha(z).  ``alpha`` is ambient unless ``coeffs`` is set."""
    a = tuple(alpha) if coeffs else rs.coeffs_of(alpha)
    if coeffs and a not in rs._from_coeffs:
        raise ValueError(f"{a} is not a root")
    return TorusElem(rs, {z: coroot_coords(rs, a)})


def h_simple(rs: RootSystem, i: int, z: ScalarSymbol) -> TorusElem:
    """h_{alpha_i}(z) for a 1-based simple index."""
    return TorusElem(rs, {z: tuple(int(k == i - 1) for k in range(rs.rank))})


def product(rs: RootSystem, elems: Iterable[TorusElem]) -> TorusElem:
    out = TorusElem.identity(rs)
    for t in elems:
        out = out * t
    return out


def eval_coeffs(t: TorusElem, b: Sequence[int]) -> dict[ScalarSymbol, int]:
    """Exponents of beta(t) for beta given in simple coordinates."""
    rs = t.rs
    n = rs.rank
    # <beta, alpha_i^vee> = sum_j b_j cartan[j][i]
    pair = [sum(b[j] * rs.cartan[j][i] for j in range(n)) for i in range(n)]
    out = {}
    for z, y in t.terms.items():
        e = sum(c * q for c, q in zip(y, pair))
        if e:
            out[z] = e
    return out


def eval_root(t: TorusElem, beta: Sequence) -> dict[ScalarSymbol, int]:
    """beta(t) as a monomial {symbol: exponent} (zero exponents omitted)."""
    return eval_coeffs(t, t.rs.coeffs_of(beta))


def eval_weight(t: TorusElem, k: int) -> dict[ScalarSymbol, int]:
    """omega_k(t) for a 1-based fundamental weight index."""
    return {z: y[k - 1] for z, y in t.terms.items() if y[k - 1]}


def monomial_is_one(mono: dict[ScalarSymbol, int], p: int) -> bool | str:
    results = [z.power_is_one(e, p) for z, e in mono.items()]
    if any(r is False for r in results):
        return False
    if all(r is True for r in results):
        return True
    return CONDITIONAL


def is_identity(t: TorusElem, p: int) -> bool:
    """True iff every fundamental weight takes the value 1 on t.

    Every symbol must have a finite declared order.
    """
    for z, y in t.terms.items():
        o = z.effective_order(p)
        if o is None:
            raise UndecidableError(f"symbol {z} has no finite order; substitute a value")
        if any(c % o for c in y):
            return False
    return True


def equal(t1: TorusElem, t2: TorusElem, p: int) -> bool:
    return is_identity(t1 * t2.inverse(), p)


def centralizer_roots(t: TorusElem, p: int) -> tuple[list[tuple], list[tuple]]:
    """Roots beta (simple coordinates) with beta(t) = 1.

    Returns ``(roots, conditional)``: the roots certainly fixed, and the roots
    whose value depends on unrecorded properties of the symbols.
    """
    fixed, cond = [], []
    for c in t.rs._coeff_list:
        r = monomial_is_one(eval_coeffs(t, c), p)
        if r is True:
            fixed.append(c)
        elif r == CONDITIONAL:
            cond.append(c)
    return fixed, cond
