"""Exact scalar fields: the rationals and prime fields F_p.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field elements
are :class:`Fp` instances.  A :class:`Field` object (``QQ`` or ``GF(p)``)
converts integers and fractions into its elements and knows its
characteristic; characteristic 0 stands for the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union


class FieldMismatchError(TypeError):
    """Raised when two values from different fields are combined."""


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Fp:
    """An element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.value = int(value) % p
        self.p = p

    def _coerce(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        if isinstance(other, Fraction):
            return Fp(other.numerator, self.p) / Fp(other.denominator, self.p)
        raise FieldMismatchError(f"cannot combine F_{self.p} with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return Fp(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Fp(self.value - o.value, self.p)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return Fp(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


FieldValue = Union[Fraction, Fp]


class Field:
    """Either the rationals (``char == 0``) or the prime field F_p."""

    def __init__(self, char: int = 0):
        if char != 0 and not is_prime(char):
            raise ValueError(f"characteristic {char} is not 0 or a prime")
        self.char = char

    def __call__(self, x) -> FieldValue:
        if self.char == 0:
            if isinstance(x, Fp):
                raise FieldMismatchError("cannot lift an F_p element to Q")
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != self.char:
                raise FieldMismatchError(f"F_{x.p} element given to F_{self.char}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.char == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.char}")
            return Fp(x.numerator, self.char) / x.denominator
        return Fp(x, self.char)

    @property
    def zero(self) -> FieldValue:
        return self(0)

    @property
    def one(self) -> FieldValue:
        return self(1)

    @property
    def is_finite(self) -> bool:
        return self.char != 0

    def elements(self):
        if not self.is_finite:
            raise ValueError("Q is infinite")
        return [Fp(i, self.char) for i in range(self.char)]

    def units(self):
        return [Fp(i, self.char) for i in range(1, self.char)] if self.is_finite else None

    def generator(self) -> FieldValue:
        """A generator of the multiplicative group (F_p only)."""
        if not self.is_finite:
            raise ValueError("Q^* is not cyclic")
        for g in range(1, self.char):
            if multiplicative_order(Fp(g, self.char), self.char) == self.char - 1:
                return Fp(g, self.char)
        raise AssertionError("unreachable")

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"

    @property
    def name(self) -> str:
        return "Q" if self.char == 0 else f"F{self.char}"


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


def field_of(x: FieldValue) -> Field:
    if isinstance(x, Fp):
        return GF(x.p)
    return QQ


def field_inverse(x: FieldValue) -> FieldValue:
    if isinstance(x, Fp):
        return x.inverse()
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("0 has no inverse in Q")
    return 1 / x


EXCEEDS_CAP = "exceeds cap"


def multiplicative_order(x: FieldValue, cap: int) -> int | str:
    """Least ``e <= cap`` with ``x**e == 1``, else :data:`EXCEEDS_CAP`."""
    if x == 0:
        raise ValueError("0 has no multiplicative order")
    one = 1
    y = x
    for e in range(1, cap + 1):
        if y == one:
            return e
        y = y * x
    return EXCEEDS_CAP


def parse_field(name: str) -> Field:
    """Parse ``q``/``Q``/``0`` as the rationals and ``f5``/``F5``/``5`` as F_5."""
    s = name.strip().lower()
    if s in ("q", "0", "qq", "rationals"):
        return QQ
    if s.startswith("f") or s.startswith("gf"):
        s = s.lstrip("gf")
    return GF(int(s))
