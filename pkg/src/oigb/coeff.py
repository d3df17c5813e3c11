"""Exact coefficient fields: the rationals and prime fields.

A field element is a plain Python value: :class:`fractions.Fraction` for
``QQ`` (always in lowest terms, positive denominator) and an ``int`` in
``[0, p)`` for ``GF(p)``.  All arithmetic goes through the field object so
the rest of the engine never has to know which field is active.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DivisionByZero, NonPrimeModulus, ParseError

FieldElement = Union[Fraction, int]

_NUMBER = re.compile(r"^\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


class Field:
    name = "field"
    characteristic = 0

    def zero(self) -> FieldElement:
        raise NotImplementedError

    def one(self) -> FieldElement:
        raise NotImplementedError

    def __call__(self, value) -> FieldElement:
        """Coerce an int, Fraction or numeric string into the field."""
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        return self.from_int(int(value))

    def from_int(self, n: int) -> FieldElement:
        raise NotImplementedError

    def from_fraction(self, q: Fraction) -> FieldElement:
        return self.div(self.from_int(q.numerator), self.from_int(q.denominator))

    def is_zero(self, a: FieldElement) -> bool:
        return a == 0

    def is_one(self, a: FieldElement) -> bool:
        return a == 1

    def neg(self, a):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inverse(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inverse(b))

    def parse(self, text: str) -> FieldElement:
        m = _NUMBER.match(text)
        if not m:
            raise ParseError(f"not a field element: {text!r}")
        sign, num, den = m.groups()
        q = Fraction(int(num), 1)
        if den is not None:
            if int(den) == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            q = Fraction(int(num), int(den))
        if sign == "-":
            q = -q
        return self.from_fraction(q)

    def render(self, a: FieldElement) -> str:
        raise NotImplementedError


class RationalField(Field):
    name = "QQ"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def neg(self, a):
        return -a

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inverse(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return Fraction(a) / b

    def render(self, a):
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def neg(self, a):
        return -a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inverse(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of zero in GF({self.p})")
        return pow(a, -1, self.p)

    def from_fraction(self, q):
        den = q.denominator % self.p
        if den == 0:
            raise DivisionByZero(f"denominator {q.denominator} vanishes in GF({self.p})")
        return q.numerator * pow(den, -1, self.p) % self.p

    def render(self, a):
        return str(a % self.p)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


_FIELD_SPEC = re.compile(r"^\s*(?:(QQ?|rationals)|(?:GF|Fp|F_p)\s*\(\s*(\d+)\s*\))\s*$", re.I)


def field_from_spec(spec: str) -> Field:
    """``"Q"``/``"QQ"`` or ``"Fp(7)"``/``"GF(7)"``."""
    m = _FIELD_SPEC.match(spec)
    if not m:
        raise ParseError(f"unknown field {spec!r}")
    if m.group(1):
        return QQ
    return GF(int(m.group(2)))


def field_spec(field: Field) -> str:
    return "Q" if isinstance(field, RationalField) else f"Fp({field.p})"
