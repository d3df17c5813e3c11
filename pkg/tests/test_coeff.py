from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oigb.coeff import GF, QQ, PrimeField, field_from_spec, field_spec
from oigb.errors import DivisionByZero, NonPrimeModulus, ParseError

fractions = st.fractions(max_denominator=50).map(Fraction)


def test_rational_examples():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ("2/4") == Fraction(1, 2)
    assert QQ.render(QQ("-6/4")) == "-3/2"


def test_prime_field_examples():
    F = GF(5)
    assert F.inverse(2) == 3
    assert F(-1) == 4
    assert F(Fraction(1, 2)) == 3


def test_errors():
    with pytest.raises(NonPrimeModulus):
        PrimeField(9)
    with pytest.raises(DivisionByZero):
        QQ.inverse(QQ.zero())
    with pytest.raises(DivisionByZero):
        GF(7).div(1, 0)
    with pytest.raises(DivisionByZero):
        GF(3)(Fraction(1, 3))
    with pytest.raises(ParseError):
        QQ.parse("1/x")


def test_specs():
    assert field_from_spec("Q") == QQ
    assert field_from_spec("Fp(7)").p == 7
    assert field_from_spec("GF(11)").p == 11
    assert field_spec(GF(7)) == "Fp(7)"
    assert field_spec(QQ) == "Q"
    with pytest.raises(ParseError):
        field_from_spec("R")


@given(fractions, fractions, fractions)
def test_rational_axioms(a, b, c):
    assert QQ.add(a, QQ.add(b, c)) == QQ.add(QQ.add(a, b), c)
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
    assert QQ.sub(a, a) == 0
    if a != 0:
        assert QQ.mul(a, QQ.inverse(a)) == 1


@given(st.integers(), st.integers(), st.integers(), st.sampled_from([2, 3, 7, 101]))
def test_prime_axioms(a, b, c, p):
    F = GF(p)
    a, b, c = F(a), F(b), F(c)
    assert 0 <= F.add(a, b) < p
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inverse(a)) == 1
        assert F.div(F.mul(b, a), a) == b


@given(fractions)
def test_render_parse_roundtrip(q):
    assert QQ.parse(QQ.render(q)) == q
    F = GF(13)
    if q.denominator % 13:
        x = F(q)
        assert F.parse(F.render(x)) == x
