import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oigb.coeff import GF, QQ
from oigb.errors import ParseError
from oigb.module import FreeSignature, ModuleElement, Slot
from oigb.polyring import DegreeD, Polynomial, Tensor
from oigb.textio import (parse_element, parse_element_file, parse_polynomial, parse_scheme,
                         parse_signature, render_element, render_polynomial)

T1 = Tensor(1)


def test_polynomial_grammar():
    f = parse_polynomial("3/2*x[1,1]^2*x[1,2] - x[2,1] + 1", Tensor(2), 2)
    assert f.terms[(2, 1, 0, 0)] == Fraction(3, 2)
    assert f.terms[(0, 0, 1, 0)] == -1
    assert f.terms[(0, 0, 0, 0)] == 1
    g = parse_polynomial(" x[ 1 , 1 ] ^1 x[1,2] ", T1, 2)
    assert g == parse_polynomial("x[1,1]*x[1,2]", T1, 2)
    assert parse_polynomial("x(1,3)^2", DegreeD(2), 3).terms == {(0, 2, 0): 1}
    assert parse_polynomial("x[1,1] - x[1,1]", T1, 1).is_zero()


def test_render():
    f = parse_polynomial("-x[1,2] + 2*x[1,1]^2 - 1/3", T1, 2)
    assert render_polynomial(f) == "2*x[1,1]^2 - x[1,2] - 1/3"
    sig = FreeSignature(T1, (Slot(0), Slot(1, -1)))
    q = parse_element("x[1,1]*e{0; } + 2*e{λ=1; 2}", sig, 2)
    assert render_element(q) == "2*e{λ=1; 2} + x[1,1]*e{λ=0; }"
    assert render_element(ModuleElement.zero(sig, 2)) == "0"


def test_elements_and_defaults():
    s0 = FreeSignature.single()
    assert parse_element("x[1,1]^2", s0, 1) == parse_element("x[1,1]^2*e{}", s0, 1)
    assert parse_element("0", s0, 3).is_zero()
    s1 = FreeSignature.single(T1, 1)
    with pytest.raises(ParseError):
        parse_element("x[1,1]", s1, 1)
    F = GF(5)
    assert parse_element("1/2*e{1}", s1, 1, F).terms == {(0, (1,), (0,)): 3}


@pytest.mark.parametrize("bad", ["x[1,3]", "x[1,1]^", "x[1,1] +", "y", "x[1,1]**2", "2 3 +", "x[3,1]"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_polynomial(bad, T1, 2)


def test_element_errors():
    s1 = FreeSignature.single(T1, 1)
    for bad in ["e{2}", "e{1,2}", "x[1,1]*e{1}*e{1}", "e{λ=3; 1}"]:
        with pytest.raises(ParseError):
            parse_element(bad, s1, 1)


def test_element_file():
    text = """# generators
width: 1
x[1,1]^2
width: 2
x[1,1]*x[1,2]   # a product
"""
    gens = parse_element_file(text, FreeSignature.single(), QQ)
    assert [g.width for g in gens] == [1, 2]
    with pytest.raises(ParseError):
        parse_element_file("x[1,1]", FreeSignature.single())


def test_schemes_and_signatures():
    assert parse_scheme("tensor 2") == Tensor(2)
    assert parse_scheme("degree 3") == DegreeD(3)
    sig = parse_signature("0:0, 1:-1, 2", T1)
    assert [(s.d, s.shift) for s in sig.slots] == [(0, 0), (1, -1), (2, 0)]
    assert str(sig) == "0:0, 1:-1, 2:0"
    for bad in ["", "a:1", "1:x"]:
        with pytest.raises(ParseError):
            parse_signature(bad, T1)
    with pytest.raises(ParseError):
        parse_scheme("cubic 2")


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([Tensor(1), Tensor(2), DegreeD(2)]), st.integers(0, 3))
def test_roundtrip(seed, scheme, n):
    rng = random.Random(seed)
    sig = FreeSignature(scheme, (Slot(0), Slot(1, 2)))
    nv = scheme.nvars(n)
    terms = {}
    for _ in range(rng.randint(0, 4)):
        slot = rng.randint(0, 1) if n else 0
        basis = (rng.randint(1, n),) if slot else ()
        e = tuple(rng.randint(0, 3) for _ in range(nv))
        terms[(slot, basis, e)] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    q = ModuleElement(sig, n, terms)
    assert parse_element(render_element(q), sig, n) == q
    f = Polynomial(scheme, n, {e: c for (_, _, e), c in terms.items()})
    assert parse_polynomial(render_polynomial(f), scheme, n) == f
