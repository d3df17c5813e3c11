from math import comb, perm

import pytest
from hypothesis import given, strategies as st

from oigb.errors import EmptySource, ParseError, WidthMismatch
from oigb.oi import (FIMorphism, OIMorphism, compose, enumerate_fi, enumerate_oi, fi_factor,
                     inc_extension, iota, parse_morphism)


def test_compose_example():
    outer = OIMorphism(3, 4, (1, 3, 4))
    inner = OIMorphism(2, 3, (2, 3))
    assert compose(outer, inner).image == (3, 4)
    with pytest.raises(WidthMismatch):
        compose(inner, outer)


def test_iota_and_validation():
    assert iota(2, 5).image == (1, 2)
    assert iota(0, 3).image == ()
    with pytest.raises(WidthMismatch):
        OIMorphism(2, 3, (3, 1))
    with pytest.raises(WidthMismatch):
        OIMorphism(2, 3, (1, 4))
    with pytest.raises(WidthMismatch):
        FIMorphism(2, 3, (2, 2))


def test_enumeration_counts():
    for m in range(5):
        for n in range(6):
            assert len(enumerate_oi(m, n)) == (comb(n, m) if m <= n else 0)
            assert len(enumerate_fi(m, n)) == (perm(n, m) if m <= n else 0)
    assert len(enumerate_fi(2, 4)) == 12
    imgs = [e.image for e in enumerate_oi(2, 4)]
    assert imgs == sorted(imgs)


def test_fi_factor_examples():
    s, sigma = fi_factor(FIMorphism(2, 3, (3, 1)))
    assert s.image == (1, 3) and sigma.image == (2, 1)
    s, sigma = fi_factor(FIMorphism(3, 4, (2, 4, 1)))
    assert s.image == (1, 2, 4) and sigma.image == (2, 3, 1)


@given(st.integers(0, 4), st.integers(0, 3), st.data())
def test_fi_factor_recomposes(m, extra, data):
    n = m + extra
    pi = data.draw(st.sampled_from(enumerate_fi(m, n))) if m or n else FIMorphism(0, 0, ())
    s, sigma = fi_factor(pi)
    assert tuple(s.image[k - 1] for k in sigma.image) == pi.image


def test_inc_extension():
    ext = inc_extension(OIMorphism(2, 3, (1, 3)))
    assert ext.values(6) == (1, 3, 4, 5, 6, 7)
    assert ext.restrict(4).image == (1, 3, 4, 5)
    with pytest.raises(EmptySource):
        inc_extension(OIMorphism(0, 3, ()))


@given(st.integers(0, 4), st.integers(0, 2), st.integers(0, 2), st.data())
def test_composition_associative(a, b, c, data):
    f = data.draw(st.sampled_from(enumerate_oi(a, a + b)))
    g = data.draw(st.sampled_from(enumerate_oi(a + b, a + b + c)))
    h = data.draw(st.sampled_from(enumerate_oi(a + b + c, a + b + c + 1)))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)
    assert compose(g, iota(a + b, a + b)) == g


def test_parse_morphism():
    eps = parse_morphism("[2->4: 1,3]")
    assert eps == OIMorphism(2, 4, (1, 3))
    assert str(eps) == "[2->4: 1,3]"
    assert parse_morphism("[2->3: 3,1]", fi=True).image == (3, 1)
    with pytest.raises(ParseError):
        parse_morphism("[2->3: 3,1]")
    with pytest.raises(ParseError):
        parse_morphism("2 -> 3")
