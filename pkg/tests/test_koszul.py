import random
from math import comb

import pytest

from oigb.coeff import GF
from oigb.errors import NonHomogeneous, WidthMismatch, ZeroElement
from oigb.koszul import (KoszulComplex, component, differential, homology_dims, koszul_images, phi)
from oigb.module import ModuleElement, apply_morphism_mod
from oigb.oi import enumerate_oi
from oigb.polyring import Polynomial, Tensor
from oigb.textio import parse_element, parse_polynomial

T1 = Tensor(1)


def P(text, n=1, scheme=T1, **kw):
    return parse_polynomial(text, scheme, n, **kw)


def test_images():
    assert koszul_images(P("x[1,1]"), 3) == [P("x[1,1]", 3), P("x[1,2]", 3), P("x[1,3]", 3)]
    assert koszul_images(P("x[1,1]^3"), 2) == [P("x[1,1]^3", 2), P("x[1,2]^3", 2)]
    a = P("x[1,1]^2 - 3*x[1,1]")
    assert koszul_images(a, 1) == [a]
    with pytest.raises(ZeroElement):
        koszul_images(P("0"), 2)
    with pytest.raises(WidthMismatch):
        koszul_images(P("x[1,1]", 2), 2)


def test_differential_examples():
    a = P("x[1,1]")
    d1 = differential(a, 1, 3)
    assert [str(v) for v in d1] == ["x[1,1]*e{}", "x[1,2]*e{}", "x[1,3]*e{}"]
    q = ModuleElement.basis_element(component(a, 2), 3, 0, (1, 3))
    assert phi(a, 2, q) == parse_element("x[1,1]*e{3} - x[1,3]*e{1}", component(a, 1), 3)
    top = differential(a, 3, 3)[0]
    assert phi(a, 2, top).is_zero()
    with pytest.raises(WidthMismatch):
        differential(a, 4, 3)


@pytest.mark.parametrize("a", ["x[1,1]", "x[1,1]^2", "x[1,1]^3", "x[1,1]^2 + 2*x[2,1]*x[1,1]"])
def test_complex_property(a):
    scheme = Tensor(2) if "[2," in a else T1
    for n in range(1, 6):
        assert KoszulComplex(P(a, scheme=scheme), n).is_complex()


def test_homology_examples():
    for n in range(1, 5):
        h = homology_dims(P("x[1,1]"), n, 6)
        assert {k: v for k, v in h.items() if v} == {(0, 0): 1}
    h = homology_dims(P("x[1,1]^2"), 2, 5)
    assert all(v == 0 for (p, j), v in h.items() if p >= 1)


def test_two_rows():
    # with c = 2 the images x11, x12, x13 are still regular; H_0 is K[x21, x22, x23]
    K = KoszulComplex(P("x[1,1]", scheme=Tensor(2)), 3, 4)
    h = K.homology()
    assert all(v == 0 for (p, _), v in h.items() if p >= 1)
    assert h[(0, 2)] == comb(3 + 1, 2)
    assert K.euler_ok(h)


def test_euler_and_fields():
    for a in ("x[1,1]", "x[1,1]^2"):
        K = KoszulComplex(P(a), 3)
        assert K.euler_ok()
    K = KoszulComplex(P("x[1,1]^2", field=GF(2)), 3)
    assert K.is_complex() and K.euler_ok()
    with pytest.raises(NonHomogeneous):
        KoszulComplex(P("x[1,1]^2 + x[1,1]"), 2)


def test_shift_consistency():
    a = P("x[1,1]^2")
    for d in range(1, 4):
        for col in differential(a, d, 3):
            assert col.degrees() == {2 * d}


def test_naturality():
    rng = random.Random(3)
    a = P("x[1,1]^2 - x[1,1]*x[2,1]", scheme=Tensor(2))
    for _ in range(20):
        d = rng.randint(1, 3)
        m = rng.randint(d, 3)
        sig = component(a, d)
        q = ModuleElement.zero(sig, m)
        for pi in enumerate_oi(d, m):
            if rng.random() < 0.6:
                e = tuple(rng.randint(0, 1) for _ in range(2 * m))
                q = q + ModuleElement(sig, m, {(0, pi.image, e): rng.randint(1, 4)})
        eps = rng.choice(enumerate_oi(m, m + 1))
        assert apply_morphism_mod(eps, phi(a, d, q)) == phi(a, d, apply_morphism_mod(eps, q))
