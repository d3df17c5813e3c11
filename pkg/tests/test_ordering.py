import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from oigb.errors import ParameterMismatch, SignatureMismatch
from oigb.module import FreeSignature, ModuleMonomial
from oigb.oi import enumerate_oi
from oigb.ordering import (DEFAULT_ORDER, ORDERS, Cmp, MonomialOrder, check_order_axioms, compare,
                           encode_higman, fi_divides_mod, get_order, higman_leq, higman_leq_dp,
                           minimal_elements, oi_divides_mod, random_module_monomial, register_order)
from oigb.polyring import Tensor, cycle_monomial, monomials_of_degree
from oigb.textio import parse_module_monomial

F0 = FreeSignature.single()
F1 = FreeSignature.single(Tensor(1), 1)


def mm(text, width, sig=F0):
    return parse_module_monomial(text, sig, width)


def test_compare_examples():
    a, b = mm("e{1,2}", 2, FreeSignature.single(Tensor(1), 2)), mm("e{1,2}", 3, FreeSignature.single(Tensor(1), 2))
    assert compare(DEFAULT_ORDER, a, b) == Cmp.LESS
    assert compare(DEFAULT_ORDER, a, a) == Cmp.EQUAL
    assert compare(DEFAULT_ORDER, mm("x[1,1]", 2), mm("x[1,2]", 2)) == Cmp.GREATER
    with pytest.raises(SignatureMismatch):
        compare(DEFAULT_ORDER, mm("x[1,1]", 1), mm("x[1,1]*e{1}", 1, F1))


def test_divisibility_examples():
    mu = mm("x[1,1]*e{1}", 1, F1)
    eps, kappa = oi_divides_mod(mu, mu)
    assert eps.image == (1,) and kappa.is_one()
    eps, kappa = oi_divides_mod(mu, mm("x[1,1]*x[1,2]*e{2}", 2, F1))
    assert eps.image == (2,) and str(kappa) == "x[1,1]"
    assert oi_divides_mod(mu, mm("x[1,2]*e{1}", 2, F1)) is None
    assert fi_divides_mod(mu, mm("x[1,2]*e{1}", 2, F1)) is None


def test_higman_examples():
    code = encode_higman(mm("x[1,1]^2*x[1,3]", 3))
    assert [e[0] for e in code.entries] == [((2,), 1), ((0,), 2), ((1,), 3)]
    assert all(len(e) == 1 for e in code.entries)
    assert len(encode_higman(mm("1", 0))) == 0
    code = encode_higman(mm("x[1,2]*e{2}", 2, F1))
    assert all(e[1] == ((1,), 2) for e in code.entries)
    assert higman_leq(code, code)
    assert higman_leq(encode_higman(mm("1", 0)), encode_higman(mm("x[1,2]^3", 4)))
    mu, nu = mm("x[1,1]*e{1}", 1, F1), mm("x[1,1]*x[1,2]*e{2}", 2, F1)
    assert higman_leq(encode_higman(mu), encode_higman(nu))
    with pytest.raises(ParameterMismatch):
        higman_leq(encode_higman(mu), encode_higman(mm("x[1,1]", 1)))


def test_minimal_elements():
    mu = mm("x[1,1]", 1)
    assert minimal_elements([mu]) == [mu]
    assert minimal_elements([mm("x[1,1]*x[1,3]", 3), mu]) == [mu]
    cycles = [cycle_monomial(i) for i in range(3, 7)]
    assert minimal_elements(cycles) == cycles


def _grid(c, d, max_width, max_degree):
    sig = FreeSignature.single(Tensor(c), d)
    out = []
    for n in range(d, max_width + 1):
        for basis in itertools.combinations(range(1, n + 1), d):
            for j in range(max_degree + 1):
                for e in monomials_of_degree(sig.scheme, n, j):
                    out.append(ModuleMonomial(sig, n, 0, basis, e))
    return out


@pytest.mark.parametrize("c,d", [(1, 0), (1, 1), (2, 1), (1, 2)])
def test_encoding_matches_divisibility_small(c, d):
    monos = _grid(c, d, 3, 2)
    for mu in monos:
        s = encode_higman(mu)
        for nu in monos:
            t = encode_higman(nu)
            div = oi_divides_mod(mu, nu) is not None
            assert higman_leq(s, t) == div
            assert higman_leq_dp(s, t) == div


def test_minimal_elements_antichain_and_dominating():
    rng = random.Random(5)
    sig = FreeSignature.single(Tensor(2), 1)
    monos = [random_module_monomial(sig, rng.randint(1, 4), 3, rng) for _ in range(60)]
    mins = minimal_elements(monos)
    for a, b in itertools.permutations(mins, 2):
        assert oi_divides_mod(a, b) is None
    for mu in monos:
        assert any(oi_divides_mod(k, mu) is not None for k in mins)


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_order_axioms(name):
    order = get_order(name)
    for c, d in [(1, 0), (1, 1), (2, 1), (1, 2)]:
        assert check_order_axioms(order, Tensor(c), d, samples=300, rng=random.Random(c * 10 + d)) == []


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_order_refines_divisibility(name):
    order = get_order(name)
    monos = _grid(1, 1, 3, 2)
    for mu in monos:
        for nu in monos:
            if mu != nu and oi_divides_mod(mu, nu) is not None:
                assert compare(order, mu, nu) == Cmp.LESS


def test_register_rejects_bad_order():
    with pytest.raises(ValueError):
        register_order(MonomialOrder("reverse", lambda e: tuple(-x for x in e)))
    assert "reverse" not in ORDERS
    with pytest.raises(ValueError):
        get_order("nope")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_witness_is_valid(seed):
    rng = random.Random(seed)
    sig = FreeSignature.single(Tensor(2), 1)
    mu = random_module_monomial(sig, rng.randint(1, 2), 2, rng)
    nu = random_module_monomial(sig, rng.randint(2, 4), 4, rng)
    for eps, kappa in oi_divides_mod(mu, nu, all_witnesses=True):
        assert mu.apply(eps).times(kappa) == nu
    got = oi_divides_mod(mu, nu)
    brute = [eps for eps in enumerate_oi(mu.width, nu.width)
             if mu.apply(eps).basis == nu.basis
             and all(a <= b for a, b in zip(mu.apply(eps).exps, nu.exps))]
    assert (got is None) == (not brute)
    if got:
        assert got[0] == brute[0]
