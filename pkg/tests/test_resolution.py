from math import comb

import pytest

from oigb.coeff import GF
from oigb.errors import InsufficientData, NonHomogeneous
from oigb.groebner import GeneratorSet
from oigb.module import FreeSignature, Slot
from oigb.ordering import ORDERS
from oigb.polyring import Tensor
from oigb.resolution import BettiTable, betti_table, width_resolution
from oigb.textio import parse_element

F0 = FreeSignature.single()


def gens(*pairs, sig=F0, **kw):
    return GeneratorSet(sig, [parse_element(t, sig, n, **kw) for t, n in pairs])


def test_principal_ideal():
    res = width_resolution(gens(("x[1,1]^2", 1)), 1, 3)
    assert res.shifts(0) == [0] and res.shifts(1) == [2]
    assert res.length == 1
    assert res.minimal and not res.has_unit_entries()


def test_empty_generators():
    res = width_resolution(GeneratorSet(F0, []), 3, 3)
    assert res.length == 0 and res.shifts(0) == [0]
    sub = betti_table(GeneratorSet(F0, []), [1, 2], 2, quotient=False)
    assert sub.entries == {}


def test_squares_width_three():
    res = width_resolution(gens(("x[1,1]^2", 1)), 3, 3)
    assert res.betti() == {(p, 2 * p): comb(3, p) for p in range(4)}
    assert res.compose_is_zero()
    # exactness: only H_0 survives, and it is P_3 / <x1^2, x2^2, x3^2> with Hilbert series (1 + t)^3
    assert res.homology(7) == {(0, j): comb(3, j) for j in range(4)}


def test_non_minimal_input_is_pruned():
    B = gens(("x[1,1]^2", 1), ("x[1,1]^2*x[1,2]", 2), ("x[1,1]^2 + 0*x[1,1]^2", 1))
    for prune in (True, False):
        res = width_resolution(B, 3, 3, prune=prune)
        assert res.betti() == {(p, 2 * p): comb(3, p) for p in range(4)}
        assert not res.has_unit_entries()


def test_non_monomial_and_submodule():
    B = gens(("x[1,1]*x[1,2] - x[1,2]^2", 2))
    quo = width_resolution(B, 3, 3)
    sub = width_resolution(B, 3, 2, quotient=False)
    assert quo.compose_is_zero() and sub.compose_is_zero()
    for p in range(3):
        assert sub.shifts(p) == quo.shifts(p + 1)
    assert set(quo.homology(6)) <= {(0, j) for j in range(7)}


@pytest.mark.parametrize("B", [
    gens(("x[1,1]^2", 1), ("x[1,1]*x[1,2]", 2)),
    gens(("x[1,1]*x[1,2] - x[1,2]^2", 2)),
    gens(("x[1,1]*x[2,2] - x[1,2]*x[2,1]", 2), sig=FreeSignature.single(Tensor(2))),
])
def test_order_independence(B):
    tables = [betti_table(B, [1, 2, 3], 3, order) for order in sorted(ORDERS)]
    assert all(t.entries == tables[0].entries for t in tables)


def test_module_with_shifts():
    sig = FreeSignature(Tensor(1), (Slot(0, 0), Slot(1, 1)))
    B = GeneratorSet(sig, [parse_element("x[1,1]*e{λ=0; } - e{λ=1; 1}", sig, 1)])
    for n in (1, 2, 3):
        res = width_resolution(B, n, 3)
        assert res.compose_is_zero()
        # each e_(t) equals x_t e_{} modulo M, so the quotient is free of rank one
        assert res.betti() == {(0, 0): 1}


def test_prime_field_and_homogeneity():
    B = gens(("x[1,1]^2 + x[1,2]^2", 2), field=GF(2))
    res = width_resolution(B, 2, 2)
    assert res.betti() == {(0, 0): 1, (1, 2): 1}
    with pytest.raises(NonHomogeneous):
        width_resolution(gens(("x[1,1]^2 + x[1,1]", 1)), 2, 2)


def test_betti_table_json_roundtrip_and_jobs():
    B = gens(("x[1,1]^2", 1))
    t = betti_table(B, range(1, 4), 3)
    assert BettiTable.from_json(t.to_json()) == t
    assert betti_table(B, range(1, 4), 3, jobs=2) == t
    for n in range(1, 4):
        assert t.degrees(n, 0) == [0]
    assert "width 3" in t.render()
    with pytest.raises(InsufficientData):
        betti_table(B, [], 2)
