import pytest

from oigb.errors import InsufficientData
from oigb.groebner import GeneratorSet
from oigb.module import FreeSignature
from oigb.resolution import BettiTable, betti_table
from oigb.stabilize import NOT_YET, STABLE, detect, stabilization_report
from oigb.textio import parse_element

F0 = FreeSignature.single()


def squares(k, widths, max_p=4):
    B = GeneratorSet(F0, [parse_element(f"x[1,1]^{k}", F0, 1)])
    return betti_table(B, widths, max_p)


def test_squares_p2():
    e = detect(squares(2, range(1, 6)), 2, 3)
    assert e.status == STABLE
    assert e.degree_set == (4,) and e.onset == 2 and e.max_degree == 4


def test_empty_and_single_width():
    with pytest.raises(InsufficientData):
        detect(BettiTable(), 0)
    e = detect(squares(2, [4]), 1, 3)
    assert e.status == NOT_YET and e.degree_set == (2,)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_koszul_families(k):
    report = stabilization_report(squares(k, range(1, 7)), range(5), 2)
    for p, entry in report.entries.items():
        assert entry.status == STABLE
        assert entry.degree_set == (p * k,)
        assert entry.onset == max(p, 1)


def test_more_widths_agree():
    small = stabilization_report(squares(2, range(1, 5)), range(4), 2)
    big = stabilization_report(squares(2, range(1, 7)), range(4), 2)
    for p in range(4):
        if small.entries[p].status == STABLE:
            assert big.entries[p].degree_set == small.entries[p].degree_set
            assert big.entries[p].onset <= small.entries[p].onset


def test_gap_breaks_run():
    t = BettiTable({(1, 0, 0): 1, (2, 0, 0): 1, (4, 0, 0): 1, (5, 0, 0): 1}, [1, 2, 4, 5], 0)
    e = detect(t, 0, 3)
    assert e.status == NOT_YET and e.onset == 4
    assert detect(t, 0, 2).status == STABLE


def test_json_keys():
    report = stabilization_report(squares(1, range(1, 4)), [0, 1], 3)
    data = report.to_json()
    assert data["min_consecutive"] == 3
    assert [r["p"] for r in data["entries"]] == [0, 1]
    assert set(data["entries"][0]) == {"p", "m", "degree_set", "onset", "status", "widths"}
    with pytest.raises(ValueError):
        detect(squares(1, [1]), 0, 0)
