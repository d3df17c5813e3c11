import pytest

from oigb.module import FreeSignature
from oigb.polyring import DegreeD, Tensor
from oigb.textio import parse_element, parse_polynomial

ACCEPTANCE = {}


def record(criterion, ok, detail=""):
    """Remember the outcome of an acceptance criterion for the terminal summary."""
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        line = f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)


def sig(c=1, d=0, shift=0):
    return FreeSignature.single(Tensor(c), d, shift)


def el(text, width, signature=None, **kw):
    return parse_element(text, signature or sig(), width, **kw)


def poly(text, width, c=1, **kw):
    return parse_polynomial(text, Tensor(c), width, **kw)


@pytest.fixture
def s1():
    return sig()


@pytest.fixture
def deg2():
    return DegreeD(2)
