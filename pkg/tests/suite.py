"""Fixed regression suite of generator sets shared by the acceptance checks."""

from oigb.coeff import GF, QQ
from oigb.groebner import GeneratorSet
from oigb.module import FreeSignature, Slot
from oigb.polyring import DegreeD, Tensor
from oigb.textio import parse_element


def _gs(sig, pairs, field=QQ):
    return GeneratorSet(sig, [parse_element(t, sig, n, field) for t, n in pairs])


def suite():
    t1, t2 = FreeSignature.single(Tensor(1)), FreeSignature.single(Tensor(2))
    f1 = FreeSignature.single(Tensor(1), 1)
    mixed = FreeSignature(Tensor(1), (Slot(0, 0), Slot(1, 1)))
    return {
        "square": _gs(t1, [("x[1,1]^2", 1)]),
        "square+product": _gs(t1, [("x[1,1]^2", 1), ("x[1,1]*x[1,2]", 2)]),
        "binomial": _gs(t1, [("x[1,1]*x[1,2] - x[1,2]^2", 2)]),
        "cube+triple": _gs(t1, [("x[1,1]^3", 1), ("x[1,1]*x[1,2]*x[1,3]", 3)]),
        "gap binomial": _gs(t1, [("x[1,1]*x[1,3] - x[1,2]^2", 3)]),
        "segre": _gs(t2, [("x[1,1]*x[2,1]", 1), ("x[1,1]*x[2,2] - x[1,2]*x[2,1]", 2)]),
        "minor": _gs(t2, [("x[1,1]*x[2,2] - x[1,2]*x[2,1]", 2)]),
        "F(1) monomial": _gs(f1, [("x[1,1]*e{1}", 1)]),
        "F(1) binomial": _gs(f1, [("x[1,2]*e{1} - x[1,1]*e{2}", 2)]),
        "F(0)+F(1)(-1)": _gs(mixed, [("x[1,1]*e{λ=0; } - e{λ=1; 1}", 1),
                                      ("x[1,2]*e{λ=1; 1}", 2)]),
        "GF(5) quadric": _gs(t1, [("x[1,1]^2 + 2*x[1,1]*x[1,2]", 2)], GF(5)),
        "edge": _gs(FreeSignature.single(DegreeD(2)), [("x(1,2)*x(2,3)", 3)]),
    }
