"""The OI-Koszul complex of one element ``a`` of width 1.

At width ``n`` the complex is ``0 -> F(n)_n -> ... -> F(1)_n -> F(0)_n`` with
``F(d)`` generated in degree ``d * deg(a)`` and

    phi_d(e_pi) = sum_j (-1)^(j+1) a_{n, pi(j)} e_{pi minus j},

where ``a_{n,t}`` is the image of ``a`` under the map ``[1] -> [n]``, ``1 -> t``.
Homology is computed one internal degree at a time by exact row reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import NonHomogeneous, WidthMismatch, ZeroElement
from .linalg import Echelon
from .module import FreeSignature, ModuleElement
from .oi import OIMorphism, oi_images
from .polyring import Polynomial, apply_morphism_ring, monomials_of_degree


def koszul_images(a: Polynomial, n: int) -> list:
    """``(a_{n,1}, ..., a_{n,n})``."""
    if a.is_zero():
        raise ZeroElement("the Koszul complex needs a nonzero element")
    if a.width != 1:
        raise WidthMismatch(f"a must live at width 1, not {a.width}")
    return [apply_morphism_ring(OIMorphism(1, n, (t,)), a) for t in range(1, n + 1)]


def _degree(a: Polynomial) -> int:
    if not a.is_homogeneous():
        raise NonHomogeneous(f"{a} is not homogeneous")
    return next(iter(a.degrees()))


def component(a: Polynomial, d: int) -> FreeSignature:
    """``F(d)`` with its generators placed in degree ``d * deg(a)``."""
    return FreeSignature.single(a.scheme, d, d * _degree(a))


def phi(a: Polynomial, d: int, q: ModuleElement) -> ModuleElement:
    """Apply ``phi_d`` to an element of ``F(d)`` at any width."""
    if q.signature.slots[0].d != d:
        raise WidthMismatch(f"element of F({q.signature.slots[0].d}) given to phi_{d}")
    n = q.width
    images = koszul_images(a, n)
    target = component(a, d - 1)
    out = ModuleElement.zero(target, n, q.field)
    for (_, basis, e), c in q.terms.items():
        for j in range(d):
            sign = c if j % 2 == 0 else q.field.neg(c)
            rest = basis[:j] + basis[j + 1:]
            term = ModuleElement._raw(target, n, {(0, rest, e): sign}, q.field)
            out = out + term.times(_coerce(images[basis[j] - 1], q.field))
    return out


def _coerce(f: Polynomial, field) -> Polynomial:
    if f.field == field:
        return f
    return Polynomial(f.scheme, f.width, {e: field(c) for e, c in f.terms.items()}, field)


def differential(a: Polynomial, d: int, n: int) -> list:
    """Images ``phi_d(e_pi)`` for ``pi`` in lexicographic order."""
    if not 1 <= d <= n:
        raise WidthMismatch(f"phi_{d} is not defined at width {n}")
    src = component(a, d)
    return [phi(a, d, ModuleElement.basis_element(src, n, 0, pi, a.field)) for pi in oi_images(d, n)]


@dataclass
class KoszulComplex:
    a: Polynomial
    n: int
    max_degree: Optional[int] = None

    def __post_init__(self):
        self.deg = _degree(self.a)
        koszul_images(self.a, self.n)
        if self.max_degree is None:
            self.max_degree = self.n * self.deg + 2

    @property
    def field(self):
        return self.a.field

    def rank(self, d: int) -> int:
        return len(oi_images(d, self.n))

    @cached_property
    def columns(self) -> dict:
        return {d: differential(self.a, d, self.n) for d in range(1, self.n + 1)}

    def is_complex(self) -> bool:
        """``phi_{d-1} o phi_d = 0`` on every basis element."""
        for d in range(2, self.n + 1):
            for col in self.columns[d]:
                if not phi(self.a, d - 1, col).is_zero():
                    return False
        return True

    def dim(self, d: int, j: int) -> int:
        """``dim_K`` of ``F(d)_n`` in internal degree ``j``."""
        r = j - d * self.deg
        if d > self.n or r < 0:
            return 0
        return self.rank(d) * len(monomials_of_degree(self.a.scheme, self.n, r))

    def matrix_rank(self, d: int, j: int) -> int:
        """Rank of ``phi_d`` in internal degree ``j``."""
        if d < 1 or d > self.n:
            return 0
        r = j - d * self.deg
        if r < 0:
            return 0
        ech = Echelon(self.field)
        index: dict = {}
        monos = monomials_of_degree(self.a.scheme, self.n, r)
        for col in self.columns[d]:
            for m in monos:
                row = {}
                for (_, basis, e), c in col.terms.items():
                    key = (basis, tuple(x + y for x, y in zip(e, m)))
                    row[index.setdefault(key, len(index))] = c
                ech.add(row)
        return ech.rank

    def homology(self, max_p: Optional[int] = None) -> dict:
        """``{(p, j): dim H_p in degree j}`` for ``p <= max_p`` and ``j <= max_degree``."""
        top = self.n if max_p is None else min(max_p, self.n)
        out = {}
        for j in range(self.max_degree + 1):
            ranks = {d: self.matrix_rank(d, j) for d in range(0, top + 2)}
            for p in range(top + 1):
                out[(p, j)] = self.dim(p, j) - ranks[p] - ranks[p + 1]
        return out

    def euler_ok(self, homology: Optional[dict] = None) -> bool:
        """Alternating sums of component dimensions and homology agree in every degree."""
        h = homology if homology is not None else self.homology()
        for j in range(self.max_degree + 1):
            chain = sum((-1) ** d * self.dim(d, j) for d in range(self.n + 1))
            hom = sum((-1) ** p * h.get((p, j), 0) for p in range(self.n + 1))
            if chain != hom:
                return False
        return True


def homology_dims(a: Polynomial, n: int, max_degree: Optional[int] = None,
                  max_p: Optional[int] = None) -> dict:
    return KoszulComplex(a, n, max_degree).homology(max_p)
