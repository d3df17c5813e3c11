"""Division, Groebner bases and membership for submodules of free OI-modules.

A submodule is given by a :class:`GeneratorSet`; its width-``n`` component is
the ``P_n``-span of all OI-images of the generators into width ``n``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence

from .coeff import Field
from .engine import Basis, Buchberger, Engine
from .errors import SignatureMismatch, UncertifiedWidth, ZeroInput
from .module import (FIExpansion, FreeSignature, ModuleElement, ModuleMonomial,
                     apply_morphism_mod, expand_fi_signature, fi_to_oi)
from .oi import enumerate_oi
from .ordering import DEFAULT_ORDER, MonomialOrder, get_order, oi_divides_mod

log = logging.getLogger(__name__)

HEURISTIC = "HeuristicallyCertified"
WIDTH_LIMITED = "WidthLimited"


@dataclass
class GeneratorSet:
    signature: FreeSignature
    generators: list
    flavor: str = "oi"
    expansion: Optional[FIExpansion] = None

    def __post_init__(self):
        if self.flavor not in ("oi", "fi"):
            raise ValueError(f"flavor must be 'oi' or 'fi', not {self.flavor!r}")
        gens = []
        for g in self.generators:
            if g.signature != self.signature:
                raise SignatureMismatch("generator does not live in the declared free module")
            if g.is_zero():
                log.warning("dropping zero generator at width %d", g.width)
                continue
            gens.append(g)
        self.generators = gens

    @property
    def field(self) -> Optional[Field]:
        return self.generators[0].field if self.generators else None

    def to_oi(self) -> "GeneratorSet":
        """OI form: FI generators are replaced by their ``Sym(m)``-orbits."""
        if self.flavor == "oi":
            return self
        exp = expand_fi_signature(self.signature)
        gens = [h for g in self.generators for h in fi_to_oi(g, exp)]
        return GeneratorSet(exp.signature, gens, "oi", exp)

    @property
    def widths(self) -> list:
        return sorted({g.width for g in self.generators})


def as_generator_set(B) -> GeneratorSet:
    if isinstance(B, GeneratorSet):
        return B.to_oi()
    B = list(B)
    if not B:
        raise ValueError("an empty list needs an explicit GeneratorSet (signature unknown)")
    return GeneratorSet(B[0].signature, B)


# -- conversion between module elements and engine vectors ---------------------

def to_vec(q: ModuleElement) -> dict:
    return {((s, b), e): c for (s, b, e), c in q.terms.items()}


def from_vec(v: dict, signature: FreeSignature, width: int, field: Field) -> ModuleElement:
    return ModuleElement._raw(signature, width, {(s, b, e): c for ((s, b), e), c in v.items()}, field)


def _engine(order: MonomialOrder, field: Field) -> Engine:
    return Engine(field, None if order.is_lex else order.ring_key)


def images_at_width(elements: Sequence[ModuleElement], n: int) -> list:
    """``F(eps)(b)`` for every element of width ``<= n`` and every ``eps`` into ``[n]``."""
    out = []
    for b in elements:
        if b.width > n:
            continue
        for eps in enumerate_oi(b.width, n):
            out.append(apply_morphism_mod(eps, b))
    return out


def leading_monomial(q: ModuleElement, order: MonomialOrder = DEFAULT_ORDER) -> ModuleMonomial:
    if q.is_zero():
        raise ZeroInput("the zero element has no leading monomial")
    key = max(q.terms, key=order.term_key)
    return ModuleMonomial(q.signature, q.width, *key)


def leading_coefficient(q: ModuleElement, order: MonomialOrder = DEFAULT_ORDER):
    return q.terms[leading_monomial(q, order).key]


def sorted_terms(q: ModuleElement, order: MonomialOrder = DEFAULT_ORDER) -> list:
    """Terms in decreasing order."""
    return sorted(q.terms.items(), key=lambda kv: order.term_key(kv[0]), reverse=True)


def monic(q: ModuleElement, order: MonomialOrder = DEFAULT_ORDER) -> ModuleElement:
    return q.scale(q.field.inverse(leading_coefficient(q, order)))


# -- division --------------------------------------------------------------------

def reduce_step(q: ModuleElement, B, order=DEFAULT_ORDER) -> Optional[ModuleElement]:
    """One reduction of the leading term of ``q``, or ``None`` if it is irreducible."""
    order = get_order(order)
    if q.is_zero():
        raise ZeroInput("reduce_step needs a nonzero element")
    lm = leading_monomial(q, order)
    F = q.field
    for b in _elements(B):
        if b.width > q.width:
            continue
        lb = leading_monomial(b, order)
        w = oi_divides_mod(lb, lm)
        if w is None:
            continue
        eps, kappa = w
        factor = F.div(q.terms[lm.key], b.terms[lb.key])
        return q - apply_morphism_mod(eps, b).times(kappa).scale(factor)
    return None


def _elements(B) -> list:
    if isinstance(B, GeneratorSet):
        return B.to_oi().generators
    if isinstance(B, EquivariantGB):
        return B.basis
    return list(B)


class ImageTable:
    """All OI-images of a fixed set of elements into one width, ready for division.

    Images are listed generator by generator and, within one generator, in the
    lexicographic order of the morphisms; the first divisor found therefore
    agrees with the witness :func:`reduce_step` picks.
    """

    def __init__(self, elements: Sequence[ModuleElement], width: int, order: MonomialOrder, field: Field):
        self.engine = _engine(order, field)
        self.order = order
        self.width = width
        self.basis = Basis()
        for b in elements:
            self.add(b)

    def add(self, b: ModuleElement) -> None:
        for img in images_at_width([monic(b, self.order)], self.width):
            v = to_vec(img)
            self.basis.append(v, self.engine.lead(v))

    def reduce(self, q: ModuleElement) -> dict:
        return self.engine.reduce(to_vec(q), self.basis)


def normal_form(q: ModuleElement, B, order=DEFAULT_ORDER) -> ModuleElement:
    """Fully reduced remainder of ``q`` modulo the OI-images of ``B``."""
    order = get_order(order)
    if q.is_zero():
        return q
    table = ImageTable(_elements(B), q.width, order, q.field)
    return from_vec(table.reduce(q), q.signature, q.width, q.field)


# -- classical and equivariant Buchberger -----------------------------------------

def classical_buchberger_width(B, order=DEFAULT_ORDER, n: int = 1) -> list:
    """Reduced Groebner basis over ``P_n`` of the width-``n`` component of ``<B>``."""
    order = get_order(order)
    gs = as_generator_set(B)
    if not gs.generators:
        return []
    F = gs.field
    vecs = [to_vec(v) for v in images_at_width(gs.generators, n)]
    bb = Buchberger(_engine(order, F))
    bb.add(vecs)
    return [from_vec(v, gs.signature, n, F) for v in bb.reduced()]


@dataclass
class Certification:
    certified_width: int
    lookahead: int
    status: str
    max_width: int

    def to_json(self) -> dict:
        return {"certified_width": self.certified_width, "lookahead": self.lookahead,
                "status": self.status, "max_width": self.max_width}


@dataclass
class EquivariantGB:
    basis: list
    order: str
    certification: Certification
    signature: Optional[FreeSignature] = None
    history: list = dc_field(default_factory=list)  # (width, number of elements added)

    @property
    def certified(self) -> bool:
        return self.certification.status == HEURISTIC


def _auto_reduce(E: list, order: MonomialOrder) -> list:
    """Drop elements whose leading monomial is OI-divisible by another one; tail-reduce the rest."""
    leads = [leading_monomial(e, order) for e in E]
    keep = []
    for k, lk in enumerate(leads):
        redundant = False
        for i, li in enumerate(leads):
            if i == k or li.width > lk.width:
                continue
            if oi_divides_mod(li, lk) is not None and (li.key != lk.key or li.width != lk.width or i < k):
                redundant = True
                break
        if not redundant:
            keep.append(k)
    out = []
    for k in keep:
        e = E[k]
        lm = leads[k]
        others = [E[i] for i in keep if i != k]
        tail = ModuleElement._raw(e.signature, e.width, {t: c for t, c in e.terms.items() if t != lm.key}, e.field)
        r = normal_form(tail, others, order) if others and not tail.is_zero() else tail
        terms = dict(r.terms)
        terms[lm.key] = e.terms[lm.key]
        out.append(monic(ModuleElement._raw(e.signature, e.width, terms, e.field), order))
    out.sort(key=lambda e: order.key(leading_monomial(e, order)))
    return out


def equivariant_buchberger(B, order=DEFAULT_ORDER, max_width: int = 8, lookahead: int = 2) -> EquivariantGB:
    """Width-sweep completion.

    For ``n = n0, n0+1, ...`` the classical reduced basis at width ``n`` is
    reduced against all OI-images of the candidate set ``E``; nonzero
    remainders are adjoined.  Once every generator width has been reached,
    ``lookahead`` consecutive widths without additions certify ``E``
    heuristically.  Otherwise the sweep stops at ``max_width`` and reports
    ``WidthLimited``.
    """
    order = get_order(order)
    gs = as_generator_set(B)
    if not gs.generators:
        cert = Certification(max_width, lookahead, HEURISTIC, max_width)
        return EquivariantGB([], order.name, cert, gs.signature)
    n0, top = min(gs.widths), max(gs.widths)
    E: list = []
    clean = 0
    history = []
    n = n0
    status, certified_width = WIDTH_LIMITED, min(max_width, top)
    while n <= max_width:
        added = 0
        table = ImageTable(E, n, order, gs.field)
        for g in classical_buchberger_width(gs, order, n):
            r = from_vec(table.reduce(g), g.signature, n, g.field)
            if not r.is_zero():
                r = monic(r, order)
                E.append(r)
                table.add(r)
                added += 1
        if added:
            E = _auto_reduce(E, order)
        history.append((n, added))
        certified_width = n
        clean = clean + 1 if (added == 0 and n >= top) else 0
        if n >= top and clean >= lookahead:
            status = HEURISTIC
            break
        n += 1
    if status != HEURISTIC:
        log.info("equivariant Buchberger hit the width cap %d without stabilizing", max_width)
    cert = Certification(certified_width, lookahead, status, max_width)
    return EquivariantGB(E, order.name, cert, gs.signature, history)


def is_groebner(E, B, order=DEFAULT_ORDER, check_widths: Iterable[int] = (1, 2, 3)) -> bool:
    """Whether every element of the width-``n`` classical basis reduces to zero modulo ``E``."""
    order = get_order(order)
    E = _elements(E)
    gs = as_generator_set(B)
    for n in check_widths:
        G = classical_buchberger_width(gs, order, n)
        if not G:
            continue
        if not E:
            return False
        for g in G:
            if not normal_form(g, E, order).is_zero():
                return False
    return True


def membership(q: ModuleElement, B, order=DEFAULT_ORDER, max_width: int = 8, lookahead: int = 2,
               gb: Optional[EquivariantGB] = None) -> bool:
    """Decide ``q in <B>`` by reduction against an equivariant Groebner basis."""
    order = get_order(order)
    if q.is_zero():
        return True
    gs = as_generator_set(B)
    if gb is None:
        gb = equivariant_buchberger(gs, order, max(max_width, q.width), lookahead)
    cert = gb.certification
    if q.width > cert.certified_width:
        if not gb.certified or not is_groebner(gb.basis, gs, order, [q.width]):
            raise UncertifiedWidth(
                f"width {q.width} is beyond the certified width {cert.certified_width} ({cert.status})")
    return normal_form(q, gb.basis, order).is_zero()

