"""Width-n components of free OI-modules ``(+)_l F(d_l)(-s_l)``.

A module monomial ``x^u e_pi`` in slot ``l`` at width ``n`` is keyed as the
triple ``(slot, basis, exps)`` where ``basis`` is the image tuple of
``pi: [d_l] -> [n]`` and ``exps`` the dense ring exponent tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Optional, Sequence, Union

from .coeff import QQ, Field
from .errors import SignatureMismatch, WidthMismatch
from .oi import FIMorphism, OIMorphism, enumerate_fi, enumerate_oi, fi_factor, oi_images
from .polyring import (Polynomial, RingMonomial, Scheme, Tensor, push_exps,
                       push_table)


@dataclass(frozen=True)
class Slot:
    d: int
    shift: int = 0


@dataclass(frozen=True)
class FreeSignature:
    scheme: Scheme
    slots: tuple

    def __post_init__(self):
        slots = tuple(s if isinstance(s, Slot) else Slot(*s) for s in self.slots)
        object.__setattr__(self, "slots", slots)

    @classmethod
    def single(cls, scheme: Scheme = Tensor(1), d: int = 0, shift: int = 0) -> "FreeSignature":
        return cls(scheme, (Slot(d, shift),))

    def rank(self, n: int) -> int:
        return sum(comb(n, s.d) for s in self.slots)

    def basis(self, n: int) -> list:
        """``(slot, basis)`` pairs at width ``n`` in increasing order."""
        return [(k, img) for k, s in enumerate(self.slots) for img in oi_images(s.d, n)]

    def shift(self, slot: int) -> int:
        return self.slots[slot].shift

    def __str__(self):
        return ", ".join(f"{s.d}:{s.shift}" for s in self.slots)


@dataclass(frozen=True)
class ModuleMonomial:
    signature: FreeSignature
    width: int
    slot: int
    basis: tuple
    exps: tuple

    @property
    def scheme(self) -> Scheme:
        return self.signature.scheme

    @property
    def pi(self) -> OIMorphism:
        return OIMorphism(len(self.basis), self.width, self.basis)

    @property
    def ring(self) -> RingMonomial:
        return RingMonomial(self.signature.scheme, self.width, self.exps)

    @property
    def key(self) -> tuple:
        return (self.slot, self.basis, self.exps)

    def degree(self) -> int:
        return degree(self)

    def apply(self, eps: OIMorphism) -> "ModuleMonomial":
        if eps.source != self.width:
            raise WidthMismatch(f"{eps} does not start at width {self.width}")
        table = push_table(self.scheme, self.width, eps.image, eps.target)
        return ModuleMonomial(self.signature, eps.target, self.slot,
                              tuple(eps.image[b - 1] for b in self.basis),
                              push_exps(self.exps, table, self.scheme.nvars(eps.target)))

    def times(self, u: RingMonomial) -> "ModuleMonomial":
        return ModuleMonomial(self.signature, self.width, self.slot, self.basis,
                              tuple(a + b for a, b in zip(self.exps, u.exps)))

    def __str__(self):
        from .textio import render_module_monomial

        return render_module_monomial(self)


def degree(t: ModuleMonomial) -> int:
    """Internal degree: ring degree plus the slot's shift."""
    return sum(t.exps) + t.signature.shift(t.slot)


class ModuleElement:
    """A finite sum of module monomials at a fixed width.

    ``terms`` maps ``(slot, basis, exps)`` to a nonzero field element.  With
    ``fi=True`` basis tuples may be arbitrary injections (FI-module input).
    """

    __slots__ = ("signature", "width", "field", "terms", "fi")

    def __init__(self, signature: FreeSignature, width: int, terms: Optional[dict] = None,
                 field: Field = QQ, fi: bool = False):
        self.signature = signature
        self.width = width
        self.field = field
        self.fi = fi
        nv = signature.scheme.nvars(width)
        clean = {}
        for (slot, basis, exps), c in (terms or {}).items():
            basis, exps = tuple(basis), tuple(exps)
            _check_key(signature, width, slot, basis, exps, nv, fi)
            c = field(c)
            if not field.is_zero(c):
                key = (slot, basis, exps)
                clean[key] = field.add(clean[key], c) if key in clean else c
                if field.is_zero(clean[key]):
                    del clean[key]
        self.terms = clean

    @classmethod
    def _raw(cls, signature, width, terms, field, fi=False) -> "ModuleElement":
        q = cls.__new__(cls)
        q.signature, q.width, q.terms, q.field, q.fi = signature, width, terms, field, fi
        return q

    @classmethod
    def zero(cls, signature: FreeSignature, width: int, field: Field = QQ) -> "ModuleElement":
        return cls._raw(signature, width, {}, field)

    @classmethod
    def basis_element(cls, signature: FreeSignature, width: int, slot: int = 0,
                      basis: Sequence[int] = (), field: Field = QQ) -> "ModuleElement":
        nv = signature.scheme.nvars(width)
        return cls(signature, width, {(slot, tuple(basis), (0,) * nv): 1}, field)

    @classmethod
    def from_polynomial(cls, f: Polynomial, signature: Optional[FreeSignature] = None,
                        slot: int = 0, basis: Sequence[int] = ()) -> "ModuleElement":
        signature = signature or FreeSignature.single(f.scheme)
        return cls(signature, f.width, {(slot, tuple(basis), e): c for e, c in f.terms.items()}, f.field)

    @classmethod
    def from_monomial(cls, mono: ModuleMonomial, coeff=1, field: Field = QQ) -> "ModuleElement":
        return cls(mono.signature, mono.width, {mono.key: coeff}, field)

    def _check(self, other: "ModuleElement"):
        if self.signature != other.signature:
            raise SignatureMismatch("elements of different free modules")
        if self.width != other.width:
            raise WidthMismatch(f"width {self.width} vs {other.width}")

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> Iterator[ModuleMonomial]:
        for slot, basis, exps in self.terms:
            yield ModuleMonomial(self.signature, self.width, slot, basis, exps)

    def items(self):
        for key, c in self.terms.items():
            yield ModuleMonomial(self.signature, self.width, *key), c

    def degrees(self) -> set:
        sig = self.signature
        return {sum(e) + sig.shift(s) for s, _, e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = F.add(out[k], c) if k in out else c
            if F.is_zero(v):
                out.pop(k, None)
            else:
                out[k] = v
        return ModuleElement._raw(self.signature, self.width, out, F, self.fi or other.fi)

    def __neg__(self) -> "ModuleElement":
        F = self.field
        return ModuleElement._raw(self.signature, self.width,
                                  {k: F.neg(c) for k, c in self.terms.items()}, F, self.fi)

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def scale(self, a) -> "ModuleElement":
        F = self.field
        a = F(a)
        if F.is_zero(a):
            return ModuleElement.zero(self.signature, self.width, F)
        return ModuleElement._raw(self.signature, self.width,
                                  {k: F.mul(a, c) for k, c in self.terms.items()}, F, self.fi)

    def times(self, f: Union[Polynomial, RingMonomial]) -> "ModuleElement":
        """Multiply by a ring element of the same width."""
        if f.width != self.width:
            raise WidthMismatch(f"ring element at width {f.width}, module element at {self.width}")
        F = self.field
        poly = f.terms if isinstance(f, Polynomial) else {f.exps: F.one()}
        out: dict = {}
        for (s, b, e1), c1 in self.terms.items():
            for e2, c2 in poly.items():
                k = (s, b, tuple(x + y for x, y in zip(e1, e2)))
                v = F.add(out[k], F.mul(c1, c2)) if k in out else F.mul(c1, c2)
                if F.is_zero(v):
                    out.pop(k, None)
                else:
                    out[k] = v
        return ModuleElement._raw(self.signature, self.width, out, F, self.fi)

    def __mul__(self, other):
        if isinstance(other, (Polynomial, RingMonomial)):
            return self.times(other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return (self.signature, self.width, self.terms) == (other.signature, other.width, other.terms)

    def __hash__(self):
        return hash((self.signature, self.width, frozenset(self.terms.items())))

    def apply(self, eps) -> "ModuleElement":
        return apply_morphism_mod(eps, self)

    def __str__(self):
        from .textio import render_element

        return render_element(self)

    def __repr__(self):
        return f"ModuleElement({self}, width={self.width})"


def _check_key(sig: FreeSignature, width: int, slot: int, basis: tuple, exps: tuple, nv: int, fi: bool):
    if not 0 <= slot < len(sig.slots):
        raise SignatureMismatch(f"slot {slot} not in signature with {len(sig.slots)} slots")
    if len(basis) != sig.slots[slot].d:
        raise SignatureMismatch(f"basis {basis} does not match d={sig.slots[slot].d} of slot {slot}")
    if len(exps) != nv:
        raise WidthMismatch(f"exponent vector of length {len(exps)} at width {width}")
    if fi:
        FIMorphism(len(basis), width, basis)
    else:
        OIMorphism(len(basis), width, basis)


def apply_morphism_mod(eps: Union[OIMorphism, FIMorphism], q: ModuleElement) -> ModuleElement:
    """``a e_pi -> eps^*(a) e_{eps o pi}``, term by term."""
    if eps.source != q.width:
        raise WidthMismatch(f"{eps} does not start at width {q.width}")
    fi = isinstance(eps, FIMorphism)
    scheme = q.signature.scheme
    n = eps.target
    table = push_table(scheme, q.width, eps.image, n, fi)
    nv = scheme.nvars(n)
    img = eps.image
    terms = {(s, tuple(img[b - 1] for b in basis), push_exps(e, table, nv)): c
             for (s, basis, e), c in q.terms.items()}
    return ModuleElement._raw(q.signature, n, terms, q.field, q.fi or (fi and not eps.is_order_preserving()))


def generator_orbit(signature: FreeSignature, slot: int, widths: Iterable[int],
                    field: Field = QQ) -> list:
    """All images of ``e_id`` of ``slot`` into each requested width."""
    d = signature.slots[slot].d
    gen = ModuleElement.basis_element(signature, d, slot, tuple(range(1, d + 1)), field)
    out = []
    for n in widths:
        for eps in enumerate_oi(d, n):
            out.append(apply_morphism_mod(eps, gen))
    return out


@dataclass(frozen=True)
class FIExpansion:
    """OI form of an FI free module: slot ``k`` of ``signature`` is ``slot_map[k] = (l, sigma)``."""

    signature: FreeSignature
    slot_map: tuple


def expand_fi_signature(signature: FreeSignature) -> FIExpansion:
    slots, slot_map = [], []
    for l, s in enumerate(signature.slots):
        for sigma in enumerate_fi(s.d, s.d):
            slots.append(Slot(s.d, s.shift))
            slot_map.append((l, sigma.image))
    return FIExpansion(FreeSignature(signature.scheme, tuple(slots)), tuple(slot_map))


def fi_to_oi(q: ModuleElement, expansion: FIExpansion) -> list:
    """OI generators of the FI-submodule generated by ``q``.

    Every injection ``[m] -> [n]`` is an OI-morphism after a permutation of
    ``[m]``, so the FI-orbit of ``q`` is the OI-orbit of its ``Sym(m)``-images;
    each FI basis symbol ``e_pi`` becomes ``e_{pi~}`` in the slot of ``sigma``
    where ``pi = pi~ o sigma``.
    """
    index = {key: k for k, key in enumerate(expansion.slot_map)}
    out, seen = [], set()
    for perm in enumerate_fi(q.width, q.width):
        moved = apply_morphism_mod(perm, q)
        terms = {}
        for (s, basis, e), c in moved.terms.items():
            pi_sorted, sigma = fi_factor(FIMorphism(len(basis), q.width, basis))
            terms[(index[(s, sigma.image)], pi_sorted.image, e)] = c
        elem = ModuleElement(expansion.signature, q.width, terms, q.field)
        frozen = frozenset(elem.terms.items())
        if not elem.is_zero() and frozen not in seen:
            seen.add(frozen)
            out.append(elem)
    return out
