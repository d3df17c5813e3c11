"""Width-indexed polynomial rings and the induced OI/FI action.

Two variable schemes are supported:

* ``Tensor(c)``: ``P_n = K[x_{i,j} : i in [c], j in [n]]``;
* ``DegreeD(d)``: ``K[x_pi : pi in Hom_OI([d], [n])]``.

A monomial at width ``n`` is a dense exponent tuple over the variables of
the scheme listed in decreasing variable order (``x_{1,1} > x_{1,2} > ... >
x_{2,1} > ...`` for the tensor scheme, lexicographically increasing index
tuple for the degree-d scheme).  With that layout plain tuple comparison *is*
the lexicographic monomial order, and a morphism acts by a cached position map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Union

from .coeff import QQ, Field
from .errors import SchemeMismatch, WidthMismatch
from .oi import FIMorphism, OIMorphism, enumerate_fi, enumerate_oi, oi_images


@dataclass(frozen=True)
class Tensor:
    c: int = 1

    def __post_init__(self):
        if self.c < 1:
            raise ValueError("tensor scheme needs c >= 1")

    def nvars(self, n: int) -> int:
        return self.c * n

    def variables(self, n: int) -> tuple:
        return _tensor_vars(self.c, n)

    def var_index(self, n: int) -> dict:
        return _var_index(self, n)

    def render_var(self, key) -> str:
        return f"x[{key[0]},{key[1]}]"

    def key_width(self, key) -> int:
        return key[1]

    def map_key(self, key, image) -> tuple:
        return (key[0], image[key[1] - 1])

    def map_key_fi(self, key, image) -> tuple:
        return (key[0], image[key[1] - 1])

    def __str__(self):
        return f"tensor {self.c}"


@dataclass(frozen=True)
class DegreeD:
    d: int = 1

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("degree scheme needs d >= 0")

    def nvars(self, n: int) -> int:
        return len(oi_images(self.d, n))

    def variables(self, n: int) -> tuple:
        return oi_images(self.d, n)

    def var_index(self, n: int) -> dict:
        return _var_index(self, n)

    def render_var(self, key) -> str:
        return f"x({','.join(map(str, key))})"

    def key_width(self, key) -> int:
        return key[-1] if key else 0

    def map_key(self, key, image) -> tuple:
        return tuple(image[k - 1] for k in key)

    def map_key_fi(self, key, image) -> tuple:
        # variables of the FI scheme are identified up to reordering of the index tuple
        return tuple(sorted(image[k - 1] for k in key))

    def __str__(self):
        return f"degree {self.d}"


Scheme = Union[Tensor, DegreeD]


@lru_cache(maxsize=None)
def _tensor_vars(c: int, n: int) -> tuple:
    return tuple((i, j) for i in range(1, c + 1) for j in range(1, n + 1))


@lru_cache(maxsize=None)
def _var_index(scheme, n: int) -> dict:
    return {key: pos for pos, key in enumerate(scheme.variables(n))}


@lru_cache(maxsize=65536)
def push_table(scheme, m: int, image: tuple, n: int, fi: bool = False) -> tuple:
    """Target position of every width-``m`` variable under the morphism ``image``."""
    target = scheme.var_index(n)
    mapper = scheme.map_key_fi if fi else scheme.map_key
    return tuple(target[mapper(key, image)] for key in scheme.variables(m))


def push_exps(exps: tuple, table: tuple, nvars: int) -> tuple:
    out = [0] * nvars
    for pos, e in enumerate(exps):
        if e:
            out[table[pos]] = e
    return tuple(out)


def _check_morphism(eps, width: int):
    if eps.source != width:
        raise WidthMismatch(f"{eps} does not start at width {width}")


@dataclass(frozen=True)
class RingMonomial:
    scheme: Scheme
    width: int
    exps: tuple

    def __post_init__(self):
        if len(self.exps) != self.scheme.nvars(self.width):
            raise WidthMismatch(
                f"exponent vector of length {len(self.exps)} does not fit {self.scheme} at width {self.width}"
            )

    @classmethod
    def one(cls, scheme: Scheme, width: int) -> "RingMonomial":
        return cls(scheme, width, (0,) * scheme.nvars(width))

    @classmethod
    def from_exponents(cls, scheme: Scheme, width: int, exponents: dict) -> "RingMonomial":
        index = scheme.var_index(width)
        exps = [0] * scheme.nvars(width)
        for key, e in exponents.items():
            key = tuple(key)
            if key not in index:
                raise WidthMismatch(f"variable {scheme.render_var(key)} does not live at width {width}")
            exps[index[key]] += e
        return cls(scheme, width, tuple(exps))

    @property
    def exponents(self) -> dict:
        """Sparse view ``{variable key: exponent}`` of the nonzero exponents."""
        keys = self.scheme.variables(self.width)
        return {keys[p]: e for p, e in enumerate(self.exps) if e}

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def _same_ring(self, other: "RingMonomial"):
        if self.scheme != other.scheme:
            raise SchemeMismatch(f"{self.scheme} vs {other.scheme}")
        if self.width != other.width:
            raise WidthMismatch(f"width {self.width} vs {other.width}")

    def __mul__(self, other: "RingMonomial") -> "RingMonomial":
        self._same_ring(other)
        return RingMonomial(self.scheme, self.width, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "RingMonomial") -> bool:
        self._same_ring(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __truediv__(self, other: "RingMonomial") -> "RingMonomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return RingMonomial(self.scheme, self.width, tuple(a - b for a, b in zip(self.exps, other.exps)))

    def apply(self, eps) -> "RingMonomial":
        return apply_morphism_ring(eps, self)

    def __str__(self):
        return render_exps(self.scheme, self.width, self.exps)


def render_exps(scheme: Scheme, width: int, exps: tuple) -> str:
    keys = scheme.variables(width)
    parts = []
    for p, e in enumerate(exps):
        if e:
            v = scheme.render_var(keys[p])
            parts.append(v if e == 1 else f"{v}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """An element of the width-``n`` ring of a scheme: ``{exps: coefficient}``."""

    __slots__ = ("scheme", "width", "field", "terms")

    def __init__(self, scheme: Scheme, width: int, terms: Optional[dict] = None, field: Field = QQ):
        self.scheme = scheme
        self.width = width
        self.field = field
        nv = scheme.nvars(width)
        clean = {}
        for exps, c in (terms or {}).items():
            if isinstance(exps, RingMonomial):
                exps = exps.exps
            if len(exps) != nv:
                raise WidthMismatch(f"monomial of length {len(exps)} at width {width}")
            c = field(c)
            if not field.is_zero(c):
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, scheme, width, terms, field) -> "Polynomial":
        p = cls.__new__(cls)
        p.scheme, p.width, p.field, p.terms = scheme, width, field, terms
        return p

    @classmethod
    def monomial(cls, mono: RingMonomial, coeff=1, field: Field = QQ) -> "Polynomial":
        return cls(mono.scheme, mono.width, {mono.exps: coeff}, field)

    @classmethod
    def constant(cls, scheme: Scheme, width: int, value=1, field: Field = QQ) -> "Polynomial":
        return cls(scheme, width, {(0,) * scheme.nvars(width): value}, field)

    def _check(self, other: "Polynomial"):
        if self.scheme != other.scheme:
            raise SchemeMismatch(f"{self.scheme} vs {other.scheme}")
        if self.width != other.width:
            raise WidthMismatch(f"width {self.width} vs {other.width}")

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> Iterator[RingMonomial]:
        for exps in self.terms:
            yield RingMonomial(self.scheme, self.width, exps)

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = F.add(out[e], c) if e in out else c
            if F.is_zero(v):
                out.pop(e, None)
            else:
                out[e] = v
        return Polynomial._raw(self.scheme, self.width, out, F)

    def __neg__(self) -> "Polynomial":
        F = self.field
        return Polynomial._raw(self.scheme, self.width, {e: F.neg(c) for e, c in self.terms.items()}, F)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, a) -> "Polynomial":
        F = self.field
        a = F(a)
        if F.is_zero(a):
            return Polynomial._raw(self.scheme, self.width, {}, F)
        return Polynomial._raw(self.scheme, self.width, {e: F.mul(a, c) for e, c in self.terms.items()}, F)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        F = self.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = F.add(out[e], F.mul(c1, c2)) if e in out else F.mul(c1, c2)
                if F.is_zero(v):
                    out.pop(e, None)
                else:
                    out[e] = v
        return Polynomial._raw(self.scheme, self.width, out, F)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.scheme, self.width, self.terms) == (other.scheme, other.width, other.terms)

    def __hash__(self):
        return hash((self.scheme, self.width, frozenset(self.terms.items())))

    def apply(self, eps) -> "Polynomial":
        return apply_morphism_ring(eps, self)

    def __str__(self):
        from .textio import render_polynomial

        return render_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self}, width={self.width})"


def apply_morphism_ring(eps: Union[OIMorphism, FIMorphism], f):
    """``eps^*`` on a monomial or polynomial; FI-morphisms use the FI action."""
    width = f.width
    _check_morphism(eps, width)
    fi = isinstance(eps, FIMorphism)
    table = push_table(f.scheme, width, eps.image, eps.target, fi)
    nv = f.scheme.nvars(eps.target)
    if isinstance(f, RingMonomial):
        return RingMonomial(f.scheme, eps.target, push_exps(f.exps, table, nv))
    terms = {}
    F = f.field
    for exps, c in f.terms.items():
        e = push_exps(exps, table, nv)
        terms[e] = F.add(terms[e], c) if e in terms else c
    return Polynomial(f.scheme, eps.target, terms, F)


def _divide_witnesses(mu: RingMonomial, nu: RingMonomial, morphisms) -> Iterator[tuple]:
    if mu.scheme != nu.scheme:
        raise SchemeMismatch(f"{mu.scheme} vs {nu.scheme}")
    nv = nu.scheme.nvars(nu.width)
    v = nu.exps
    for eps in morphisms:
        table = push_table(mu.scheme, mu.width, eps.image, nu.width, isinstance(eps, FIMorphism))
        img = push_exps(mu.exps, table, nv)
        if all(a <= b for a, b in zip(img, v)):
            yield eps, RingMonomial(nu.scheme, nu.width, tuple(b - a for a, b in zip(img, v)))


def oi_divides_ring(mu: RingMonomial, nu: RingMonomial, all_witnesses: bool = False):
    """First ``(eps, cofactor)`` with ``nu = eps^*(mu) * cofactor``, or ``None``.

    With ``all_witnesses`` the full list (possibly empty) is returned instead.
    """
    gen = _divide_witnesses(mu, nu, enumerate_oi(mu.width, nu.width))
    if all_witnesses:
        return list(gen)
    return next(gen, None)


def fi_divides_ring(mu: RingMonomial, nu: RingMonomial, all_witnesses: bool = False):
    gen = _divide_witnesses(mu, nu, enumerate_fi(mu.width, nu.width))
    if all_witnesses:
        return list(gen)
    return next(gen, None)


def in_veronese(f: Union[Polynomial, RingMonomial], e: int) -> bool:
    if e < 1:
        raise ValueError("Veronese index must be positive")
    if isinstance(f, RingMonomial):
        return f.degree % e == 0
    return all(sum(exps) % e == 0 for exps in f.terms)


def row_masses(mu: RingMonomial) -> tuple:
    if not isinstance(mu.scheme, Tensor):
        raise SchemeMismatch("row masses need the tensor scheme")
    n = mu.width
    return tuple(sum(mu.exps[i * n:(i + 1) * n]) for i in range(mu.scheme.c))


def in_segre(mu: RingMonomial, c: Optional[int] = None) -> bool:
    """True iff every row ``i in [c]`` carries the same total exponent."""
    if not isinstance(mu.scheme, Tensor) or (c is not None and c != mu.scheme.c):
        raise SchemeMismatch("Segre membership needs the tensor scheme with matching c")
    return len(set(row_masses(mu))) <= 1


def cycle_monomial(i: int) -> RingMonomial:
    """``x_{(1,2)} x_{(2,3)} ... x_{(i-1,i)} x_{(1,i)}`` in the degree-2 scheme at width ``i``."""
    if i < 3:
        raise ValueError("cycles need at least three vertices")
    edges = {(k, k + 1): 1 for k in range(1, i)}
    edges[(1, i)] = 1
    return RingMonomial.from_exponents(DegreeD(2), i, edges)


def monomials_of_degree(scheme: Scheme, width: int, degree: int) -> list:
    """All exponent tuples of a given total degree, in decreasing lex order."""
    nv = scheme.nvars(width)
    return list(_compositions(degree, nv))


def _compositions(total: int, parts: int) -> Iterable[tuple]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest

