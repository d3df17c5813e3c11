"""Morphisms of the categories OI and FI.

An OI-morphism ``[m] -> [n]`` is stored as its image tuple
``(e(1), ..., e(m))``, strictly increasing; an FI-morphism only needs
distinct entries.  All indices are 1-based, as in ``[n] = {1, ..., n}``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import EmptySource, ParseError, WidthMismatch

MAX_WIDTH = 64


@dataclass(frozen=True)
class OIMorphism:
    source: int
    target: int
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.source:
            raise WidthMismatch(f"image {self.image} does not have length {self.source}")
        if self.target > MAX_WIDTH:
            raise WidthMismatch(f"width {self.target} exceeds cap {MAX_WIDTH}")
        prev = 0
        for a in self.image:
            if not (prev < a <= self.target):
                raise WidthMismatch(f"{self.image} is not strictly increasing into [{self.target}]")
            prev = a

    def __call__(self, j: int) -> int:
        return self.image[j - 1]

    def __str__(self):
        return f"[{self.source}->{self.target}: {','.join(map(str, self.image))}]"

    @property
    def is_identity(self) -> bool:
        return self.source == self.target

    def compose(self, inner: "OIMorphism") -> "OIMorphism":
        """``self o inner``."""
        return compose(self, inner)


@dataclass(frozen=True)
class FIMorphism:
    source: int
    target: int
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.source:
            raise WidthMismatch(f"image {self.image} does not have length {self.source}")
        if len(set(self.image)) != len(self.image) or any(not 1 <= a <= self.target for a in self.image):
            raise WidthMismatch(f"{self.image} is not an injection into [{self.target}]")

    def __call__(self, j: int) -> int:
        return self.image[j - 1]

    def __str__(self):
        return f"[{self.source}->{self.target}: {','.join(map(str, self.image))}]"

    def compose(self, inner: "FIMorphism") -> "FIMorphism":
        if inner.target != self.source:
            raise WidthMismatch(f"cannot compose {self} after {inner}")
        return FIMorphism(inner.source, self.target, tuple(self.image[i - 1] for i in inner.image))

    def is_order_preserving(self) -> bool:
        return all(a < b for a, b in zip(self.image, self.image[1:]))

    def as_oi(self) -> OIMorphism:
        return OIMorphism(self.source, self.target, self.image)


@dataclass(frozen=True)
class IncExtension:
    """The strictly increasing self-map of the positive integers extending ``base``."""

    base: OIMorphism

    def __call__(self, j: int) -> int:
        m = self.base.source
        if j <= m:
            return self.base.image[j - 1]
        return self.base.image[-1] + j - m

    def values(self, count: int) -> tuple[int, ...]:
        return tuple(self(j) for j in range(1, count + 1))

    def restrict(self, n: int) -> OIMorphism:
        """The induced map ``[n] -> [self(n)]``."""
        return OIMorphism(n, self(n) if n else 0, self.values(n))


def compose(outer: OIMorphism, inner: OIMorphism) -> OIMorphism:
    if inner.target != outer.source:
        raise WidthMismatch(f"cannot compose {outer} after {inner}")
    img = outer.image
    return OIMorphism(inner.source, outer.target, tuple(img[i - 1] for i in inner.image))


def iota(m: int, n: int) -> OIMorphism:
    if m > n or m < 0:
        raise WidthMismatch(f"no inclusion [{m}] -> [{n}]")
    return OIMorphism(m, n, tuple(range(1, m + 1)))


def identity(n: int) -> OIMorphism:
    return iota(n, n)


@lru_cache(maxsize=4096)
def _oi_images(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    if m < 0 or n < 0 or m > n:
        return ()
    return tuple(itertools.combinations(range(1, n + 1), m))


def enumerate_oi(m: int, n: int) -> list[OIMorphism]:
    """All OI-morphisms ``[m] -> [n]`` in lexicographic order of images."""
    return [OIMorphism(m, n, img) for img in _oi_images(m, n)]


def oi_images(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Image tuples of :func:`enumerate_oi`, without building morphism objects."""
    return _oi_images(m, n)


def enumerate_fi(m: int, n: int) -> list[FIMorphism]:
    """All injections ``[m] -> [n]`` in lexicographic order of images."""
    if m < 0 or n < 0 or m > n:
        return []
    return [FIMorphism(m, n, img) for img in itertools.permutations(range(1, n + 1), m)]


def fi_factor(pi: FIMorphism) -> tuple[OIMorphism, FIMorphism]:
    """Split ``pi = pi_sorted o sigma`` with ``sigma`` a permutation of ``[d]``."""
    order = sorted(range(pi.source), key=lambda k: pi.image[k])
    sorted_image = tuple(pi.image[k] for k in order)
    # sigma(k) is the rank of pi(k) among the image values
    rank = {pos: r + 1 for r, pos in enumerate(order)}
    sigma = FIMorphism(pi.source, pi.source, tuple(rank[k] for k in range(pi.source)))
    return OIMorphism(pi.source, pi.target, sorted_image), sigma


def inc_extension(eps: OIMorphism) -> IncExtension:
    if eps.source == 0:
        raise EmptySource("the empty morphism has no canonical extension")
    return IncExtension(eps)


_MORPHISM = re.compile(r"^\s*\[\s*(\d+)\s*->\s*(\d+)\s*:\s*([\d\s,]*)\]\s*$")


def parse_morphism(text: str, fi: bool = False):
    m = _MORPHISM.match(text)
    if not m:
        raise ParseError(f"not a morphism: {text!r}")
    src, tgt, body = int(m.group(1)), int(m.group(2)), m.group(3).strip()
    image = tuple(int(t) for t in body.split(",") if t.strip()) if body else ()
    try:
        return (FIMorphism if fi else OIMorphism)(src, tgt, image)
    except WidthMismatch as exc:
        raise ParseError(str(exc)) from exc

