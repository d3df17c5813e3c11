"""Brute-force reference computations used only to check the main algorithms.

Nothing here prunes or shares code paths with the engine's division and
completion routines: divisibility is decided by trying every OI-morphism, and
initial modules are read off row-reduced Macaulay matrices.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import NonHomogeneous, WidthTooLarge
from .module import FreeSignature, ModuleElement, ModuleMonomial, apply_morphism_mod
from .oi import enumerate_oi, oi_images
from .ordering import DEFAULT_ORDER, get_order
from .polyring import monomials_of_degree

MAX_ORACLE_WIDTH = 8


@lru_cache(maxsize=None)
def _pushed(scheme, m: int, n: int, exps: tuple) -> tuple:
    """``(image, pushed exponents)`` for every OI-morphism ``[m] -> [n]``, variable by variable."""
    src = scheme.variables(m)
    dst = {key: pos for pos, key in enumerate(scheme.variables(n))}
    out = []
    for eps in enumerate_oi(m, n):
        v = [0] * len(dst)
        for key, e in zip(src, exps):
            if e:
                v[dst[scheme.map_key(key, eps.image)]] += e
        out.append((eps.image, tuple(v)))
    return tuple(out)


def divisibility_by_enumeration(mu: ModuleMonomial, nu: ModuleMonomial) -> bool:
    """``mu |_OI nu`` by trying every ``eps: [m] -> [n]``."""
    m, n = mu.width, nu.width
    if max(m, n) > MAX_ORACLE_WIDTH:
        raise WidthTooLarge(f"oracle limited to widths <= {MAX_ORACLE_WIDTH}")
    if mu.slot != nu.slot:
        return False
    for image, v in _pushed(mu.scheme, m, n, mu.exps):
        if tuple(image[b - 1] for b in mu.basis) != nu.basis:
            continue
        if all(a <= b for a, b in zip(v, nu.exps)):
            return True
    return False


def divisibility_by_membership(mu: ModuleMonomial, nu: ModuleMonomial) -> bool:
    """Whether ``nu`` is literally one of the monomials ``x^w * F(eps)(mu)``."""
    n = nu.width
    if max(mu.width, n) > MAX_ORACLE_WIDTH:
        raise WidthTooLarge(f"oracle limited to widths <= {MAX_ORACLE_WIDTH}")
    gap = sum(nu.exps) - sum(mu.exps)
    if gap < 0 or mu.slot != nu.slot:
        return False
    cofactors = monomials_of_degree(mu.scheme, n, gap)
    for eps in enumerate_oi(mu.width, n):
        img = mu.apply(eps)
        if img.basis != nu.basis:
            continue
        for w in cofactors:
            if tuple(a + b for a, b in zip(img.exps, w)) == nu.exps:
                return True
    return False


def _module_monomials(signature: FreeSignature, n: int, j: int) -> list:
    out = []
    for slot, s in enumerate(signature.slots):
        r = j - s.shift
        if r < 0 or s.d > n:
            continue
        for basis in oi_images(s.d, n):
            for e in monomials_of_degree(signature.scheme, n, r):
                out.append((slot, basis, e))
    return out


class MacaulayBlock:
    """Degree-``j`` Macaulay matrix of a module at width ``n``.

    Rows are ``x^w * g`` for every generator image ``g`` of degree ``<= j``;
    columns are the degree-``j`` module monomials sorted in decreasing order,
    so the pivot of each reduced row is a leading monomial.
    """

    def __init__(self, images: list, signature: FreeSignature, n: int, j: int, order):
        order = get_order(order)
        self.width, self.degree = n, j
        cols = sorted(_module_monomials(signature, n, j), key=order.term_key, reverse=True)
        self.columns = cols
        index = {t: k for k, t in enumerate(cols)}
        self.rows = []
        field = images[0].field if images else None
        for g in images:
            d = next(iter(g.degrees()))
            if d > j:
                continue
            for w in monomials_of_degree(signature.scheme, n, j - d):
                row = {}
                for (s, b, e), c in g.terms.items():
                    row[index[(s, b, tuple(x + y for x, y in zip(e, w)))]] = c
                self.rows.append(row)
        self.pivots = _row_reduce(self.rows, field) if field is not None else []

    def leading_monomials(self) -> set:
        return {self.columns[k] for k in self.pivots}


def _row_reduce(rows: list, field) -> list:
    """Pivot columns of the row space (smallest column index of each echelon row)."""
    echelon: dict = {}
    for r in rows:
        r = dict(r)
        while r:
            k = min(r)
            if k not in echelon:
                inv = field.inverse(r[k])
                echelon[k] = {c: field.mul(inv, a) for c, a in r.items()}
                break
            piv, a = echelon[k], r[k]
            for c, b in piv.items():
                v = field.sub(r.get(c, field.zero()), field.mul(a, b))
                if field.is_zero(v):
                    r.pop(c, None)
                else:
                    r[c] = v
    return sorted(echelon)


def initial_module_by_macaulay(B, n: int, max_degree: int, order=DEFAULT_ORDER) -> set:
    """Monomials of degree ``<= max_degree`` in the initial module of the width-``n`` component."""
    gens = B.to_oi().generators if hasattr(B, "to_oi") else list(B)
    if not gens:
        return set()
    sig = gens[0].signature
    images = []
    for g in gens:
        if not g.is_homogeneous():
            raise NonHomogeneous(f"{g} is not homogeneous")
        if g.width <= n:
            images.extend(apply_morphism_mod(eps, g) for eps in enumerate_oi(g.width, n))
    out = set()
    for j in range(max_degree + 1):
        block = MacaulayBlock(images, sig, n, j, order)
        out |= {ModuleMonomial(sig, n, *t) for t in block.leading_monomials()}
    return out


def initial_module_from_leads(leads: Iterable[ModuleMonomial], signature: FreeSignature, n: int,
                              max_degree: int) -> set:
    """Degree-truncated monomial submodule generated (over ``P_n``) by ``leads``."""
    leads = list(leads)
    out = set()
    for j in range(max_degree + 1):
        for s, b, e in _module_monomials(signature, n, j):
            if any(l.slot == s and l.basis == b and all(x <= y for x, y in zip(l.exps, e)) for l in leads):
                out.add(ModuleMonomial(signature, n, s, b, e))
    return out


def random_submodule_element(gens: list, n: int, rng, terms: int = 3, max_degree: int = 2) -> ModuleElement:
    """A random ``P_n``-combination of OI-images of ``gens`` at width ``n``."""
    usable = [g for g in gens if g.width <= n]
    sig, field = usable[0].signature, usable[0].field
    q = ModuleElement.zero(sig, n, field)
    nv = sig.scheme.nvars(n)
    for _ in range(terms):
        g = rng.choice(usable)
        eps = rng.choice(enumerate_oi(g.width, n))
        e = [0] * nv
        for _ in range(rng.randint(0, max_degree) if nv else 0):
            e[rng.randrange(nv)] += 1
        img = apply_morphism_mod(eps, g)
        shifted = {(s, b, tuple(x + y for x, y in zip(ex, e))): c for (s, b, ex), c in img.terms.items()}
        mono = ModuleElement._raw(sig, n, shifted, field)
        q = q + mono.scale(rng.randint(-3, 3) or 1)
    return q
