"""Classical module Buchberger at a single width.

Vectors are dicts ``{(comp, exps): coefficient}`` over a free module whose
components ``comp`` are arbitrary mutually comparable keys.  The term order
is position-over-term: ``(comp, ring_key(exps))``.
"""

from __future__ import annotations

import heapq
from typing import Callable, Iterable, Optional

from .coeff import Field


def _identity(e):
    return e


class Engine:
    def __init__(self, field: Field, ring_key: Optional[Callable] = None):
        self.field = field
        self.ring_key = ring_key or _identity
        self._plain = ring_key is None or ring_key is _identity

    def tkey(self, t):
        return (t[0], self.ring_key(t[1]))

    def lead(self, f: dict):
        if self._plain:
            return max(f)
        return max(f, key=self.tkey)

    def monic(self, f: dict) -> dict:
        F = self.field
        c = f[self.lead(f)]
        if F.is_one(c):
            return f
        inv = F.inverse(c)
        return {t: F.mul(inv, a) for t, a in f.items()}

    def axpy(self, f: dict, c, shift: tuple, g: dict) -> None:
        """``f -= c * x^shift * g`` in place."""
        F = self.field
        for (comp, e), a in g.items():
            t = (comp, tuple(x + y for x, y in zip(e, shift)))
            v = F.sub(f[t], F.mul(c, a)) if t in f else F.neg(F.mul(c, a))
            if F.is_zero(v):
                f.pop(t, None)
            else:
                f[t] = v

    def reduce(self, f: dict, basis: "Basis", full: bool = True) -> dict:
        """Remainder of ``f`` modulo the (monic) elements of ``basis``."""
        f = dict(f)
        rem: dict = {}
        while f:
            t = self.lead(f)
            hit = basis.divisor(t)
            if hit is None:
                if not full:
                    rem.update(f)
                    return rem
                rem[t] = f.pop(t)
                continue
            g, lm = hit
            shift = tuple(x - y for x, y in zip(t[1], lm[1]))
            self.axpy(f, f[t], shift, g)
        return rem

    def spoly(self, f: dict, g: dict, lf, lg) -> dict:
        lcm = tuple(max(a, b) for a, b in zip(lf[1], lg[1]))
        s: dict = {}
        self.axpy(s, self.field.neg(self.field.one()), tuple(a - b for a, b in zip(lcm, lf[1])), f)
        self.axpy(s, self.field.one(), tuple(a - b for a, b in zip(lcm, lg[1])), g)
        return s


class Basis:
    """Monic elements with their leading terms, indexed by component."""

    def __init__(self):
        self.elems: list = []
        self.leads: list = []
        self.by_comp: dict = {}

    def append(self, g: dict, lm) -> int:
        k = len(self.elems)
        self.elems.append(g)
        self.leads.append(lm)
        self.by_comp.setdefault(lm[0], []).append(k)
        return k

    def divisor(self, t):
        e = t[1]
        for k in self.by_comp.get(t[0], ()):
            lm = self.leads[k]
            if all(a <= b for a, b in zip(lm[1], e)):
                return self.elems[k], lm
        return None

    def __len__(self):
        return len(self.elems)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


class Buchberger:
    """Incremental Buchberger with the normal selection strategy.

    ``add`` reduces a new vector against the current basis and completes;
    after every call ``basis`` is a Groebner basis of everything added.
    """

    def __init__(self, engine: Engine):
        self.engine = engine
        self.basis = Basis()
        self._pairs: list = []
        self._pending: set = set()
        self._single_comp = True
        self._comps: set = set()

    def _pair_key(self, i, j):
        li, lj = self.basis.leads[i], self.basis.leads[j]
        lcm = tuple(max(a, b) for a, b in zip(li[1], lj[1]))
        return (sum(lcm), self.engine.tkey((li[0], lcm)), i, j), lcm

    def _insert(self, g: dict) -> None:
        eng = self.engine
        g = eng.monic(g)
        lm = eng.lead(g)
        for t in g:
            self._comps.add(t[0])
        self._single_comp = len(self._comps) == 1
        k = self.basis.append(g, lm)
        for i in range(k):
            if self.basis.leads[i][0] == lm[0]:
                key, _ = self._pair_key(i, k)
                heapq.heappush(self._pairs, key)
                self._pending.add((i, k))

    def _chain_skip(self, i, j, lcm) -> bool:
        comp = self.basis.leads[i][0]
        for k in self.basis.by_comp.get(comp, ()):
            if k in (i, j):
                continue
            if not _divides(self.basis.leads[k][1], lcm):
                continue
            if (min(i, k), max(i, k)) not in self._pending and (min(j, k), max(j, k)) not in self._pending:
                return True
        return False

    def add(self, vectors: Iterable[dict]) -> list:
        """Add vectors; return the indices of basis elements they produced."""
        new = []
        eng = self.engine
        for v in vectors:
            r = eng.reduce(v, self.basis)
            if r:
                new.append(len(self.basis))
                self._insert(r)
        self._complete()
        return new

    def _complete(self) -> None:
        eng = self.engine
        while self._pairs:
            _, _, i, j = heapq.heappop(self._pairs)
            self._pending.discard((i, j))
            li, lj = self.basis.leads[i], self.basis.leads[j]
            lcm = tuple(max(a, b) for a, b in zip(li[1], lj[1]))
            if self._single_comp and all(a == 0 or b == 0 for a, b in zip(li[1], lj[1])):
                continue
            if self._chain_skip(i, j, lcm):
                continue
            s = eng.spoly(self.basis.elems[i], self.basis.elems[j], li, lj)
            r = eng.reduce(s, self.basis)
            if r:
                self._insert(r)

    def reduced(self) -> list:
        """The reduced Groebner basis, sorted by leading term."""
        eng = self.engine
        b = self.basis
        keep = []
        for k, lm in enumerate(b.leads):
            redundant = False
            for i, other in enumerate(b.leads):
                if i == k or other[0] != lm[0] or not _divides(other[1], lm[1]):
                    continue
                if other[1] != lm[1] or i < k:
                    redundant = True
                    break
            if not redundant:
                keep.append(k)
        mini = Basis()
        for k in keep:
            mini.append(b.elems[k], b.leads[k])
        out = []
        for pos, k in enumerate(keep):
            g = b.elems[k]
            lm = b.leads[k]
            tail = {t: c for t, c in g.items() if t != lm}
            others = Basis()
            for q, k2 in enumerate(keep):
                if q != pos:
                    others.append(b.elems[k2], b.leads[k2])
            r = eng.reduce(tail, others)
            r[lm] = g[lm]
            out.append(r)
        out.sort(key=lambda f: eng.tkey(eng.lead(f)))
        return out


def groebner(vectors: Iterable[dict], field: Field, ring_key: Optional[Callable] = None) -> list:
    bb = Buchberger(Engine(field, ring_key))
    bb.add(list(vectors))
    return bb.reduced()
