"""Graded free resolutions at a fixed width and the resulting Betti tables.

At width ``n`` the module ``P_n^{sig} / <images of B>`` is resolved by
iterated syzygy computation.  A free module in the chain is described by the
internal degrees of its basis elements; a differential ``d_p: F_p -> F_{p-1}``
is a list of columns, column ``i`` being the image of the ``i``-th basis
element written as a vector ``{(row, exps): coefficient}``.

Syzygies of ``h_1, ..., h_t`` come from one Groebner basis of the vectors
``h_i + e_i`` in ``F (+) P^t`` under a position-over-term order that puts every
``F``-component above every ``e``-component: the basis elements with no
``F``-part generate the syzygy module.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable, Optional, Sequence

from .coeff import QQ, Field
from .engine import Buchberger, Engine
from .errors import InsufficientData, NonHomogeneous
from .groebner import as_generator_set, images_at_width
from .linalg import Echelon
from .ordering import DEFAULT_ORDER, get_order
from .polyring import _compositions

SCHEMA_VERSION = 1


def _vec_degree(v: dict, degrees: Sequence[int]) -> int:
    (row, e) = next(iter(v))
    return degrees[row] + sum(e)


def _minimal_generators(vectors: list, degrees: Sequence[int], engine: Engine) -> list:
    """A minimal homogeneous generating subset, scanned in increasing degree."""
    vectors = sorted((v for v in vectors if v), key=lambda v: _vec_degree(v, degrees))
    bb = Buchberger(engine)
    kept = []
    for v in vectors:
        if engine.reduce(v, bb.basis):
            kept.append(v)
            bb.add([v])
    return kept


def _syzygies(columns: list, nvars: int, engine: Engine) -> list:
    """Generators of the syzygy module of ``columns`` (vectors over ``degrees``)."""
    zero = (0,) * nvars
    lifted = []
    for i, col in enumerate(columns):
        v = {((1, row), e): c for (row, e), c in col.items()}
        v[((0, i), zero)] = engine.field.one()
        lifted.append(v)
    bb = Buchberger(engine)
    bb.add(lifted)
    out = []
    for g in bb.reduced():
        if all(comp[0] == 0 for comp, _ in g):
            out.append({(comp[1], e): c for (comp, e), c in g.items()})
    return out


@dataclass
class WidthResolution:
    width: int
    field: Field
    nvars: int
    degrees: list                       # degrees[p]: internal degrees of the basis of F_p
    maps: list                          # maps[p]: columns of d_p (maps[0] is empty)
    minimal: bool = False
    quotient: bool = True

    @property
    def length(self) -> int:
        top = 0
        for p, d in enumerate(self.degrees):
            if d:
                top = p
        return top

    def shifts(self, p: int) -> list:
        return sorted(self.degrees[p]) if p < len(self.degrees) else []

    def betti(self) -> dict:
        """``{(p, j): beta_{p,j}}`` (meaningful once minimal)."""
        out: dict = {}
        for p, degs in enumerate(self.degrees):
            for j in degs:
                out[(p, j)] = out.get((p, j), 0) + 1
        return out

    def has_unit_entries(self) -> bool:
        return any(not any(e) for cols in self.maps for col in cols for (_, e) in col)

    def compose_is_zero(self) -> bool:
        eng = Engine(self.field)
        for p in range(1, len(self.maps) - 1):
            lower, upper = self.maps[p], self.maps[p + 1]
            for col in upper:
                acc: dict = {}
                for (k, e), c in col.items():
                    eng.axpy(acc, self.field.neg(c), e, lower[k])
                if acc:
                    return False
        return True

    def homology(self, max_degree: int) -> dict:
        """``{(p, j): dim H_p}`` of the chain in internal degrees ``j <= max_degree``, nonzero only."""
        out = {}
        for j in range(max_degree + 1):
            ranks = [_degree_rank(self, p, j) for p in range(len(self.degrees) + 1)]
            for p in range(len(self.degrees)):
                dim = _free_dim(self.degrees[p], j, self.nvars)
                h = dim - ranks[p] - ranks[p + 1]
                if h:
                    out[(p, j)] = h
        return out


def _free_dim(degrees: Sequence[int], j: int, nvars: int) -> int:
    return sum(comb(j - d + nvars - 1, nvars - 1) if nvars else int(j == d) for d in degrees if j >= d)


def _degree_rank(res: WidthResolution, p: int, j: int) -> int:
    """Rank of ``d_p`` restricted to internal degree ``j``."""
    if p == 0 or p >= len(res.maps):
        return 0
    cols, degs = res.maps[p], res.degrees[p]
    ech = Echelon(res.field)
    index: dict = {}
    for i, col in enumerate(cols):
        for m in _compositions(j - degs[i], res.nvars) if j >= degs[i] else ():
            row = {}
            for (k, e), c in col.items():
                key = (k, tuple(a + b for a, b in zip(e, m)))
                row[index.setdefault(key, len(index))] = c
            ech.add(row)
    return ech.rank


def minimalize(res: WidthResolution) -> WidthResolution:
    """Split off trivial pieces ``0 -> P(-j) -> P(-j) -> 0`` until no differential has a unit entry."""
    F = res.field
    eng = Engine(F)
    degrees = [list(d) for d in res.degrees]
    maps = [[dict(c) for c in cols] for cols in res.maps]
    for p in range(1, len(maps)):
        while True:
            hit = None
            for i, col in enumerate(maps[p]):
                for (row, e), c in sorted(col.items()):
                    if not any(e):
                        hit = (i, row, c)
                        break
                if hit:
                    break
            if hit is None:
                break
            i, j, c = hit
            pivot = maps[p][i]
            inv = F.inverse(c)
            for k, col in enumerate(maps[p]):
                if k == i:
                    continue
                entries = {e: a for (row, e), a in col.items() if row == j}
                for e, a in entries.items():
                    eng.axpy(col, F.mul(a, inv), e, pivot)
            del maps[p][i]
            del degrees[p][i]
            maps[p] = [_drop_row(col, j) for col in maps[p]]
            degrees[p - 1].pop(j)
            if p - 1 >= 1:
                del maps[p - 1][j]
            if p + 1 < len(maps):
                maps[p + 1] = [_drop_row(col, i) for col in maps[p + 1]]
    return WidthResolution(res.width, F, res.nvars, degrees, maps, True, res.quotient)


def _drop_row(col: dict, row: int) -> dict:
    return {(r - (r > row), e): c for (r, e), c in col.items() if r != row}


def width_resolution(B, n: int, max_p: int, order=DEFAULT_ORDER, quotient: bool = True,
                     prune: bool = True) -> WidthResolution:
    """Minimal graded free resolution at width ``n`` up to homological degree ``max_p``.

    With ``quotient=True`` the module resolved is ``F/M`` (``F_0`` is the
    ambient free module); otherwise the submodule ``M`` itself.  ``prune``
    keeps only minimal generators at every step; without it the raw syzygies
    are kept and the result is minimalized by unit elimination alone.
    """
    order = get_order(order)
    gs = as_generator_set(B)
    sig = gs.signature
    F = gs.field or QQ
    comps = sig.basis(n)
    comp_index = {c: k for k, c in enumerate(comps)}
    ambient = [sig.shift(slot) for slot, _ in comps]
    nvars = sig.scheme.nvars(n)
    ring_key = None if order.is_lex else order.ring_key
    engine = Engine(F, ring_key)

    cols = []
    for g in images_at_width(gs.generators, n):
        if not g.is_homogeneous():
            raise NonHomogeneous(f"generator {g} is not homogeneous")
        cols.append({(comp_index[(s, b)], e): c for (s, b, e), c in g.terms.items()})
    if prune:
        cols = _minimal_generators(cols, ambient, engine)
    else:
        cols = _distinct(cols)

    top = max_p + (0 if quotient else 1) + (0 if prune else 1)
    degrees = [ambient]
    maps: list = [[]]
    while cols and len(degrees) <= top:
        degs = [_vec_degree(c, degrees[-1]) for c in cols]
        degrees.append(degs)
        maps.append(cols)
        if len(degrees) > top:
            break
        syz = _syzygies(cols, nvars, Engine(F, ring_key))
        cols = _minimal_generators(syz, degs, engine) if prune else syz
    res = minimalize(WidthResolution(n, F, nvars, degrees, maps, False, True))
    if not quotient:
        res = WidthResolution(n, F, nvars, res.degrees[1:] or [[]], [[]] + res.maps[2:], True, False)
    limit = max_p + 1
    res.degrees, res.maps = res.degrees[:limit], res.maps[:limit]
    return res


def _distinct(cols: list) -> list:
    seen, out = set(), []
    for c in cols:
        key = frozenset(c.items())
        if c and key not in seen:
            seen.add(key)
            out.append(c)
    return out


# -- Betti tables ------------------------------------------------------------------

@dataclass
class BettiTable:
    entries: dict = dc_field(default_factory=dict)   # (n, p, j) -> beta
    widths: list = dc_field(default_factory=list)
    max_p: int = 0

    def get(self, n: int, p: int, j: int) -> int:
        return self.entries.get((n, p, j), 0)

    def degrees(self, n: int, p: int) -> list:
        return sorted(j for (m, q, j), b in self.entries.items() if m == n and q == p and b)

    def total(self, n: int, p: int) -> int:
        return sum(b for (m, q, _), b in self.entries.items() if m == n and q == p)

    def to_json(self) -> dict:
        rows = [{"n": n, "p": p, "j": j, "beta": b} for (n, p, j), b in sorted(self.entries.items()) if b]
        return {"schema_version": SCHEMA_VERSION, "widths": list(self.widths), "max_p": self.max_p,
                "entries": rows}

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        entries = {(r["n"], r["p"], r["j"]): r["beta"] for r in data.get("entries", [])}
        widths = data.get("widths") or sorted({n for n, _, _ in entries})
        return cls(entries, list(widths), data.get("max_p", max((p for _, p, _ in entries), default=0)))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def render(self) -> str:
        """Human-readable table: one block per width, rows ``j``, columns ``p``."""
        lines = []
        for n in self.widths:
            js = sorted({j for (m, _, j) in self.entries if m == n})
            lines.append(f"width {n}")
            lines.append("      " + "".join(f"{p:>6}" for p in range(self.max_p + 1)))
            for j in js:
                cells = "".join(f"{self.get(n, p, j) or '.':>6}" for p in range(self.max_p + 1))
                lines.append(f"{j:>6}" + cells)
        return "\n".join(lines)


def _one_width(args):
    B, n, max_p, order, quotient = args
    res = width_resolution(B, n, max_p, order, quotient)
    return n, res.betti()


def _jobs(jobs: Optional[int]) -> int:
    if jobs is None:
        jobs = int(os.environ.get("OIGB_JOBS", "1") or 1)
    return max(1, jobs)


def betti_table(B, widths: Iterable[int], max_p: int, order=DEFAULT_ORDER, quotient: bool = True,
                jobs: Optional[int] = None) -> BettiTable:
    """Graded Betti numbers of the width-``n`` modules for each ``n`` in ``widths``."""
    gs = as_generator_set(B)
    widths = sorted(set(widths))
    if not widths:
        raise InsufficientData("no widths requested")
    order_name = get_order(order).name
    tasks = [(gs, n, max_p, order_name, quotient) for n in widths]
    workers = min(_jobs(jobs), len(tasks))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_one_width, tasks))
    else:
        results = [_one_width(t) for t in tasks]
    entries = {}
    for n, betti in results:
        for (p, j), b in betti.items():
            entries[(n, p, j)] = b
    return BettiTable(entries, widths, max_p)
