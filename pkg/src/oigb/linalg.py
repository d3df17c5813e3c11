"""Sparse exact row echelon form over a coefficient field.

Vectors are dicts ``{column index: nonzero field element}``.  The pivot of a
row is its smallest column index.
"""

from __future__ import annotations

from typing import Iterable

from .coeff import Field


class Echelon:
    """Incrementally maintained echelon basis of a row space."""

    def __init__(self, field: Field):
        self.field = field
        self.pivots: dict = {}

    def reduce(self, vec: dict) -> dict:
        F = self.field
        v = dict(vec)
        while v:
            col = min(v)
            row = self.pivots.get(col)
            if row is None:
                return v
            c = v[col]
            for k, a in row.items():
                x = F.sub(v[k], F.mul(c, a)) if k in v else F.neg(F.mul(c, a))
                if F.is_zero(x):
                    v.pop(k, None)
                else:
                    v[k] = x
        return v

    def add(self, vec: dict) -> bool:
        """Insert a row; return whether it enlarged the row space."""
        v = self.reduce(vec)
        if not v:
            return False
        F = self.field
        col = min(v)
        inv = F.inverse(v[col])
        self.pivots[col] = {k: F.mul(inv, a) for k, a in v.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(rows: Iterable[dict], field: Field) -> int:
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    return ech.rank


def pivot_columns(rows: Iterable[dict], field: Field) -> set:
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    return set(ech.pivots)
