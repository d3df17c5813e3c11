"""Empirical stabilization of graded Betti numbers across widths.

For fixed ``p`` the set ``{j : beta_{n,p,j} != 0}`` becomes constant for large
``n``; no effective onset is known, so the detector only reports what the
scanned widths show.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional

from .errors import InsufficientData
from .resolution import SCHEMA_VERSION, BettiTable

STABLE = "Stable"
NOT_YET = "NotYetStable"


@dataclass(frozen=True)
class StabilityEntry:
    p: int
    max_degree: Optional[int]     # m(M, p) over the scanned widths
    degree_set: tuple
    onset: Optional[int]
    status: str
    widths: tuple

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.max_degree, "degree_set": list(self.degree_set),
                "onset": self.onset, "status": self.status, "widths": list(self.widths)}


@dataclass
class StabilizationReport:
    min_consecutive: int
    entries: dict = dc_field(default_factory=dict)   # p -> StabilityEntry

    def to_json(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "min_consecutive": self.min_consecutive,
                "entries": [self.entries[p].to_json() for p in sorted(self.entries)]}


def _trailing_run(widths: list) -> list:
    """The longest suffix of ``widths`` made of consecutive integers."""
    run = [widths[-1]]
    for w in reversed(widths[:-1]):
        if w != run[0] - 1:
            break
        run.insert(0, w)
    return run


def detect(table: BettiTable, p: int, min_consecutive: int = 3) -> StabilityEntry:
    """Stable iff the degree set at ``p`` agrees on the last ``min_consecutive`` widths."""
    if min_consecutive < 1:
        raise ValueError("min_consecutive must be positive")
    widths = sorted(table.widths)
    if not widths:
        raise InsufficientData("the Betti table has no widths")
    sets = {n: tuple(table.degrees(n, p)) for n in widths}
    nonzero = [j for n in widths for j in sets[n]]
    m = max(nonzero) if nonzero else None
    run = _trailing_run(widths)
    last = sets[run[-1]]
    onset = run[-1]
    for n in reversed(run):
        if sets[n] != last:
            break
        onset = n
    constant = run[-1] - onset + 1
    status = STABLE if constant >= min_consecutive else NOT_YET
    return StabilityEntry(p, m, last, onset, status, tuple(widths))


def stabilization_report(table: BettiTable, ps: Iterable[int], min_consecutive: int = 3) -> StabilizationReport:
    report = StabilizationReport(min_consecutive)
    for p in ps:
        report.entries[p] = detect(table, p, min_consecutive)
    return report
