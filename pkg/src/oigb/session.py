"""Session files: flat ``key = value`` text describing one computation.

Recognised keys::

    field            = Q | Fp(7)
    scheme           = tensor 1 | degree 2
    signature        = 0:0, 1:-1          (slot d:shift, comma separated)
    order            = paper_lex | paper_deglex
    flavor           = oi | fi
    generator@2      = x[1,1]*x[1,2]      (repeatable; the number is the width)
    generators_file  = gens.txt           (element file, relative to the session)
    max_width, lookahead, widths, max_p, min_consecutive, jobs

Lines starting with ``#`` are comments.  Unknown keys are an error so that
typos do not silently fall back to defaults.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .coeff import Field, field_from_spec, field_spec
from .errors import OIGBError, ParseError
from .groebner import GeneratorSet
from .module import FreeSignature
from .ordering import DEFAULT_ORDER, ORDERS
from .textio import parse_element, parse_element_file, parse_scheme, parse_signature

DEFAULTS = {
    "field": "Q",
    "scheme": "tensor 1",
    "signature": "0:0",
    "order": DEFAULT_ORDER.name,
    "flavor": "oi",
    "max_width": 8,
    "lookahead": 2,
    "widths": "1..5",
    "max_p": 3,
    "min_consecutive": 3,
}
INT_KEYS = {"max_width", "lookahead", "max_p", "min_consecutive", "jobs"}
KNOWN = set(DEFAULTS) | {"generators_file", "jobs"}


def parse_range(text: str) -> list:
    """``"1..5"``, ``"2,3,7"`` or a single integer."""
    text = str(text).strip()
    m = re.fullmatch(r"(-?\d+)\s*\.\.\s*(-?\d+)", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise ParseError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise ParseError(f"not a range: {text!r}") from None


@dataclass
class Session:
    values: dict = dc_field(default_factory=dict)
    generator_lines: list = dc_field(default_factory=list)   # (width, text)
    base_dir: str = "."

    def get(self, key: str):
        return self.values.get(key, DEFAULTS.get(key))

    def override(self, **flags) -> "Session":
        """Flags beat the session file; ``None`` means not given."""
        vals = dict(self.values)
        for k, v in flags.items():
            if v is not None:
                vals[k] = v
        return Session(vals, list(self.generator_lines), self.base_dir)

    # resolved pieces --------------------------------------------------------

    @property
    def field(self) -> Field:
        return field_from_spec(str(self.get("field")))

    @property
    def scheme(self):
        return parse_scheme(str(self.get("scheme")))

    @property
    def signature(self) -> FreeSignature:
        return parse_signature(str(self.get("signature")), self.scheme)

    @property
    def order(self) -> str:
        name = str(self.get("order"))
        if name not in ORDERS:
            raise ParseError(f"unknown order {name!r}; known: {', '.join(sorted(ORDERS))}")
        return name

    @property
    def flavor(self) -> str:
        fl = str(self.get("flavor")).lower()
        if fl not in ("oi", "fi"):
            raise ParseError(f"flavor must be oi or fi, not {fl!r}")
        return fl

    def int(self, key: str) -> int:
        try:
            return int(self.get(key))
        except (TypeError, ValueError):
            raise ParseError(f"{key} must be an integer") from None

    def generators(self) -> GeneratorSet:
        sig, F, fi = self.signature, self.field, self.flavor == "fi"
        gens = []
        path = self.values.get("generators_file")
        if path:
            full = path if os.path.isabs(path) else os.path.join(self.base_dir, path)
            try:
                with open(full, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ParseError(f"cannot read generators file {path!r}: {exc}") from exc
            gens.extend(parse_element_file(text, sig, F, fi=fi))
        for width, text in self.generator_lines:
            gens.append(parse_element(text, sig, width, F, fi))
        try:
            return GeneratorSet(sig, gens, self.flavor)
        except OIGBError as exc:
            raise ParseError(str(exc)) from exc

    def resolved(self, keys) -> dict:
        """The configuration actually used, for echoing into outputs."""
        out = {"field": field_spec(self.field), "scheme": str(self.scheme),
               "signature": str(self.signature), "order": self.order, "flavor": self.flavor}
        for k in keys:
            out[k] = self.int(k) if k in INT_KEYS else self.get(k)
        if self.generator_lines:
            out["generators"] = [{"width": w, "element": t} for w, t in self.generator_lines]
        if self.values.get("generators_file"):
            out["generators_file"] = self.values["generators_file"]
        return out

    def validate(self) -> "Session":
        """Parse every field once so errors surface before any computation."""
        for attr in ("field", "signature", "order", "flavor"):
            getattr(self, attr)
        for k in INT_KEYS & set(self.values):
            self.int(k)
        self.generators()
        return self


def parse_session(text: str, base_dir: str = ".") -> Session:
    values, gens = {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"session line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        m = re.fullmatch(r"generator@(\d+)", key)
        if m:
            gens.append((int(m.group(1)), value))
            continue
        if key not in KNOWN:
            raise ParseError(f"session line {lineno}: unknown key {key!r}")
        values[key] = value
    return Session(values, gens, base_dir)


def load_session(path: Optional[str]) -> Session:
    if path is None:
        return Session()
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read session {path!r}: {exc}") from exc
    return parse_session(text, os.path.dirname(os.path.abspath(path)))

