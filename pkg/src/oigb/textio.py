"""Plain-text forms of polynomials, module monomials and module elements.

Grammar (whitespace is ignored between tokens)::

    element  := term (("+" | "-") term)*
    term     := ["+" | "-"] factor ("*"? factor)*
    factor   := number | variable ["^" int] | basis
    number   := int ["/" int]
    variable := "x[" i "," j "]"             tensor scheme
              | "x(" j1 "," ... "," jd ")"   degree-d scheme
    basis    := "e{" [slot ";"] [j1 "," ... ] "}"
    slot     := ["λ=" | "l="] int

A term without a basis factor is allowed when the signature has exactly one
slot and that slot has ``d = 0``; it then means ``e{}``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Optional

from .coeff import QQ, Field
from .errors import OIGBError, ParseError
from .module import FreeSignature, ModuleElement, ModuleMonomial
from .polyring import DegreeD, Polynomial, RingMonomial, Scheme, Tensor, render_exps

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\s*/\s*\d+)?)
  | (?P<tvar>x\[\s*\d+\s*,\s*\d+\s*\])
  | (?P<dvar>x\(\s*[\d\s,]*\))
  | (?P<basis>e\{[^}]*\})
  | (?P<pow>\^\s*\d+)
  | (?P<star>\*)
  | (?P<sign>[+-])
""", re.VERBOSE)


def _tokens(text: str) -> Iterator[tuple]:
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected input at {text[pos:pos + 12]!r}")
        pos = m.end()
        if m.lastgroup != "ws":
            yield m.lastgroup, m.group()
    yield "end", ""


def _ints(body: str) -> tuple:
    body = body.strip()
    if not body:
        return ()
    try:
        return tuple(int(t) for t in body.split(","))
    except ValueError:
        raise ParseError(f"bad index list {body!r}") from None


def _parse_basis(tok: str) -> tuple:
    body = tok[2:-1]
    slot = 0
    if ";" in body:
        head, body = body.split(";", 1)
        head = re.sub(r"^\s*(?:λ|l|slot)\s*=", "", head).strip()
        if not head.isdigit():
            raise ParseError(f"bad slot in {tok!r}")
        slot = int(head)
    return slot, _ints(body)


def _var_key(scheme: Scheme, tok: str) -> tuple:
    inner = _ints(tok[2:-1])
    if len(inner) != (2 if isinstance(scheme, Tensor) else scheme.d):
        raise ParseError(f"{tok} is not a variable of {scheme}")
    return inner


def _parse_terms(text: str, scheme: Scheme, width: int) -> list:
    """List of ``(coefficient: Fraction, exps, basis or None)``."""
    index = scheme.var_index(width)
    nv = scheme.nvars(width)
    terms = []
    sign, coeff, exps, basis, have, signed = 1, Fraction(1), [0] * nv, None, False, False
    last_var = None
    need_factor = True
    toks = list(_tokens(text))
    k = 0
    while True:
        kind, tok = toks[k]
        k += 1
        if kind in ("sign", "end"):
            if have:
                terms.append((sign * coeff, tuple(exps), basis))
            elif signed or terms or kind == "end":
                raise ParseError(f"missing term in {text!r}")
            if kind == "end":
                return terms
            sign, signed = (-1 if tok == "-" else 1), True
            coeff, exps, basis, have, last_var, need_factor = Fraction(1), [0] * nv, None, False, None, True
            continue
        if kind == "star":
            if need_factor:
                raise ParseError(f"misplaced '*' in {text!r}")
            need_factor = True
            continue
        if kind == "pow":
            if last_var is None:
                raise ParseError(f"'^' must follow a variable in {text!r}")
            exps[last_var] += int(tok[1:]) - 1
            last_var = None
            continue
        last_var = None
        need_factor, have = False, True
        if kind == "num":
            num, _, den = tok.replace(" ", "").partition("/")
            if den and int(den) == 0:
                raise ParseError(f"zero denominator in {tok!r}")
            coeff *= Fraction(int(num), int(den) if den else 1)
        elif kind in ("tvar", "dvar"):
            if (kind == "tvar") != isinstance(scheme, Tensor):
                raise ParseError(f"{tok} does not belong to the {scheme} scheme")
            key = _var_key(scheme, tok)
            if key not in index:
                raise ParseError(f"{tok} is not a variable at width {width}")
            last_var = index[key]
            exps[last_var] += 1
        elif kind == "basis":
            if basis is not None:
                raise ParseError(f"two basis symbols in one term of {text!r}")
            basis = _parse_basis(tok)


def parse_polynomial(text: str, scheme: Scheme, width: int, field: Field = QQ) -> Polynomial:
    terms: dict = {}
    for c, e, b in _parse_terms(text, scheme, width):
        if b is not None:
            raise ParseError("basis symbols are not allowed in a polynomial")
        terms[e] = terms.get(e, Fraction(0)) + c
    try:
        return Polynomial(scheme, width, {e: field.from_fraction(c) for e, c in terms.items()}, field)
    except OIGBError as exc:
        raise ParseError(str(exc)) from exc


def _default_basis(signature: FreeSignature) -> Optional[tuple]:
    if len(signature.slots) == 1 and signature.slots[0].d == 0:
        return (0, ())
    return None


def parse_element(text: str, signature: FreeSignature, width: int, field: Field = QQ,
                  fi: bool = False) -> ModuleElement:
    if text.strip() == "0":
        return ModuleElement.zero(signature, width, field)
    terms: dict = {}
    for c, e, b in _parse_terms(text, signature.scheme, width):
        if b is None:
            b = _default_basis(signature)
            if b is None:
                raise ParseError(f"term without basis symbol in {text!r}")
        key = (b[0], b[1], e)
        terms[key] = terms.get(key, Fraction(0)) + c
    try:
        return ModuleElement(signature, width, {k: field.from_fraction(c) for k, c in terms.items()}, field, fi)
    except OIGBError as exc:
        raise ParseError(str(exc)) from exc


def parse_module_monomial(text: str, signature: FreeSignature, width: int, fi: bool = False) -> ModuleMonomial:
    q = parse_element(text, signature, width, fi=fi)
    if len(q.terms) != 1 or next(iter(q.terms.values())) != 1:
        raise ParseError(f"not a single monomial: {text!r}")
    return next(q.monomials())


def parse_ring_monomial(text: str, scheme: Scheme, width: int) -> RingMonomial:
    f = parse_polynomial(text, scheme, width)
    if len(f.terms) != 1 or next(iter(f.terms.values())) != 1:
        raise ParseError(f"not a single monomial: {text!r}")
    return next(f.monomials())


def parse_element_file(text: str, signature: FreeSignature, field: Field = QQ,
                       default_width: Optional[int] = None, fi: bool = False) -> list:
    """Elements of a file: ``width: n`` headers, one element per line, ``#`` comments."""
    out = []
    width = default_width
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"width\s*:\s*(\d+)", line)
        if m:
            width = int(m.group(1))
            continue
        if width is None:
            raise ParseError(f"line {lineno}: element before any 'width:' header")
        try:
            out.append(parse_element(line, signature, width, field, fi))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return out


# -- rendering ---------------------------------------------------------------------

def _with_coeff(field: Field, c, body: Optional[str], first: bool) -> str:
    s = field.render(c)
    neg = s.startswith("-")
    if neg:
        s = s[1:]
    if body is None:
        text = s
    elif s == "1":
        text = body
    else:
        text = f"{s}*{body}"
    if first:
        return f"-{text}" if neg else text
    return f" - {text}" if neg else f" + {text}"


def render_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    out = []
    for k, e in enumerate(sorted(f.terms, reverse=True)):
        body = None if not any(e) else render_exps(f.scheme, f.width, e)
        out.append(_with_coeff(f.field, f.terms[e], body, k == 0))
    return "".join(out)


def render_basis(signature: FreeSignature, slot: int, basis: tuple) -> str:
    inner = ",".join(map(str, basis))
    if len(signature.slots) == 1:
        return f"e{{{inner}}}"
    return f"e{{λ={slot}; {inner}}}"


def _render_key(signature: FreeSignature, width: int, key: tuple) -> str:
    slot, basis, exps = key
    e = render_basis(signature, slot, basis)
    if not any(exps):
        return e
    return f"{render_exps(signature.scheme, width, exps)}*{e}"


def render_module_monomial(mu: ModuleMonomial) -> str:
    return _render_key(mu.signature, mu.width, mu.key)


def render_element(q: ModuleElement, order=None) -> str:
    """Terms in decreasing order (structural order unless ``order`` is given)."""
    if not q.terms:
        return "0"
    key = (lambda t: order.term_key(t)) if order is not None else None
    out = []
    for k, t in enumerate(sorted(q.terms, key=key, reverse=True)):
        out.append(_with_coeff(q.field, q.terms[t], _render_key(q.signature, q.width, t), k == 0))
    return "".join(out)


def render_witness(eps, cofactor: RingMonomial) -> str:
    return f"{eps} * {cofactor}"


# -- signatures and schemes ------------------------------------------------------------

def parse_scheme(text: str) -> Scheme:
    m = re.fullmatch(r"\s*(tensor|degree)\s*(\d+)?\s*", text)
    if not m:
        raise ParseError(f"scheme must be 'tensor c' or 'degree d', not {text!r}")
    kind, num = m.group(1), int(m.group(2) or 1)
    try:
        return Tensor(num) if kind == "tensor" else DegreeD(num)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def render_scheme(scheme: Scheme) -> str:
    return str(scheme)


def parse_signature(text: str, scheme: Scheme) -> FreeSignature:
    """``"d:s, d:s, ..."``; a bare ``d`` means shift 0."""
    slots = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        m = re.fullmatch(r"(\d+)\s*(?::\s*([+-]?\d+))?", part)
        if not m:
            raise ParseError(f"bad signature slot {part!r}")
        slots.append((int(m.group(1)), int(m.group(2) or 0)))
    if not slots:
        raise ParseError("empty signature")
    return FreeSignature(scheme, tuple(slots))
