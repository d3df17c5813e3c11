"""Command-line front end.

Exit codes: 0 success, 1 negative answer, 2 parse or input error, 3 resource cap.
JSON goes to stdout; human-readable tables and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from typing import Optional, Sequence

from .coeff import field_spec
from .errors import (InsufficientData, OIGBError, ParseError, UncertifiedWidth, WidthCapExceeded,
                     WidthTooLarge)
from .groebner import WIDTH_LIMITED, equivariant_buchberger, is_groebner, normal_form
from .koszul import KoszulComplex
from .ordering import encode_higman, fi_divides_mod, oi_divides_mod
from .resolution import SCHEMA_VERSION, BettiTable, betti_table
from .session import Session, load_session, parse_range
from .stabilize import stabilization_report
from .textio import (parse_element, parse_module_monomial, parse_polynomial, render_element,
                     render_witness)

OK, NEGATIVE, PARSE, CAP = 0, 1, 2, 3


def _emit(payload: dict, out=None) -> None:
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    (out or sys.stdout).write(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def infer_width(text: str) -> int:
    """Largest index mentioned in a monomial or element text."""
    nums = []
    for m in re.finditer(r"x\[\s*\d+\s*,\s*(\d+)\s*\]", text):
        nums.append(int(m.group(1)))
    for m in re.finditer(r"x\(([\d\s,]*)\)", text):
        nums += [int(t) for t in m.group(1).split(",") if t.strip()]
    for m in re.finditer(r"e\{([^}]*)\}", text):
        body = m.group(1).split(";")[-1]
        nums += [int(t) for t in body.split(",") if t.strip()]
    return max(nums, default=0)


def _session(args) -> Session:
    sess = load_session(getattr(args, "session", None))
    flags = {k: getattr(args, k, None) for k in ("field", "scheme", "signature", "order", "flavor",
                                                   "max_width", "lookahead", "max_p", "jobs",
                                                   "min_consecutive")}
    if getattr(args, "widths", None) is not None:
        flags["widths"] = args.widths
    return sess.override(**flags)


# -- commands ------------------------------------------------------------------------

def cmd_divides(args) -> int:
    sess = _session(args)
    sig, fi = sess.signature, sess.flavor == "fi"
    m = args.width_mu if args.width_mu is not None else infer_width(args.mu)
    n = args.width_nu if args.width_nu is not None else infer_width(args.nu)
    mu = parse_module_monomial(args.mu, sig, m, fi)
    nu = parse_module_monomial(args.nu, sig, n, fi)
    w = fi_divides_mod(mu, nu) if fi else oi_divides_mod(mu, nu)
    if w is None:
        print("none")
        return NEGATIVE
    print(render_witness(*w))
    return OK


def cmd_encode(args) -> int:
    sess = _session(args)
    sig = sess.signature
    m = args.width if args.width is not None else infer_width(args.mu)
    mu = parse_module_monomial(args.mu, sig, m)
    code = encode_higman(mu)
    _emit({"config": sess.resolved([]), "monomial": str(mu), "width": m, "c": code.c, "d": code.d,
           "code": code.to_json()})
    return OK


def _gb(sess: Session):
    gs = sess.generators()
    return gs, equivariant_buchberger(gs, sess.order, sess.int("max_width"), sess.int("lookahead"))


def _slot_map(gs) -> Optional[list]:
    oi = gs.to_oi()
    if oi.expansion is None:
        return None
    return [{"slot": k, "original_slot": l, "sigma": list(sigma)}
            for k, (l, sigma) in enumerate(oi.expansion.slot_map)]


def cmd_gb(args) -> int:
    sess = _session(args).validate()
    gs, E = _gb(sess)
    payload = {"config": sess.resolved(["max_width", "lookahead"]),
               "basis": [{"width": b.width, "element": render_element(b)} for b in E.basis],
               "certification": E.certification.to_json()}
    sm = _slot_map(gs)
    if sm is not None:
        payload["slot_map"] = sm
    _emit(payload)
    if args.strict and E.certification.status == WIDTH_LIMITED:
        print(f"width cap {E.certification.max_width} reached without stabilizing", file=sys.stderr)
        return CAP
    return OK


def cmd_nf(args) -> int:
    sess = _session(args).validate()
    gs = sess.generators()
    oi = gs.to_oi()
    n = args.width if args.width is not None else infer_width(args.element)
    q = parse_element(args.element, oi.signature, n, sess.field)
    payload = {"config": sess.resolved(["max_width", "lookahead"]), "input": render_element(q),
               "width": n, "against": args.against}
    if args.against == "generators":
        r = normal_form(q, oi, sess.order)
    else:
        E = equivariant_buchberger(oi, sess.order, sess.int("max_width"), sess.int("lookahead"))
        cert = E.certification
        payload["certification"] = cert.to_json()
        if n > cert.certified_width and not (E.certified and is_groebner(E, oi, sess.order, [n])):
            raise UncertifiedWidth(f"width {n} is beyond the certified width {cert.certified_width}")
        r = normal_form(q, E, sess.order)
    payload["normal_form"] = render_element(r)
    payload["is_zero"] = r.is_zero()
    _emit(payload)
    return OK


def cmd_betti(args) -> int:
    sess = _session(args).validate()
    gs = sess.generators()
    widths = parse_range(sess.get("widths"))
    max_p = sess.int("max_p")
    jobs = sess.int("jobs") if sess.get("jobs") is not None else None
    table = betti_table(gs, widths, max_p, sess.order, quotient=not args.submodule, jobs=jobs)
    data = table.to_json()
    data.pop("schema_version")
    config = sess.resolved(["max_p"])
    config["widths"] = widths
    config["module"] = "submodule" if args.submodule else "quotient"
    _emit({"config": config, **data})
    print(table.render(), file=sys.stderr)
    return OK


def cmd_koszul(args) -> int:
    sess = _session(args)
    a = parse_polynomial(args.a, sess.scheme, 1, sess.field)
    K = KoszulComplex(a, args.width, args.max_degree)
    h = K.homology(args.max_p)
    rows = [{"p": p, "j": j, "dim": d} for (p, j), d in sorted(h.items()) if d]
    config = {"field": field_spec(sess.field), "scheme": str(sess.scheme), "a": str(a),
              "width": args.width, "max_degree": K.max_degree,
              "max_p": args.width if args.max_p is None else args.max_p}
    _emit({"config": config, "complex_ok": K.is_complex(), "euler_ok": K.euler_ok(h if args.max_p is None else None), "homology": rows})
    return OK


def cmd_stabilize(args) -> int:
    try:
        with open(args.table, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise ParseError(f"cannot read Betti table {args.table!r}: {exc}") from exc
    table = BettiTable.from_json(data)
    ps = parse_range(args.p)
    k = args.min_consecutive if args.min_consecutive is not None else 3
    report = stabilization_report(table, ps, k)
    payload = report.to_json()
    payload.pop("schema_version")
    _emit({"config": {"table": args.table, "p": ps, "min_consecutive": k}, **payload})
    return OK


# -- argument parsing -------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, session: bool = True) -> None:
    if session:
        p.add_argument("--session", help="session file (key = value)")
    p.add_argument("--field", help="Q or Fp(p)")
    p.add_argument("--scheme", help="'tensor c' or 'degree d'")
    p.add_argument("--signature", help="slots d:shift, comma separated")
    p.add_argument("--order", help="monomial order name")
    p.add_argument("--jobs", type=int, help="worker processes (default: $OIGB_JOBS or 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oigb", description="Groebner bases over free OI-modules")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divides", help="OI- or FI-divisibility of two monomials")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--flavor", choices=["oi", "fi"])
    p.add_argument("--width-mu", type=int)
    p.add_argument("--width-nu", type=int)
    _common(p)
    p.set_defaults(func=cmd_divides)

    p = sub.add_parser("encode", help="Higman code of a tensor-scheme monomial")
    p.add_argument("mu")
    p.add_argument("--width", type=int)
    _common(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("gb", help="equivariant Groebner basis")
    _common(p)
    p.add_argument("--flavor", choices=["oi", "fi"])
    p.add_argument("--max-width", type=int)
    p.add_argument("--lookahead", type=int)
    p.add_argument("--strict", action="store_true", help="exit 3 when the width cap is hit")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("nf", help="normal form of an element")
    p.add_argument("element")
    p.add_argument("--width", type=int)
    p.add_argument("--against", choices=["gb", "generators"], default="gb")
    p.add_argument("--flavor", choices=["oi", "fi"])
    p.add_argument("--max-width", type=int)
    p.add_argument("--lookahead", type=int)
    _common(p)
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("betti", help="graded Betti numbers per width")
    _common(p)
    p.add_argument("--flavor", choices=["oi", "fi"])
    p.add_argument("--widths", help="e.g. 1..5")
    p.add_argument("--max-p", type=int)
    p.add_argument("--submodule", action="store_true", help="resolve the submodule instead of the quotient")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("koszul", help="homology of the OI-Koszul complex")
    p.add_argument("--a", required=True, help="homogeneous polynomial at width 1")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--max-p", type=int)
    _common(p, session=False)
    p.set_defaults(func=cmd_koszul)

    p = sub.add_parser("stabilize", help="stabilization report from a Betti table")
    p.add_argument("--table", required=True)
    p.add_argument("--p", default="0..3")
    p.add_argument("--min-consecutive", type=int)
    p.set_defaults(func=cmd_stabilize)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return PARSE if exc.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (WidthCapExceeded, UncertifiedWidth, WidthTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP
    except (ParseError, InsufficientData, OIGBError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE


if __name__ == "__main__":
    sys.exit(main())
