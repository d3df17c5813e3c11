"""Monomial orders, OI-divisibility of module monomials and the Higman encoding."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .errors import ParameterMismatch, SchemeMismatch, SignatureMismatch
from .module import FreeSignature, ModuleMonomial
from .oi import OIMorphism, enumerate_fi, enumerate_oi, iota
from .polyring import RingMonomial, Tensor, oi_divides_ring, push_exps, push_table


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _lex(exps: tuple) -> tuple:
    return exps


def _deglex(exps: tuple) -> tuple:
    return (sum(exps), exps)


class MonomialOrder:
    """A total order on module monomials of the form

        width, then slot, then basis image (lex), then a ring order on exponents.

    ``ring_key`` must be a monomial order on exponent tuples that is invariant
    under order-preserving relabelling of variables; that is what makes the
    result satisfy all three order axioms.
    """

    def __init__(self, name: str, ring_key: Callable[[tuple], object] = _lex):
        self.name = name
        self.ring_key = ring_key
        # plain tuple comparison is the lex order, so the key can be skipped
        self.is_lex = ring_key is _lex

    def key(self, mu: ModuleMonomial) -> tuple:
        return (mu.width, mu.slot, mu.basis, self.ring_key(mu.exps))

    def term_key(self, term: tuple) -> tuple:
        """Key of a ``(slot, basis, exps)`` triple at a fixed width."""
        return (term[0], term[1], self.ring_key(term[2]))

    def compare(self, mu: ModuleMonomial, nu: ModuleMonomial) -> Cmp:
        return compare(self, mu, nu)

    def __repr__(self):
        return f"MonomialOrder({self.name!r})"


ORDERS = {
    "paper_lex": MonomialOrder("paper_lex", _lex),
    "paper_deglex": MonomialOrder("paper_deglex", _deglex),
}
DEFAULT_ORDER = ORDERS["paper_lex"]


def get_order(name_or_order) -> MonomialOrder:
    if isinstance(name_or_order, MonomialOrder):
        return name_or_order
    try:
        return ORDERS[name_or_order]
    except KeyError:
        raise ValueError(f"unknown monomial order {name_or_order!r}; known: {sorted(ORDERS)}") from None


def register_order(order: MonomialOrder, validate: bool = True, samples: int = 500) -> MonomialOrder:
    """Add a user order to the registry after sampling the order axioms."""
    if validate:
        bad = check_order_axioms(order, Tensor(1), 1, samples=samples, rng=random.Random(0))
        bad += check_order_axioms(order, Tensor(2), 0, samples=samples, rng=random.Random(1))
        if bad:
            raise ValueError(f"order {order.name!r} violates the monomial-order axioms: {bad[0]}")
    ORDERS[order.name] = order
    return order


def compare(order: MonomialOrder, mu: ModuleMonomial, nu: ModuleMonomial) -> Cmp:
    if mu.signature != nu.signature:
        raise SignatureMismatch("monomials of different free modules")
    a, b = order.key(mu), order.key(nu)
    return Cmp.EQUAL if a == b else (Cmp.GREATER if a > b else Cmp.LESS)


def _columns(mu: ModuleMonomial) -> tuple:
    """Exponent vector ``u_j in N_0^c`` of every column ``j`` (tensor scheme)."""
    return _split_columns(mu.exps, mu.width, mu.scheme.c)


@lru_cache(maxsize=1 << 16)
def _split_columns(e: tuple, n: int, c: int) -> tuple:
    return tuple(tuple(e[i * n + j] for i in range(c)) for j in range(n))


def _increasing_maps(m: int, n: int, forced: dict, ok: Optional[Callable[[int, int], bool]]):
    """Strictly increasing ``[m] -> [n]`` in lex order, honouring ``forced`` values."""
    image = [0] * m

    def rec(i: int, low: int):
        if i == m:
            yield tuple(image)
            return
        hi = n - (m - i - 1)
        if (i + 1) in forced:
            cands = [forced[i + 1]] if low <= forced[i + 1] <= hi else []
        else:
            cands = range(low, hi + 1)
        for j in cands:
            if ok is not None and not ok(i, j - 1):
                continue
            image[i] = j
            yield from rec(i + 1, j + 1)

    yield from rec(0, 1)


def oi_divides_mod(mu: ModuleMonomial, nu: ModuleMonomial, all_witnesses: bool = False):
    """Witness ``(eps, cofactor)`` of ``mu |_OI nu`` or ``None``.

    ``eps`` is fixed on the image of ``mu``'s basis symbol by ``eps o pi = rho``,
    so only the remaining positions are searched; for the tensor scheme each
    column is also checked as soon as it is placed.
    """
    if mu.signature is not nu.signature and mu.signature != nu.signature:
        raise SignatureMismatch("monomials of different free modules")
    found = []
    if mu.slot != nu.slot or mu.width > nu.width or sum(mu.exps) > sum(nu.exps):
        return found if all_witnesses else None
    m, n = mu.width, nu.width
    forced = {}
    for a, b in zip(mu.basis, nu.basis):
        forced[a] = b
    scheme = mu.scheme
    ok = None
    if isinstance(scheme, Tensor):
        ucols, vcols = _columns(mu), _columns(nu)

        def ok(i, j):
            return all(x <= y for x, y in zip(ucols[i], vcols[j]))

    nv = scheme.nvars(n)
    v = nu.exps
    for image in _increasing_maps(m, n, forced, ok):
        pushed = push_exps(mu.exps, push_table(scheme, m, image, n), nv)
        if all(a <= b for a, b in zip(pushed, v)):
            witness = (OIMorphism(m, n, image), RingMonomial(scheme, n, tuple(b - a for a, b in zip(pushed, v))))
            if not all_witnesses:
                return witness
            found.append(witness)
    return found if all_witnesses else None


def fi_divides_mod(mu: ModuleMonomial, nu: ModuleMonomial, all_witnesses: bool = False):
    """FI-divisibility for monomials of an FI free module (basis tuples are injections)."""
    if mu.signature is not nu.signature and mu.signature != nu.signature:
        raise SignatureMismatch("monomials of different free modules")
    found = []
    if mu.slot == nu.slot and mu.width <= nu.width:
        scheme, n = mu.scheme, nu.width
        nv = scheme.nvars(n)
        for pi in enumerate_fi(mu.width, n):
            if tuple(pi.image[b - 1] for b in mu.basis) != nu.basis:
                continue
            pushed = push_exps(mu.exps, push_table(scheme, mu.width, pi.image, n, True), nv)
            if all(a <= b for a, b in zip(pushed, nu.exps)):
                w = (pi, RingMonomial(scheme, n, tuple(b - a for a, b in zip(pushed, nu.exps))))
                if not all_witnesses:
                    return w
                found.append(w)
    return found if all_witnesses else None


@dataclass(frozen=True)
class HigmanCode:
    c: int
    d: int
    entries: tuple  # each entry: ((u_i, i), (u_pi(1), pi(1)), ..., (u_pi(d), pi(d)))

    def __len__(self):
        return len(self.entries)

    def to_json(self) -> list:
        return [[[list(u), idx] for u, idx in entry] for entry in self.entries]


def encode_higman(mu: ModuleMonomial) -> HigmanCode:
    if not isinstance(mu.scheme, Tensor):
        raise SchemeMismatch("Higman codes are defined for the tensor scheme")
    cols = _columns(mu)
    tail = tuple((cols[p - 1], p) for p in mu.basis)
    entries = tuple(((cols[i], i + 1),) + tail for i in range(mu.width))
    return HigmanCode(mu.scheme.c, len(mu.basis), entries)


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def entry_leq(a: tuple, b: tuple) -> bool:
    """The signed product order on ``(N_0^c x N)^{d+1}``."""
    i0, j0 = a[0][1], b[0][1]
    for k, ((u, i), (v, j)) in enumerate(zip(a, b)):
        if any(x > y for x, y in zip(u, v)):
            return False
        if k and _sgn(i - i0) != _sgn(j - j0):
            return False
    return True


def _check_codes(s: HigmanCode, t: HigmanCode):
    if (s.c, s.d) != (t.c, t.d):
        raise ParameterMismatch(f"codes for (c, d) = {(s.c, s.d)} and {(t.c, t.d)}")


def higman_leq(s: HigmanCode, t: HigmanCode) -> bool:
    """Higman embedding by left-greedy matching."""
    _check_codes(s, t)
    j, tt = 0, t.entries
    for a in s.entries:
        while j < len(tt) and not entry_leq(a, tt[j]):
            j += 1
        if j == len(tt):
            return False
        j += 1
    return True


def higman_leq_dp(s: HigmanCode, t: HigmanCode) -> bool:
    """Same relation by dynamic programming over prefixes; cross-check for the greedy version."""
    _check_codes(s, t)
    p, q = len(s.entries), len(t.entries)
    # reach[i][j]: first i entries of s embed into first j entries of t
    reach = [[True] * (q + 1)] + [[False] * (q + 1) for _ in range(p)]
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            reach[i][j] = reach[i][j - 1] or (reach[i - 1][j - 1] and entry_leq(s.entries[i - 1], t.entries[j - 1]))
    return reach[p][q]


def _divides(mu, nu) -> bool:
    if isinstance(mu, RingMonomial):
        return oi_divides_ring(mu, nu) is not None
    return oi_divides_mod(mu, nu) is not None


def minimal_elements(monomials: Iterable) -> list:
    """The OI-divisibility-minimal elements of a finite set of monomials.

    Accepts module monomials or ring monomials (which are treated as
    monomials of ``F(0)``).  Output is sorted by width then degree.
    """
    items = list(dict.fromkeys(monomials))

    def size(mu):
        return (mu.width, sum(mu.exps))

    # divisibility never goes down in (width, degree), and is equality when both agree
    items.sort(key=size)
    kept: list = []
    for mu in items:
        if not any(size(k) != size(mu) and _divides(k, mu) for k in kept):
            kept.append(mu)
    return kept


def check_order_axioms(order: MonomialOrder, scheme, d: int, samples: int = 1000,
                       max_width: int = 4, max_degree: int = 3, rng: Optional[random.Random] = None,
                       signature: Optional[FreeSignature] = None) -> list:
    """Sample pairs of monomials of ``F(d)`` and report every violated axiom."""
    rng = rng or random.Random(0)
    sig = signature or FreeSignature.single(scheme, d)
    bad = []
    for _ in range(samples):
        m = rng.randint(d, max_width)
        mu = random_module_monomial(sig, m, max_degree, rng)
        nu = random_module_monomial(sig, m, max_degree, rng)
        if mu == nu:
            continue
        if order.key(mu) < order.key(nu):
            mu, nu = nu, mu
        u = RingMonomial(scheme, m, random_exps(scheme.nvars(m), max_degree, rng, positive=True))
        if not u.is_one() and not (order.key(mu.times(u)) > order.key(nu.times(u)) > order.key(nu)):
            bad.append(("i", str(mu), str(nu), str(u)))
        for eps in enumerate_oi(m, m + 1):
            if not order.key(mu.apply(eps)) > order.key(nu.apply(eps)):
                bad.append(("ii", str(mu), str(nu), str(eps)))
        for n in (m + 1, m + 2):
            if not order.key(mu.apply(iota(m, n))) > order.key(mu):
                bad.append(("iii", str(mu), n))
    return bad


def random_exps(nvars: int, max_degree: int, rng: random.Random, positive: bool = False) -> tuple:
    deg = rng.randint(1 if positive and nvars else 0, max_degree)
    e = [0] * nvars
    for _ in range(deg if nvars else 0):
        e[rng.randrange(nvars)] += 1
    return tuple(e)


def random_module_monomial(sig: FreeSignature, width: int, max_degree: int,
                           rng: random.Random) -> ModuleMonomial:
    slots = [k for k, s in enumerate(sig.slots) if s.d <= width]
    slot = rng.choice(slots)
    d = sig.slots[slot].d
    basis = tuple(sorted(rng.sample(range(1, width + 1), d)))
    return ModuleMonomial(sig, width, slot, basis, random_exps(sig.scheme.nvars(width), max_degree, rng))

