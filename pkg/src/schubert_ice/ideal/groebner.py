"""Buchberger's algorithm over the integers for lex orders on z-variables.

Monomials are packed into Python ints, one 8-bit field per variable: 7 bits of
exponent and a guard bit.  The largest variable of the order sits in the most
significant field, so lex comparison is integer comparison.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

from ..poly.order import OrderError, TermOrder
from ..poly.polynomial import Polynomial, mono_div, mono_divides, mono_mul
from .matrix import Ideal

BITS = 8
EXP_LIMIT = 1 << (BITS - 1)
DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """The reduction budget ran out before the computation finished."""


class _Packing:
    def __init__(self, order: TermOrder):
        self.order = order
        N = len(order.variables)
        self.N = N
        self.guard = int.from_bytes(bytes([0x80]) * N, "big") if N else 0
        self.low = int.from_bytes(bytes([0x01]) * N, "big") if N else 0
        self.shift = {v: BITS * (N - 1 - k) for k, v in enumerate(order.variables)}
        self.var_at = {s: v for v, s in self.shift.items()}

    def pack_mono(self, mono: tuple) -> int:
        out = 0
        for v, e in mono:
            if e >= EXP_LIMIT:
                raise OverflowError(f"exponent {e} too large for packed monomials")
            try:
                out |= e << self.shift[v]
            except KeyError:
                raise OrderError(f"variable {v} is not ordered by {self.order.name}") from None
        return out

    def unpack_mono(self, a: int) -> tuple:
        out = []
        for s, v in self.var_at.items():
            e = (a >> s) & 0x7F
            if e:
                out.append((v, e))
        return tuple(sorted(out))

    def pack(self, f: Polynomial) -> dict:
        return {self.pack_mono(m): c for m, c in f.items()}

    def unpack(self, f: dict) -> Polynomial:
        return Polynomial({self.unpack_mono(m): c for m, c in f.items()})

    def divides(self, a: int, b: int) -> bool:
        G = self.guard
        return ((b | G) - a) & G == G

    def lcm(self, a: int, b: int) -> int:
        G = self.guard
        ge = (((a | G) - b) & G) >> (BITS - 1)
        mask = ge * 0xFF
        return (a & mask) | (b & ~mask)

    def support(self, a: int) -> int:
        return ((a | self.guard) - self.low) & self.guard

    def coprime(self, a: int, b: int) -> bool:
        return not (self.support(a) & self.support(b))

    @staticmethod
    def degree(a: int) -> int:
        return sum(a.to_bytes((a.bit_length() + 7) // 8, "big"))


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self, k: int) -> None:
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"reduction budget of {self.limit} monomial operations exhausted")


def _primitive(f: dict) -> dict:
    if not f:
        return f
    g = 0
    for c in f.values():
        g = gcd(g, c)
    if f[max(f)] < 0:
        g = -g
    return {m: c // g for m, c in f.items()} if g != 1 else f


def _reduce(f: dict, basis: list, pk: _Packing, budget: _Budget, full: bool = True) -> dict:
    """Remainder of f on division by basis [(lm, poly)], scaled to stay integral."""
    f = dict(f)
    done: dict = {}
    G = pk.guard
    while f:
        m = max(f)
        c = f[m]
        for lm, g in basis:
            if ((m | G) - lm) & G == G:
                break
        else:
            if not full:
                done[m] = c
                done.update(f)
                return _primitive(done)
            done[m] = c
            del f[m]
            continue
        q = m - lm
        cg = g[lm]
        d = gcd(c, cg)
        a, b = cg // d, c // d
        if a != 1:
            for k in f:
                f[k] *= a
            for k in done:
                done[k] *= a
        budget.spend(len(g))
        for mg, c2 in g.items():
            t = mg + q
            if t & G:
                raise OverflowError("exponent overflow in packed monomial arithmetic")
            s = f.get(t, 0) - b * c2
            if s:
                f[t] = s
            else:
                f.pop(t, None)
        if f and len(f) > 8:
            # keep coefficients from growing without bound
            cont = 0
            for v in f.values():
                cont = gcd(cont, v)
                if cont == 1:
                    break
            if cont > 1:
                for v in done.values():
                    cont = gcd(cont, v)
                    if cont == 1:
                        break
                if cont > 1:
                    f = {k: v // cont for k, v in f.items()}
                    done = {k: v // cont for k, v in done.items()}
    return _primitive(done)


def _spoly(f: dict, lf: int, g: dict, lg: int, pk: _Packing) -> dict:
    L = pk.lcm(lf, lg)
    cf, cg = f[lf], g[lg]
    d = gcd(cf, cg)
    a, b = cg // d, cf // d
    qf, qg = L - lf, L - lg
    out: dict = {}
    for m, c in f.items():
        out[m + qf] = a * c
    for m, c in g.items():
        t = m + qg
        s = out.get(t, 0) - b * c
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def _prepare(I: Ideal, order: TermOrder) -> tuple:
    pk = _Packing(order)
    polys = [_primitive(pk.pack(g)) for g in I.generators if g]
    return pk, polys


def buchberger(I: Ideal, order: TermOrder, budget: int | None = DEFAULT_BUDGET) -> Ideal:
    """Reduced Groebner basis, primitive with positive leading coefficients."""
    pk, polys = _prepare(I, order)
    bud = _Budget(budget)
    basis: list = []  # (lm, poly) in insertion order
    pending: list = []
    in_queue: set = set()

    def add(f: dict) -> None:
        lf = max(f)
        k = len(basis)
        basis.append((lf, f))
        for i in range(k):
            li = basis[i][0]
            if li is None:
                continue
            L = pk.lcm(li, lf)
            heapq.heappush(pending, (pk.degree(L), L, i, k))
            in_queue.add((i, k))

    for f in polys:
        r = _reduce(f, [b for b in basis if b[0] is not None], pk, bud)
        if r:
            add(r)

    while pending:
        _, L, i, j = heapq.heappop(pending)
        in_queue.discard((i, j))
        li, fi = basis[i]
        lj, fj = basis[j]
        if pk.coprime(li, lj):
            continue
        if _chain_skip(i, j, L, basis, in_queue, pk):
            continue
        s = _spoly(fi, li, fj, lj, pk)
        if not s:
            continue
        r = _reduce(s, basis, pk, bud)
        if r:
            add(r)

    reduced = _auto_reduce([f for _, f in basis], pk, bud)
    return Ideal(tuple(pk.unpack(f) for f in reduced), I.ambient)


def _chain_skip(i, j, L, basis, in_queue, pk) -> bool:
    for k, (lk, _) in enumerate(basis):
        if k in (i, j):
            continue
        if not pk.divides(lk, L):
            continue
        if (min(i, k), max(i, k)) in in_queue or (min(j, k), max(j, k)) in in_queue:
            continue
        return True
    return False


def _auto_reduce(polys: list, pk: _Packing, bud: _Budget) -> list:
    items = sorted(((max(f), f) for f in polys), key=lambda t: t[0])
    minimal = []
    for lm, f in items:
        if any(pk.divides(l2, lm) for l2, _ in minimal):
            continue
        minimal.append((lm, f))
    out = []
    for k, (lm, f) in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = _reduce_tail(f, lm, others, pk, bud)
        out.append(r)
    out.sort(key=max, reverse=True)
    return out


def _reduce_tail(f: dict, lm: int, others: list, pk: _Packing, bud: _Budget) -> dict:
    head = {lm: f[lm]}
    tail = {m: c for m, c in f.items() if m != lm}
    if not tail:
        return _primitive(head)
    # reduce the tail while tracking the scaling applied to it
    scaled = _reduce_with_scale(tail, others, pk, bud)
    r, scale = scaled
    out = {lm: f[lm] * scale}
    out.update(r)
    return _primitive(out)


def _reduce_with_scale(f: dict, basis: list, pk: _Packing, bud: _Budget) -> tuple:
    """Like _reduce, without content removal, returning (remainder, scale)."""
    f = dict(f)
    done: dict = {}
    scale = 1
    G = pk.guard
    while f:
        m = max(f)
        c = f[m]
        for lm, g in basis:
            if ((m | G) - lm) & G == G:
                break
        else:
            done[m] = c
            del f[m]
            continue
        q = m - lm
        cg = g[lm]
        d = gcd(c, cg)
        a, b = cg // d, c // d
        if a != 1:
            scale *= a
            for k in f:
                f[k] *= a
            for k in done:
                done[k] *= a
        bud.spend(len(g))
        for mg, c2 in g.items():
            t = mg + q
            s = f.get(t, 0) - b * c2
            if s:
                f[t] = s
            else:
                f.pop(t, None)
    return done, scale


def is_groebner(I: Ideal, order: TermOrder, budget: int | None = DEFAULT_BUDGET) -> bool:
    """Buchberger's criterion on I's own generators; coprime pairs are skipped."""
    return first_nonreducing_pair(I, order, budget) is None


def first_nonreducing_pair(I: Ideal, order: TermOrder, budget: int | None = DEFAULT_BUDGET):
    """(i, j, remainder) for the first S-pair not reducing to zero, else None."""
    pk, polys = _prepare(I, order)
    bud = _Budget(budget)
    basis = [(max(f), f) for f in polys]
    for j in range(len(basis)):
        for i in range(j):
            li, fi = basis[i]
            lj, fj = basis[j]
            if pk.coprime(li, lj):
                continue
            s = _spoly(fi, li, fj, lj, pk)
            if not s:
                continue
            r = _reduce(s, basis, pk, bud, full=False)
            if r:
                return i, j, pk.unpack(r)
    return None


def leading_monomials(I: Ideal, order: TermOrder) -> list:
    pk = _Packing(order)
    return [pk.unpack_mono(max(pk.pack(g))) for g in I.generators if g]


def initial_ideal(I: Ideal, order: TermOrder, budget: int | None = DEFAULT_BUDGET):
    from .monomial import MonomialIdeal

    return MonomialIdeal.from_monomials(leading_monomials(buchberger(I, order, budget), order))


def same_ideal(A: Ideal, B: Ideal, order: TermOrder, budget: int | None = DEFAULT_BUDGET) -> bool:
    """Equality of ideals via their reduced Groebner bases."""
    ga = buchberger(A, order, budget).generators
    gb = buchberger(B, order, budget).generators
    return set(ga) == set(gb)


# --- slow reference check ----------------------------------------------------


def is_groebner_reference(generators, order: TermOrder) -> bool:
    """Buchberger's criterion with rational coefficients over tuple monomials.

    Shares no code with the packed engine; used to re-check its output.
    """
    polys = []
    for g in generators:
        if not g:
            continue
        f = {m: Fraction(c) for m, c in g.items()}
        polys.append(f)
    key = order.key
    leads = [max(f, key=key) for f in polys]

    def reduce(f: dict) -> dict:
        f = dict(f)
        rem: dict = {}
        while f:
            m = max(f, key=key)
            c = f.pop(m)
            for g, lg in zip(polys, leads):
                if mono_divides(lg, m):
                    q = mono_div(m, lg)
                    ratio = c / g[lg]
                    for mg, cg in g.items():
                        if mg == lg:
                            continue
                        t = mono_mul(mg, q)
                        s = f.get(t, 0) - ratio * cg
                        if s:
                            f[t] = s
                        else:
                            f.pop(t, None)
                    break
            else:
                rem[m] = c
        return rem

    for j in range(len(polys)):
        for i in range(j):
            li, lj = leads[i], leads[j]
            di, dj = dict(li), dict(lj)
            if not set(di) & set(dj):
                continue
            L = tuple(sorted({v: max(di.get(v, 0), dj.get(v, 0)) for v in set(di) | set(dj)}.items()))
            qi, qj = mono_div(L, li), mono_div(L, lj)
            s: dict = {}
            for m, c in polys[i].items():
                t = mono_mul(m, qi)
                s[t] = s.get(t, 0) + c / polys[i][li]
            for m, c in polys[j].items():
                t = mono_mul(m, qj)
                s[t] = s.get(t, 0) - c / polys[j][lj]
            s = {m: c for m, c in s.items() if c}
            if s and reduce(s):
                return False
    return True
