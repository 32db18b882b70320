"""Monomial ideals in the variables z_ij: lattice operations, primes, classes.

Monomials are packed ints with one 8-bit field per cell, at index
(i-1)*16 + (j-1), so grids up to 16 x 16 are supported.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass

from ..poly.order import TermOrder, leading_term
from ..poly.polynomial import Polynomial, Var, Z, product, x, y

log = logging.getLogger(__name__)

WIDTH = 16
FIELDS = WIDTH * WIDTH
_GUARD = int.from_bytes(bytes([0x80]) * FIELDS, "little")
_LOW = int.from_bytes(bytes([0x01]) * FIELDS, "little")


def _slot(i: int, j: int) -> int:
    if not (1 <= i <= WIDTH and 1 <= j <= WIDTH):
        raise ValueError(f"cell ({i},{j}) outside the supported {WIDTH}x{WIDTH} grid")
    return 8 * ((i - 1) * WIDTH + (j - 1))


def pack(mono) -> int:
    """Pack a monomial given as ((Var, e), ...) or as {(i, j): e}."""
    items = mono.items() if isinstance(mono, dict) else mono
    out = 0
    for v, e in items:
        if isinstance(v, Var):
            if v.kind != Z:
                raise ValueError(f"{v} is not a matrix variable")
            i, j = v.i, v.j
        else:
            i, j = v
        if not 0 <= e < 128:
            raise OverflowError(f"exponent {e} out of range")
        out += e << _slot(i, j)
    return out


def unpack(a: int) -> tuple:
    out = []
    k = 0
    while a:
        e = a & 0xFF
        if e:
            out.append((Var.z(k // WIDTH + 1, k % WIDTH + 1), e))
        a >>= 8
        k += 1
    return tuple(sorted(out))


def cells_of(a: int) -> frozenset:
    return frozenset(v.cell for v, _ in unpack(a))


def divides(a: int, b: int) -> bool:
    return ((b | _GUARD) - a) & _GUARD == _GUARD


def lcm(a: int, b: int) -> int:
    ge = (((a | _GUARD) - b) & _GUARD) >> 7
    mask = ge * 0xFF
    return (a & mask) | (b & ~mask)


def support(a: int) -> int:
    """The squarefree monomial on the variables of a."""
    return (((a | _GUARD) - _LOW) & _GUARD) >> 7


def degree(a: int) -> int:
    return sum(a.to_bytes((a.bit_length() + 7) // 8 or 1, "little"))


def _minimalize(gens) -> tuple:
    out: list = []
    for g in sorted(set(gens), key=lambda a: (degree(a), a)):
        if not any(divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


@dataclass(frozen=True)
class CoordSubspace:
    """The prime generated by the variables z_ij, (i,j) in ``cells``."""

    cells: frozenset

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset((int(i), int(j)) for i, j in self.cells))

    @property
    def codim(self) -> int:
        return len(self.cells)

    @property
    def vars(self) -> tuple:
        return tuple(Var.z(i, j) for i, j in sorted(self.cells))

    def ideal(self) -> "MonomialIdeal":
        return l_ideal(self.cells)

    def class_polynomial(self) -> Polynomial:
        return product(x(i) - y(j) for i, j in sorted(self.cells))

    def __str__(self):
        return "<" + ", ".join(str(v) for v in self.vars) + ">"

    def to_json(self) -> list:
        return [list(c) for c in sorted(self.cells)]


class MonomialIdeal:
    """A monomial ideal stored by its minimal generators."""

    __slots__ = ("gens",)

    def __init__(self, gens=()):
        self.gens = _minimalize(int(g) for g in gens)

    @classmethod
    def from_monomials(cls, monos) -> "MonomialIdeal":
        return cls(pack(m) for m in monos)

    @classmethod
    def from_cells(cls, cells) -> "MonomialIdeal":
        return cls(pack({(i, j): 1}) for i, j in cells)

    @classmethod
    def parse(cls, texts) -> "MonomialIdeal":
        return cls.from_monomials(_parse_mono(t) for t in texts)

    def monomials(self) -> list:
        return [unpack(g) for g in self.gens]

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"MonomialIdeal({self})"

    def __str__(self):
        return "<" + ", ".join(_mono_text(g) for g in self.gens) + ">"

    def contains(self, mono) -> bool:
        a = mono if isinstance(mono, int) else pack(mono)
        return any(divides(g, a) for g in self.gens)

    __contains__ = contains

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(support(g) == g for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def cells(self) -> frozenset:
        out: set = set()
        for g in self.gens:
            out |= cells_of(g)
        return frozenset(out)

    def to_json(self) -> dict:
        return {"gens": [[[str(v), e] for v, e in unpack(g)] for g in self.gens]}

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_monomials(tuple((Var.parse(v), int(e)) for v, e in g) for g in data["gens"])


def _mono_text(a: int) -> str:
    parts = [str(v) if e == 1 else f"{v}^{e}" for v, e in unpack(a)]
    return "*".join(parts) or "1"


def _parse_mono(text: str) -> tuple:
    out = []
    for factor in text.replace(" ", "").split("*"):
        if factor == "1":
            continue
        base, _, e = factor.partition("^")
        out.append((Var.parse(base), int(e) if e else 1))
    return tuple(out)


def mono_sum(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(A.gens + B.gens)


def mono_intersect(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(lcm(a, b) for a in A.gens for b in B.gens)


def mono_intersect_all(ideals) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        return MonomialIdeal([0])  # the unit ideal
    out = ideals[0]
    for A in ideals[1:]:
        out = mono_intersect(out, A)
    return out


def mono_radical(A: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(support(g) for g in A.gens)


def _as_slot_mask(v) -> int:
    i, j = (v.i, v.j) if isinstance(v, Var) else v
    return 0xFF << _slot(i, j)


def mono_quotient_by_variable(A: MonomialIdeal, v, power: int = 1) -> MonomialIdeal:
    """A : v^power."""
    mask = _as_slot_mask(v)
    step = (1 << _slot(*((v.i, v.j) if isinstance(v, Var) else v)))
    out = []
    for g in A.gens:
        e = (g & mask) // step
        out.append(g - min(e, power) * step)
    return MonomialIdeal(out)


def mono_saturate(A: MonomialIdeal, v) -> MonomialIdeal:
    """A : v^infinity, i.e. set v to 1 in every generator."""
    mask = _as_slot_mask(v)
    return MonomialIdeal(g & ~mask for g in A.gens)


def l_ideal(cells) -> MonomialIdeal:
    """The coordinate-subspace ideal of a diagram."""
    return MonomialIdeal.from_cells(cells)


def minimal_primes(A: MonomialIdeal) -> list:
    """Inclusion-minimal vertex covers of the generator supports."""
    edges = [support(g) for g in mono_radical(A).gens]
    if any(e == 0 for e in edges):
        return []  # unit ideal
    covers: set = set()

    def search(chosen: int, remaining: list) -> None:
        if not remaining:
            covers.add(chosen)
            return
        shortest = min(remaining, key=lambda e: (degree(e), e))
        bits = shortest
        while bits:
            low = bits & -bits
            bits ^= low
            search(chosen | low, [e for e in remaining if not e & low])

    search(0, edges)
    minimal = [c for c in covers if not any(d != c and d & c == d for d in covers)]
    return sorted((CoordSubspace(cells_of(c)) for c in minimal), key=lambda P: (P.codim, sorted(P.cells)))


def _cells_mask(cells) -> int:
    m = 0
    for i, j in cells:
        m |= 0xFF << _slot(i, j)
    return m


def multiplicity_along(A: MonomialIdeal, P: CoordSubspace) -> int:
    """Colength of A localized at P: saturate outside P, count standard monomials."""
    inside = _cells_mask(P.cells)
    local = MonomialIdeal(g & inside for g in A.gens)
    slots = [_slot(i, j) for i, j in sorted(P.cells)]
    if not slots:
        if local.gens and local.gens[0] == 0:
            raise ValueError("the unit ideal has no minimal primes")
        return 1
    for s in slots:
        if not any(g and (g >> s) << s == g and g < (0x100 << s) for g in local.gens):
            raise ValueError(f"{P} is not a minimal prime of the ideal")
    gens = local.gens
    count = 0
    stack = [(0, 0)]
    while stack:
        mono, start = stack.pop()
        count += 1
        for k in range(start, len(slots)):
            nxt = mono + (1 << slots[k])
            if not any(divides(g, nxt) for g in gens):
                stack.append((nxt, k))
    return count


def components(A: MonomialIdeal) -> list:
    """[(prime, multiplicity)] over all minimal primes."""
    return [(P, multiplicity_along(A, P)) for P in minimal_primes(A)]


def equivariant_class(A: MonomialIdeal) -> Polynomial:
    """Sum over top-codimension minimal primes of multiplicity times the prime's class."""
    comps = components(A)
    if not comps:
        return Polynomial.zero()
    top = max(P.codim for P, _ in comps)
    if any(P.codim != top for P, _ in comps):
        log.warning(
            "minimal primes of differing codimension %s; using codimension %d only",
            sorted({P.codim for P, _ in comps}),
            top,
        )
    out = Polynomial.zero()
    for P, mult in comps:
        if P.codim == top:
            out = out + P.class_polynomial() * mult
    return out


# --- ideals built from generators --------------------------------------------


def _order_for(order: TermOrder, ambient) -> TermOrder:
    return order.extend(*ambient)


def j_ideal(w, order: TermOrder) -> MonomialIdeal:
    """Leading monomials of the CDG generators, with no completion."""
    from .matrix import cdg_generators

    I = cdg_generators(w)
    order = _order_for(order, I.ambient)
    return MonomialIdeal.from_monomials(leading_term(g, order)[0] for g in I.generators)


def j_lambda(lam, i: int, j: int, order: TermOrder, ambient=None) -> MonomialIdeal:
    """Leading monomials of the nonzero maximal minors of Z^lam on [i] x [j]."""
    from ..perm import Partition
    from .matrix import GenericMatrix, minors

    lam = Partition(lam)
    if len(lam) > i:
        raise ValueError(f"partition {tuple(lam)} does not fit above row {i}")
    m, n = ambient if ambient is not None else (i, max(j, lam[0] if lam else 0))
    order = _order_for(order, (m, n))
    M = GenericMatrix(m, n, lam)
    return MonomialIdeal.from_monomials(leading_term(f, order)[0] for f in minors(M, min(i, j), i, j))
