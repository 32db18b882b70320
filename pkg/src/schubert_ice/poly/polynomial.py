"""Sparse integer polynomials in the variables z_ij, x_i, y_j."""

from __future__ import annotations

import json
import re
from typing import Iterable, NamedTuple

Z, X, Y = 0, 1, 2
_KIND_NAMES = {Z: "z", X: "x", Y: "y"}


class Var(NamedTuple):
    """A variable; the tuple order puts Z before X before Y, row-major within Z."""

    kind: int
    i: int
    j: int = 0

    @classmethod
    def z(cls, i: int, j: int) -> "Var":
        return cls(Z, i, j)

    @classmethod
    def x(cls, i: int) -> "Var":
        return cls(X, i)

    @classmethod
    def y(cls, j: int) -> "Var":
        return cls(Y, j)

    @property
    def cell(self) -> tuple:
        if self.kind != Z:
            raise ValueError(f"{self} is not a matrix variable")
        return (self.i, self.j)

    def __str__(self):
        if self.kind == Z:
            if self.i < 10 and self.j < 10:
                return f"z{self.i}{self.j}"
            return f"z{self.i}_{self.j}"
        return f"{_KIND_NAMES[self.kind]}{self.i}"

    @classmethod
    def parse(cls, text: str) -> "Var":
        m = re.fullmatch(r"z(\d+)_(\d+)|z(\d)(\d)|([xy])(\d+)", text.strip())
        if not m:
            raise ValueError(f"cannot parse variable {text!r}")
        if m.group(1):
            return cls.z(int(m.group(1)), int(m.group(2)))
        if m.group(3):
            return cls.z(int(m.group(3)), int(m.group(4)))
        return cls(X if m.group(5) == "x" else Y, int(m.group(6)))


# A monomial is a tuple of (Var, exponent) pairs sorted by Var, exponents >= 1.
ONE_MONOMIAL: tuple = ()


def mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(a: tuple) -> int:
    return sum(e for _, e in a)


def mono_divides(a: tuple, b: tuple) -> bool:
    db = dict(b)
    return all(db.get(v, 0) >= e for v, e in a)


def mono_div(b: tuple, a: tuple) -> tuple:
    """b / a, assuming a divides b."""
    d = dict(b)
    for v, e in a:
        d[v] -= e
    return tuple(sorted((v, e) for v, e in d.items() if e))


def mono_str(a: tuple) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in a) or "1"


class Polynomial:
    """Immutable sparse polynomial with exact integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                if c:
                    mono = tuple(sorted((v, e) for v, e in mono if e))
                    clean[mono] = clean.get(mono, 0) + c
                    if not clean[mono]:
                        del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({ONE_MONOMIAL: 1})

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls._raw({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def var(cls, v: Var) -> "Polynomial":
        return cls._raw({((v, 1),): 1})

    @classmethod
    def monomial(cls, mono: tuple, coeff: int = 1) -> "Polynomial":
        return cls({mono: coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, mono: tuple) -> int:
        return self._terms.get(tuple(mono), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> frozenset:
        return frozenset(v for mono in self._terms for v, _ in mono)

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self._terms}) <= 1

    # arithmetic -------------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial.zero()
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_vars(self, f) -> "Polynomial":
        """Substitute each variable by f(var), which returns a Var, a Polynomial or 0."""
        out = Polynomial.zero()
        cache: dict = {}
        for mono, c in self._terms.items():
            term = Polynomial.const(c)
            for v, e in mono:
                if v not in cache:
                    img = f(v)
                    if isinstance(img, Var):
                        img = Polynomial.var(img)
                    elif isinstance(img, int):
                        img = Polynomial.const(img)
                    cache[v] = img
                term = term * cache[v] ** e
                if not term:
                    break
            out = out + term
        return out

    def rename(self, f) -> "Polynomial":
        """Injective renaming of variables (fast path of map_vars)."""
        return Polynomial({tuple((f(v), e) for v, e in mono): c for mono, c in self._terms.items()})

    def set_zero(self, pred) -> "Polynomial":
        """Drop every term containing a variable v with pred(v)."""
        return Polynomial._raw(
            {m: c for m, c in self._terms.items() if not any(pred(v) for v, _ in m)}
        )

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    # formatting -------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: (-mono_degree(t[0]), t[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono_str(mono)
            else:
                body = f"{abs(c)}*{mono_str(mono)}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"Polynomial({self})"

    def to_json(self) -> list:
        return [
            {"coeff": c, "exps": [[str(v), e] for v, e in mono]} for mono, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            {tuple((Var.parse(v), int(e)) for v, e in t["exps"]): int(t["coeff"]) for t in data}
        )

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse sums of products such as ``3*x1*y2*z11^2 - z12``."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty polynomial")
        if text[0] not in "+-":
            text = "+" + text
        out = cls.zero()
        for sign, body in re.findall(r"([+-])([^+-]+)", text):
            coeff = 1
            mono: list = []
            for factor in body.split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                base, _, exp = factor.partition("^")
                mono.append((Var.parse(base), int(exp) if exp else 1))
            out = out + cls({tuple(mono): -coeff if sign == "-" else coeff})
        return out


def z(i: int, j: int) -> Polynomial:
    return Polynomial.var(Var.z(i, j))


def x(i: int) -> Polynomial:
    return Polynomial.var(Var.x(i))


def y(j: int) -> Polynomial:
    return Polynomial.var(Var.y(j))


def product(factors: Iterable[Polynomial]) -> Polynomial:
    out = Polynomial.one()
    for f in factors:
        out = out * f
    return out


def set_y_zero(f: Polynomial) -> Polynomial:
    return f.set_zero(lambda v: v.kind == Y)
