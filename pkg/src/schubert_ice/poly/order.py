"""Lexicographic term orders on the matrix variables z_ij."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .polynomial import Polynomial, Var, Z

DIAGONAL = "diagonal"
ANTIDIAGONAL = "antidiagonal"
UNVERIFIED = "unverified"
NEITHER = "neither"


class OrderError(ValueError):
    pass


@dataclass(frozen=True)
class TermOrder:
    """Lex order over ``variables`` listed from largest to smallest."""

    name: str
    m: int
    n: int
    variables: tuple
    classification: str = UNVERIFIED
    rank: dict = field(init=False, compare=False, hash=False, repr=False)

    def __post_init__(self):
        vs = tuple(self.variables)
        if len(set(vs)) != len(vs) or any(v.kind != Z for v in vs):
            raise OrderError("a term order lists distinct matrix variables")
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "rank", {v: k for k, v in enumerate(vs)})

    @classmethod
    def row_lex(cls, m: int, n: int | None = None) -> "TermOrder":
        n = m if n is None else n
        vs = tuple(Var.z(i, j) for i in range(1, m + 1) for j in range(1, n + 1))
        return cls("row-lex", m, n, vs, DIAGONAL)

    @classmethod
    def col_lex(cls, m: int, n: int | None = None) -> "TermOrder":
        n = m if n is None else n
        vs = tuple(Var.z(i, j) for j in range(1, n + 1) for i in range(1, m + 1))
        return cls("col-lex", m, n, vs, DIAGONAL)

    @classmethod
    def antidiag_lex(cls, m: int, n: int | None = None) -> "TermOrder":
        n = m if n is None else n
        vs = tuple(Var.z(i, j) for i in range(1, m + 1) for j in range(n, 0, -1))
        return cls("antidiag-lex", m, n, vs, ANTIDIAGONAL)

    @classmethod
    def custom(cls, variables, m: int | None = None, n: int | None = None, name: str | None = None) -> "TermOrder":
        vs = tuple(Var.parse(v) if isinstance(v, str) else v for v in variables)
        m = max(v.i for v in vs) if m is None else m
        n = max(v.j for v in vs) if n is None else n
        label = name or "custom:" + ",".join(str(v) for v in vs)
        return cls(label, m, n, vs, UNVERIFIED)

    @classmethod
    def random(cls, m: int, n: int | None = None, seed: int = 0) -> "TermOrder":
        n = m if n is None else n
        vs = [Var.z(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
        random.Random(seed).shuffle(vs)
        return cls.custom(vs, m, n, name=f"random-lex(seed={seed})")

    @classmethod
    def named(cls, name: str, m: int, n: int | None = None) -> "TermOrder":
        n = m if n is None else n
        if name in ("row-lex", "rowlex", "row"):
            return cls.row_lex(m, n)
        if name in ("col-lex", "collex", "col"):
            return cls.col_lex(m, n)
        if name in ("antidiag", "antidiag-lex", "antidiaglex"):
            return cls.antidiag_lex(m, n)
        if name.startswith("custom:"):
            order = cls.custom(name[len("custom:"):].split(","), m, n)
            missing = [v for v in cls.row_lex(m, n).variables if v not in order.rank]
            if missing:
                raise OrderError(f"custom order omits {', '.join(map(str, missing))}")
            return order
        raise OrderError(f"unknown term order {name!r}")

    def with_classification(self, classification: str) -> "TermOrder":
        return TermOrder(self.name, self.m, self.n, self.variables, classification)

    def extend(self, m: int, n: int) -> "TermOrder":
        """Same kind of order on a larger grid (named orders only)."""
        if m <= self.m and n <= self.n:
            return self
        if self.name in ("row-lex", "col-lex", "antidiag-lex"):
            return TermOrder.named(self.name, max(m, self.m), max(n, self.n))
        raise OrderError(f"order {self.name} does not cover a {m}x{n} grid")

    def key(self, mono: tuple) -> tuple:
        """Exponent vector in order position; lex comparison of keys is the order."""
        vec = [0] * len(self.variables)
        rank = self.rank
        for v, e in mono:
            try:
                vec[rank[v]] = e
            except KeyError:
                raise OrderError(f"variable {v} is not ordered by {self.name}") from None
        return tuple(vec)

    def compare(self, a: tuple, b: tuple) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def leading_term(f: Polynomial, order: TermOrder) -> tuple:
    """(monomial, coefficient) of the order-largest term of f."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading term")
    mono = max(f.monomials(), key=order.key)
    return mono, f.coefficient(mono)


def diagonal_monomial(rows, cols) -> tuple:
    return tuple(sorted((Var.z(i, j), 1) for i, j in zip(sorted(rows), sorted(cols))))


def antidiagonal_monomial(rows, cols) -> tuple:
    return tuple(sorted((Var.z(i, j), 1) for i, j in zip(sorted(rows), sorted(cols, reverse=True))))


def classify_order(order: TermOrder, kmax: int, m: int | None = None, n: int | None = None) -> str:
    """Check every k x k minor (k <= kmax) of the generic m x n matrix."""
    from ..ideal.matrix import GenericMatrix, Minors

    m = order.m if m is None else m
    n = order.n if n is None else n
    M = Minors(GenericMatrix(m, n))
    diag = anti = True
    for k in range(1, min(kmax, m, n) + 1):
        for rows in itertools.combinations(range(1, m + 1), k):
            for cols in itertools.combinations(range(1, n + 1), k):
                lead, _ = leading_term(M.det(rows, cols), order)
                diag = diag and lead == diagonal_monomial(rows, cols)
                anti = anti and lead == antidiagonal_monomial(rows, cols)
                if not (diag or anti):
                    return NEITHER
    if diag and anti:
        return DIAGONAL if kmax <= 1 else NEITHER
    return DIAGONAL if diag else ANTIDIAGONAL


def verified(order: TermOrder, kmax: int) -> TermOrder:
    return order.with_classification(classify_order(order, kmax))
