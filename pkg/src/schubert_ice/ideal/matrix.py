"""Generic matrices, minors and the Fulton / CDG generating sets."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from ..perm import Partition, as_perm, dominant_part, essential_set, rank_matrix
from ..poly.order import DIAGONAL, ANTIDIAGONAL, OrderError, TermOrder, antidiagonal_monomial, diagonal_monomial, leading_term
from ..poly.polynomial import Polynomial, Var, Z


@dataclass(frozen=True)
class GenericMatrix:
    """The m x n matrix of variables z_ij with the cells of ``zeroed`` set to 0."""

    m: int
    n: int
    zeroed: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "zeroed", Partition(self.zeroed))
        if len(self.zeroed) > self.m or (self.zeroed and self.zeroed[0] > self.n):
            raise ValueError(f"partition {tuple(self.zeroed)} does not fit in {self.m}x{self.n}")

    def is_zero(self, i: int, j: int) -> bool:
        return (i, j) in self.zeroed

    def entry(self, i: int, j: int) -> Polynomial:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexError(f"({i},{j}) outside the {self.m}x{self.n} matrix")
        return Polynomial.zero() if self.is_zero(i, j) else Polynomial.var(Var.z(i, j))


class Minors:
    """Memoized cofactor expansion; subminors are shared across calls."""

    def __init__(self, M: GenericMatrix):
        self.M = M
        self._memo: dict = {}

    def det(self, rows, cols) -> Polynomial:
        rows, cols = tuple(rows), tuple(cols)
        if len(rows) != len(cols):
            raise ValueError("a minor needs as many rows as columns")
        return self._det(rows, cols)

    def _det(self, rows: tuple, cols: tuple) -> Polynomial:
        if not rows:
            return Polynomial.one()
        key = (rows, cols)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        i, rest = rows[0], rows[1:]
        out = Polynomial.zero()
        for k, j in enumerate(cols):
            if self.M.is_zero(i, j):
                continue
            sub = self._det(rest, cols[:k] + cols[k + 1:])
            if sub:
                term = sub * Polynomial.var(Var.z(i, j))
                out = out - term if k % 2 else out + term
        self._memo[key] = out
        return out


def _index_range(r) -> tuple:
    return tuple(range(1, r + 1)) if isinstance(r, int) else tuple(sorted(r))


def minor_records(M, k: int, rows, cols) -> list:
    """[(rows, cols, det)] for the nonzero k x k minors on the given ranges."""
    D = M if isinstance(M, Minors) else Minors(M)
    rows, cols = _index_range(rows), _index_range(cols)
    if k > min(len(rows), len(cols)):
        return []
    out = []
    for R in itertools.combinations(rows, k):
        for C in itertools.combinations(cols, k):
            f = D.det(R, C)
            if f:
                out.append((R, C, f))
    return out


def minors(M, k: int, rows, cols) -> list:
    """All nonzero k x k minors of M on rows x cols (an int r means [r])."""
    return [f for _, _, f in minor_records(M, k, rows, cols)]


def check_minor_leads(records, order: TermOrder) -> None:
    """Abort when an order declared diagonal (antidiagonal) misbehaves on a minor."""
    if order.classification not in (DIAGONAL, ANTIDIAGONAL):
        return
    expect = diagonal_monomial if order.classification == DIAGONAL else antidiagonal_monomial
    for R, C, f in records:
        lead, _ = leading_term(f, order)
        if lead != expect(R, C):
            raise OrderError(
                f"order {order.name} is declared {order.classification} but the minor on rows {R}, cols {C} leads with a different term"
            )


@dataclass(frozen=True)
class Ideal:
    """A list of generators in the variables z_ij of an m x n grid."""

    generators: tuple
    ambient: tuple
    records: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(g for g in self.generators if g)
        m, n = self.ambient
        for g in gens:
            for v in g.variables():
                if v.kind != Z or not (1 <= v.i <= m and 1 <= v.j <= n):
                    raise ValueError(f"generator variable {v} lies outside the {m}x{n} grid")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "ambient", (int(m), int(n)))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def variables(self) -> tuple:
        m, n = self.ambient
        return tuple(Var.z(i, j) for i in range(1, m + 1) for j in range(1, n + 1))

    def to_json(self) -> dict:
        return {"ambient": list(self.ambient), "gens": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, data) -> "Ideal":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(Polynomial.from_json(g) for g in data["gens"]), tuple(data["ambient"]))


def _ambient(w) -> tuple:
    w = as_perm(w)
    return (w.rows, w.cols)


def fulton_generators(w) -> Ideal:
    """(r_w(i,j)+1)-minors of Z_[i],[j] over the essential set."""
    w = as_perm(w)
    m, n = _ambient(w)
    D = Minors(GenericMatrix(m, n))
    ranks = rank_matrix(w)
    records: list = []
    for i, j in sorted(essential_set(w)):
        records.extend(minor_records(D, ranks[i - 1][j - 1] + 1, i, j))
    return _dedup(records, (m, n))


def cdg_generators(w) -> Ideal:
    """Dominant-part variables plus minors of the dominant-part-zeroed matrix."""
    w = as_perm(w)
    m, n = _ambient(w)
    lam = dominant_part(w)
    D = Minors(GenericMatrix(m, n, lam))
    ranks = rank_matrix(w)
    records: list = [((i,), (j,), Polynomial.var(Var.z(i, j))) for i, j in sorted(lam.cells())]
    for i, j in sorted(essential_set(w)):
        if (i, j) in lam:
            continue
        records.extend(minor_records(D, ranks[i - 1][j - 1] + 1, i, j))
    return _dedup(records, (m, n))


def _dedup(records, ambient) -> Ideal:
    seen: set = set()
    keep = []
    for R, C, f in records:
        if f in seen or -f in seen:
            continue
        seen.add(f)
        keep.append((R, C, f))
    return Ideal(tuple(f for _, _, f in keep), ambient, tuple(keep))


def _shift(I: Ideal, di: int, dj: int, ambient) -> Ideal:
    m, n = ambient

    def image(v: Var):
        if v.i + di <= m and v.j + dj <= n:
            return Var.z(v.i + di, v.j + dj)
        return 0

    return Ideal(tuple(g.map_vars(image) for g in I.generators), (m, n))


def shift_down(I: Ideal, a: int, ambient=None) -> Ideal:
    """Send z_ij to z_{i+a,j}; variables pushed below the grid become 0."""
    if a < 0:
        raise ValueError("shift must be nonnegative")
    return _shift(I, a, 0, I.ambient if ambient is None else ambient)


def shift_right(I: Ideal, b: int, ambient=None) -> Ideal:
    """Send z_ij to z_{i,j+b}; variables pushed past the grid become 0."""
    if b < 0:
        raise ValueError("shift must be nonnegative")
    return _shift(I, 0, b, I.ambient if ambient is None else ambient)
