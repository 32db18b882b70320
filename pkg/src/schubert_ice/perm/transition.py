"""Transition at the maximal corner, pivots and diagram marching."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .blocks import block_offsets, complete
from .core import Cell, Partition, Permutation, as_perm, dominant_part, is_dominant, is_predominant, lehmer_code, rothe_diagram


def _full(w) -> Permutation:
    return complete(as_perm(w))


def maximal_corner(w) -> Cell:
    d = rothe_diagram(w)
    if not d:
        raise ValueError("empty diagram: the identity has no maximal corner")
    return Cell(*max(d))


def pivots(w) -> frozenset:
    """Maximally southeast dots strictly northwest of the maximal corner."""
    w = _full(w)
    r, s = maximal_corner(w)
    dots = [(i, w(i)) for i in range(1, r) if w(i) < s]
    return frozenset(
        Cell(i, j) for i, j in dots if not any(k > i and c > j for k, c in dots)
    )


def is_cover_transposition(v: Permutation, i: int, r: int) -> bool:
    """v <. v t_{ir} for i < r: v(i) < v(r) with no value of v strictly between at positions i<q<r."""
    a, b = v(i), v(r)
    return a < b and not any(a < v(q) < b for q in range(i + 1, r))


@dataclass(frozen=True)
class Transition:
    w: Permutation
    v: Permutation
    r: int
    s: int
    phi: tuple  # Permutations u with v <. u = v t_{ir}
    rows: tuple  # the i in I(v, r), matching phi


def transition(w) -> Transition:
    """Lascoux-Schutzenberger transition at the lexicographically largest inversion."""
    w = _full(w)
    n = len(w)
    inversion = None
    for i in range(n, 0, -1):
        for j in range(n, i, -1):
            if w(i) > w(j):
                inversion = (i, j)
                break
        if inversion:
            break
    if inversion is None:
        raise ValueError("the identity has no transition")
    r, k = inversion
    s = w(k)
    v = w.swap(r, k)
    rows = tuple(i for i in range(1, r) if is_cover_transposition(v, i, r))
    phi = tuple(v.swap(i, r) for i in rows)
    return Transition(w, v, r, s, phi, rows)


def march(w, pivot_row: int) -> Permutation:
    """Knutson-Yong marching of D_w at the pivot in ``pivot_row``.

    Inside the rectangle spanned by the pivot (i, j) and the maximal corner
    (r, s), the rows and columns not crossed out by other dots form a grid.
    Removing the pivot's lines frees row i and column j of that grid, and
    every diagram cell in the rectangle steps to the previous free row and
    the previous free column.
    """
    w = _full(w)
    r, s = maximal_corner(w)
    piv = {c.row: c for c in pivots(w)}
    if pivot_row not in piv:
        raise ValueError(f"row {pivot_row} carries no pivot of {w}")
    i, j = piv[pivot_row]
    winv = w.inverse()
    free_rows = [q for q in range(i, r + 1) if w(q) >= j]
    free_cols = [c for c in range(j, s + 1) if winv(c) >= i]
    prev_row = {b: a for a, b in zip(free_rows, free_rows[1:])}
    prev_col = {b: a for a, b in zip(free_cols, free_cols[1:])}
    d = rothe_diagram(w)
    moved = set()
    for q, c in d:
        if i <= q <= r and j <= c <= s:
            moved.add(Cell(prev_row[q], prev_col[c]))
        else:
            moved.add(Cell(q, c))
    code = [0] * len(w)
    for q, _ in moved:
        code[q - 1] += 1
    u = Permutation.from_code(code)
    if rothe_diagram(u) != frozenset(moved):
        raise AssertionError(f"marching {w} at row {pivot_row} did not produce a Rothe diagram")
    return u


@dataclass(frozen=True)
class PredominantProfile:
    """Dom(w) = (m_1^{l_1}, ..., m_k^{l_k}) padded to r-1 rows, plus the corner."""

    lam: Partition
    parts: tuple  # ((m_1, l_1), ..., (m_k, l_k)), m_k may be 0
    rho: tuple
    r: Optional[int]
    s: Optional[int]
    ell: int
    block: Permutation

    def pivots(self) -> frozenset:
        return frozenset(Cell(rho, m + l) for (m, l), rho in zip(self.parts, self.rho))


def corner_block(w) -> Optional[Permutation]:
    """The completed block whose diagram holds the maximal corner.

    None when the corner lies in the filled region between blocks, as for
    dominant permutations.
    """
    r, s = maximal_corner(w)
    for ro, co, blk in block_offsets(w):
        if (r - ro, s - co) in rothe_diagram(blk):
            return complete(blk)
    return None


def predominant_profile(w) -> PredominantProfile:
    w = _full(w)
    if not is_predominant(w):
        raise ValueError(f"{w} is not predominant")
    if is_dominant(w):
        return PredominantProfile(dominant_part(w), (), (), None, None, 0, w)
    blk = corner_block(w)
    if blk is None:
        raise ValueError(f"the maximal corner of {w} lies outside every block")
    r, s = maximal_corner(blk)
    lam = dominant_part(blk)
    padded = [lam.part(i) for i in range(1, r)]
    parts: list = []
    for p in padded:
        if parts and parts[-1][0] == p:
            parts[-1][1] += 1
        else:
            parts.append([p, 1])
    rho, acc = [], 0
    for _, l in parts:
        acc += l
        rho.append(acc)
    code = lehmer_code(blk)
    return PredominantProfile(
        lam, tuple((m, l) for m, l in parts), tuple(rho), r, s, code[r - 1], blk
    )
