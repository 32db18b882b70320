"""Bumpless pipe dreams.

A grid is stored as a tuple of row strings over the alphabet ``rjc.hv``:

    r  elbow joining the bottom and right edges (a pipe turning down)
    j  elbow joining the top and left edges (a pipe turning left)
    c  crossing
    .  blank
    h  horizontal segment
    v  vertical segment

Pipes enter at the right edge and travel only west and south.
"""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .perm import Cell, PartialPermutation, Permutation, as_perm, complete
from .poly.polynomial import Polynomial, x, y


class Tile(enum.Enum):
    ELBOW_SE = "r"
    ELBOW_NW = "j"
    CROSS = "c"
    BLANK = "."
    HORIZONTAL = "h"
    VERTICAL = "v"


# N, E, S, W
EDGES = {
    "r": (False, True, True, False),
    "j": (True, False, False, True),
    "c": (True, True, True, True),
    ".": (False, False, False, False),
    "h": (False, True, False, True),
    "v": (True, False, True, False),
}
_BY_EDGES = {e: t for t, e in EDGES.items()}

ASCII = {"r": "┌", "j": "┘", "c": "┼", ".": ".", "h": "─", "v": "│"}
_FROM_ASCII = {ch: t for t, ch in ASCII.items()}


class BpdError(ValueError):
    pass


@dataclass(frozen=True)
class Bpd:
    grid: tuple
    perm: Optional[PartialPermutation] = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        grid = tuple(str(r) for r in self.grid)
        if any(len(r) != len(grid[0]) for r in grid):
            raise BpdError("ragged grid")
        if any(ch not in EDGES for r in grid for ch in r):
            raise BpdError("unknown tile")
        object.__setattr__(self, "grid", grid)
        if self.perm is None:
            object.__setattr__(self, "perm", permutation_of_grid(grid))

    @property
    def m(self) -> int:
        return len(self.grid)

    @property
    def n(self) -> int:
        return len(self.grid[0]) if self.grid else 0

    def tile(self, i: int, j: int) -> Tile:
        return Tile(self.grid[i - 1][j - 1])

    def encoding(self) -> str:
        return "".join(self.grid)

    def to_json(self) -> dict:
        out = {"n": self.n, "tiles": self.encoding()}
        if self.m != self.n:
            out["m"] = self.m
        return out

    @classmethod
    def from_json(cls, data) -> "Bpd":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        m = int(data.get("m", n))
        tiles = data["tiles"]
        if len(tiles) != m * n:
            raise BpdError(f"expected {m * n} tiles, got {len(tiles)}")
        return cls(tuple(tiles[k * n:(k + 1) * n] for k in range(m)))

    def __str__(self):
        return render_ascii(self)


def _check_edges(grid) -> None:
    m, n = len(grid), len(grid[0])
    for i in range(m):
        for j in range(n):
            N, E, S, W = EDGES[grid[i][j]]
            if i == 0 and N:
                raise BpdError(f"pipe leaves through the top at ({i + 1},{j + 1})")
            if j == 0 and W:
                raise BpdError(f"pipe leaves through the left at ({i + 1},{j + 1})")
            if j + 1 < n and E != EDGES[grid[i][j + 1]][3]:
                raise BpdError(f"dangling horizontal edge between ({i + 1},{j + 1}) and ({i + 1},{j + 2})")
            if i + 1 < m and S != EDGES[grid[i + 1][j]][0]:
                raise BpdError(f"dangling vertical edge between ({i + 1},{j + 1}) and ({i + 2},{j + 1})")


def trace_pipes(grid) -> dict:
    """Map entry row -> (exit column, visited cells) for every pipe entering on the right."""
    m, n = len(grid), len(grid[0])
    pipes = {}
    for start in range(m):
        if not EDGES[grid[start][n - 1]][1]:
            continue
        i, j, heading = start, n - 1, "W"
        path = []
        while True:
            t = grid[i][j]
            path.append((i + 1, j + 1))
            if heading == "W":
                if t in "hc":
                    pass
                elif t == "r":
                    heading = "S"
                else:
                    raise BpdError(f"pipe from row {start + 1} hits {t!r} at ({i + 1},{j + 1})")
            else:
                if t in "vc":
                    pass
                elif t == "j":
                    heading = "W"
                else:
                    raise BpdError(f"pipe from row {start + 1} hits {t!r} at ({i + 1},{j + 1})")
            if heading == "W":
                j -= 1
                if j < 0:
                    raise BpdError(f"pipe from row {start + 1} leaves through the left edge")
            else:
                i += 1
                if i == m:
                    pipes[start + 1] = (j + 1, tuple(path))
                    break
    return pipes


def permutation_of_grid(grid) -> PartialPermutation:
    if not grid or not grid[0]:
        return PartialPermutation(len(grid), 0, (None,) * len(grid))
    _check_edges(grid)
    m, n = len(grid), len(grid[0])
    pipes = trace_pipes(grid)
    bottoms = sum(1 for j in range(n) if EDGES[grid[m - 1][j]][2])
    if bottoms != len(pipes):
        raise BpdError("pipe count at the bottom differs from the right edge")
    # each crossing tile is shared by exactly one westbound and one southbound pipe
    seen: dict = {}
    owner: dict = {}
    for row, (_, path) in pipes.items():
        for cell in path:
            owner.setdefault(cell, []).append(row)
    for cell, rows in owner.items():
        if len(rows) == 2:
            pair = tuple(sorted(rows))
            if pair in seen:
                raise BpdError(f"pipes {pair} cross twice, at {seen[pair]} and {cell}")
            seen[pair] = cell
    assignment = tuple(pipes[i][0] if i in pipes else None for i in range(1, m + 1))
    return PartialPermutation(m, n, assignment)


def permutation_of(P) -> PartialPermutation:
    grid = P.grid if isinstance(P, Bpd) else tuple(P)
    return permutation_of_grid(grid)


def rothe_bpd(w) -> Bpd:
    """The BPD with elbows at the dots of ``w``, no NW elbows, and diagram D_w."""
    w = as_perm(w)
    full = complete(w)
    N = len(full)
    winv = full.inverse()
    rows = []
    for i in range(1, N + 1):
        row = []
        for j in range(1, N + 1):
            horiz = full(i) < j  # pipe i runs west along row i from the right edge
            vert = winv(j) < i  # pipe winv(j) runs south along column j
            if full(i) == j:
                row.append("r")
            elif horiz and vert:
                row.append("c")
            elif horiz:
                row.append("h")
            elif vert:
                row.append("v")
            else:
                row.append(".")
        rows.append("".join(row))
    P = Bpd(tuple(rows), full.to_partial())
    if isinstance(w, PartialPermutation) and not w.is_permutation():
        return restrict(P, w.m, w.n, perm=w)
    return P


_BENDS = frozenset("rj")


def _droop(grid: list, i: int, j: int, k: int, l: int) -> tuple:
    """Apply the droop of the elbow at (i,j) into the blank at (k,l); 0-based indices."""
    g = [list(r) for r in grid]
    g[i][j] = "."
    for c in range(j + 1, l):  # old horizontal run in row i
        g[i][c] = {"h": ".", "c": "v"}[g[i][c]]
    for q in range(i + 1, k):  # old vertical run in column j
        g[q][j] = {"v": ".", "c": "h"}[g[q][j]]
    if g[i][l] != "h" or g[k][j] != "v":
        raise AssertionError("droop corners are not plain segments")
    g[i][l] = "r"
    g[k][j] = "r"
    for q in range(i + 1, k):  # new vertical run in column l
        g[q][l] = {".": "v", "h": "c"}[g[q][l]]
    for c in range(j + 1, l):  # new horizontal run in row k
        g[k][c] = {".": "h", "v": "c"}[g[k][c]]
    g[k][l] = "j"
    return tuple("".join(r) for r in g)


@dataclass(frozen=True)
class DroopMove:
    source: Cell
    target: Cell


def droops(P: Bpd) -> list:
    """All permissible droops of ``P`` with their results."""
    grid = P.grid
    m, n = P.m, P.n
    out = []
    for i in range(m):
        for j in range(n):
            if grid[i][j] != "r":
                continue
            for k in range(i + 1, m):
                for l in range(j + 1, n):
                    if grid[k][l] != ".":
                        continue
                    if any(
                        grid[q][c] in _BENDS and (q, c) != (i, j)
                        for q in range(i, k + 1)
                        for c in range(j, l + 1)
                    ):
                        continue
                    result = Bpd(_droop(grid, i, j, k, l), P.perm)
                    out.append((DroopMove(Cell(i + 1, j + 1), Cell(k + 1, l + 1)), result))
    return out


def _closure(w: Permutation) -> frozenset:
    start = rothe_bpd(w)
    seen = {start.encoding(): start}
    queue = deque([start])
    while queue:
        P = queue.popleft()
        for _, Q in droops(P):
            key = Q.encoding()
            if key not in seen:
                seen[key] = Q
                queue.append(Q)
    return frozenset(seen.values())


@lru_cache(maxsize=4096)
def _enumerate_cached(w: Permutation) -> frozenset:
    return _closure(w)


def enumerate_bpds(w) -> frozenset:
    """BPD(w): droop closure of the Rothe BPD; partial permutations go through the completion."""
    w = as_perm(w)
    if isinstance(w, PartialPermutation) and not w.is_permutation():
        return frozenset(restrict(P, w.m, w.n, perm=w) for P in _enumerate_cached(complete(w)))
    if isinstance(w, PartialPermutation):
        w = w.to_permutation()
    return _enumerate_cached(w)


BRUTE_FORCE_LIMIT = 6


@lru_cache(maxsize=8)
def _all_reduced_tilings(n: int) -> dict:
    """Every n x n tiling satisfying the three BPD conditions, grouped by permutation."""
    by_perm: dict = {}
    cells = [(i, j) for i in range(n) for j in range(n)]
    grid = [[""] * n for _ in range(n)]

    def place(idx):
        if idx == len(cells):
            rows = tuple("".join(r) for r in grid)
            try:
                p = permutation_of_grid(rows)
            except BpdError:
                return
            if p.is_permutation():
                by_perm.setdefault(p.to_permutation(), []).append(rows)
            return
        i, j = cells[idx]
        need_n = EDGES[grid[i - 1][j]][2] if i > 0 else False
        need_w = EDGES[grid[i][j - 1]][1] if j > 0 else False
        for t, (N, E, S, W) in EDGES.items():
            if N != need_n or W != need_w:
                continue
            if j == n - 1 and not E:
                continue
            if i == n - 1 and not S:
                continue
            grid[i][j] = t
            place(idx + 1)
        grid[i][j] = ""

    place(0)
    return by_perm


def enumerate_bpds_bruteforce(w) -> frozenset:
    """Independent oracle: backtrack over all tilings of the n x n grid."""
    w = complete(as_perm(w))
    n = len(w)
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force enumeration is limited to n <= {BRUTE_FORCE_LIMIT}")
    return frozenset(Bpd(g, w.to_partial()) for g in _all_reduced_tilings(n).get(w, []))


def diagram(P: Bpd) -> frozenset:
    return frozenset(
        Cell(i + 1, j + 1) for i, row in enumerate(P.grid) for j, t in enumerate(row) if t == "."
    )


def cell_weight(cells) -> Polynomial:
    out = Polynomial.one()
    for i, j in sorted(cells):
        out = out * (x(i) - y(j))
    return out


def weight(P: Bpd) -> Polynomial:
    return cell_weight(diagram(P))


def restrict(P: Bpd, m: int, n: int, perm=None) -> Bpd:
    if not (0 <= m <= P.m and 0 <= n <= P.n):
        raise BpdError(f"cannot restrict a {P.m}x{P.n} grid to {m}x{n}")
    grid = tuple(row[:n] for row in P.grid[:m])
    if perm is None:
        perm = permutation_of_grid(grid) if n else None
    return Bpd(grid, perm)


def glue(P: Bpd, a: int, b: int, lower: Bpd, upper: Bpd) -> Bpd:
    """Overwrite the lower-left block (rows > a, cols <= b) and the upper-right
    block (rows <= a, cols > b) of ``P`` with the given grids."""
    g = [list(r) for r in P.grid]
    for i, row in enumerate(lower.grid):
        for j, t in enumerate(row):
            g[a + i][j] = t
    for i, row in enumerate(upper.grid):
        for j, t in enumerate(row):
            g[i][b + j] = t
    return Bpd(tuple("".join(r) for r in g), P.perm)


def render_ascii(P: Bpd) -> str:
    return "\n".join("".join(ASCII[t] for t in row) for row in P.grid)


def parse_ascii(text: str) -> Bpd:
    rows = [line.strip() for line in text.strip().splitlines() if line.strip()]
    try:
        return Bpd(tuple("".join(_FROM_ASCII[ch] for ch in row) for row in rows))
    except KeyError as exc:
        raise BpdError(f"unknown character {exc.args[0]!r}") from None
