"""Permutations, partial permutations and their diagrams.

Everything is 1-based: row 1 is the top row of the permutation matrix and
``w(i)`` is the column of the dot in row ``i``.  Partial permutations use
``None`` for an empty row or column, which behaves like a dot at infinity in
all the diagram inequalities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union


class Cell(NamedTuple):
    row: int
    col: int


Diagram = frozenset  # frozenset[Cell]


def diagram_to_json(cells) -> list[list[int]]:
    return [[c[0], c[1]] for c in sorted(cells)]


def diagram_from_json(data) -> frozenset:
    return frozenset(Cell(int(i), int(j)) for i, j in data)


class Partition(tuple):
    """A weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def cells(self) -> frozenset:
        return frozenset(Cell(i + 1, j + 1) for i, p in enumerate(self) for j in range(p))

    def __contains__(self, cell) -> bool:  # type: ignore[override]
        if isinstance(cell, tuple) and len(cell) == 2:
            i, j = cell
            return 1 <= i <= len(self) and 1 <= j <= self[i - 1]
        return super().__contains__(cell)

    def part(self, i: int) -> int:
        """lambda_i with the convention lambda_i = 0 past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


def _to_index(v) -> int:
    v = int(v)
    if v < 1:
        raise ValueError(f"entries are 1-based, got {v}")
    return v


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"not a permutation of 1..{len(entries)}: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",") if t.strip()))
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def from_code(cls, code: Sequence[int]) -> "Permutation":
        """Inverse of the Lehmer code; the size is len(code)."""
        n = len(code)
        unused = list(range(1, n + 1))
        out = []
        for c in code:
            if c >= len(unused):
                raise ValueError(f"invalid Lehmer code {tuple(code)}")
            out.append(unused.pop(c))
        return cls(tuple(out))

    def __str__(self):
        if len(self.entries) <= 9:
            return "".join(str(e) for e in self.entries)
        return ",".join(str(e) for e in self.entries)

    def __repr__(self):
        return f"Permutation({self})"

    def __len__(self):
        return len(self.entries)

    def __call__(self, i: int) -> int:
        return self.entries[i - 1]

    def __iter__(self):
        return iter(self.entries)

    # shared interface with PartialPermutation
    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries)

    @property
    def row_map(self) -> tuple:
        return self.entries

    @property
    def col_map(self) -> tuple:
        return self.inverse().entries

    @property
    def n(self) -> int:
        return len(self.entries)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.entries)
        for i, e in enumerate(self.entries):
            inv[e - 1] = i + 1
        return Permutation(tuple(inv))

    def length(self) -> int:
        e = self.entries
        return sum(1 for a, b in itertools.combinations(range(len(e)), 2) if e[a] > e[b])

    def is_identity(self) -> bool:
        return all(e == i + 1 for i, e in enumerate(self.entries))

    def swap(self, i: int, j: int) -> "Permutation":
        """Right multiplication by the transposition t_{ij} (swap positions)."""
        e = list(self.entries)
        e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
        return Permutation(tuple(e))

    def pad(self, n: int) -> "Permutation":
        if n < len(self.entries):
            raise ValueError("cannot shrink a permutation by padding")
        return Permutation(self.entries + tuple(range(len(self.entries) + 1, n + 1)))

    def trimmed(self) -> "Permutation":
        """Drop trailing fixed points (the S_infinity representative)."""
        e = list(self.entries)
        while e and e[-1] == len(e):
            e.pop()
        return Permutation(tuple(e))

    def to_partial(self) -> "PartialPermutation":
        return PartialPermutation(self.rows, self.cols, self.entries)

    def transpose(self) -> "Permutation":
        return self.inverse()

    def matrix(self) -> list[list[int]]:
        return self.to_partial().matrix()


@dataclass(frozen=True)
class PartialPermutation:
    """An m x n 0-1 matrix with at most one 1 in each row and column.

    ``assignment[i-1]`` is the column of the 1 in row ``i`` or ``None``.
    """

    m: int
    n: int
    assignment: tuple

    def __post_init__(self):
        a = tuple(None if c is None else _to_index(c) for c in self.assignment)
        if len(a) != self.m:
            raise ValueError(f"assignment has {len(a)} rows, expected {self.m}")
        used = [c for c in a if c is not None]
        if len(set(used)) != len(used):
            raise ValueError(f"two ones in one column: {a}")
        if any(c > self.n for c in used):
            raise ValueError(f"column out of range 1..{self.n}: {a}")
        object.__setattr__(self, "assignment", a)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "PartialPermutation":
        rows = [list(r) for r in rows]
        m = len(rows)
        n = len(rows[0]) if rows else 0
        assignment = []
        for r in rows:
            if len(r) != n:
                raise ValueError("ragged matrix")
            ones = [j + 1 for j, x in enumerate(r) if x]
            if len(ones) > 1 or any(x not in (0, 1) for x in r):
                raise ValueError(f"row {r} is not a partial permutation row")
            assignment.append(ones[0] if ones else None)
        return cls(m, n, tuple(assignment))

    @classmethod
    def parse(cls, text: str) -> "PartialPermutation":
        """Parse a 0-1 matrix written row by row, e.g. ``[010 100 000]`` or ``010/100/000``."""
        body = text.strip().strip("[]").replace("/", " ").replace(";", " ").split()
        if not body or any(set(r) - {"0", "1"} for r in body):
            raise ValueError(f"cannot parse partial permutation {text!r}")
        return cls.from_matrix([[int(ch) for ch in r] for r in body])

    def __call__(self, i: int) -> Optional[int]:
        return self.assignment[i - 1]

    @property
    def rows(self) -> int:
        return self.m

    @property
    def cols(self) -> int:
        return self.n

    @property
    def row_map(self) -> tuple:
        return self.assignment

    @property
    def col_map(self) -> tuple:
        inv: list = [None] * self.n
        for i, c in enumerate(self.assignment):
            if c is not None:
                inv[c - 1] = i + 1
        return tuple(inv)

    def matrix(self) -> list[list[int]]:
        return [[1 if c == j + 1 else 0 for j in range(self.n)] for c in self.assignment]

    def transpose(self) -> "PartialPermutation":
        return PartialPermutation(self.n, self.m, self.col_map)

    def length(self) -> int:
        return len(rothe_diagram(self))

    def is_permutation(self) -> bool:
        return self.m == self.n and None not in self.assignment

    def to_permutation(self) -> Permutation:
        if not self.is_permutation():
            raise ValueError("partial permutation is not a full permutation matrix")
        return Permutation(self.assignment)

    def __str__(self):
        return "[" + " ".join("".join(str(x) for x in r) for r in self.matrix()) + "]"


AnyPerm = Union[Permutation, PartialPermutation]

_INF = float("inf")


def as_perm(w) -> AnyPerm:
    if isinstance(w, (Permutation, PartialPermutation)):
        return w
    if isinstance(w, str):
        text = w.strip()
        if text.startswith("[") or "/" in text:
            return PartialPermutation.parse(text)
        return Permutation.parse(text)
    return Permutation(tuple(w))


def rothe_diagram(w) -> frozenset:
    """Cells (i, j) with w(i) > j and w^{-1}(j) > i (empty rows/cols count as infinity)."""
    w = as_perm(w)
    rmap, cmap = w.row_map, w.col_map
    cells = []
    for i in range(1, w.rows + 1):
        wi = rmap[i - 1]
        wi = _INF if wi is None else wi
        for j in range(1, w.cols + 1):
            if wi > j:
                wj = cmap[j - 1]
                if wj is None or wj > i:
                    cells.append(Cell(i, j))
    return frozenset(cells)


def essential_set(w) -> frozenset:
    d = rothe_diagram(w)
    return frozenset(c for c in d if (c[0] + 1, c[1]) not in d and (c[0], c[1] + 1) not in d)


def lehmer_code(w) -> tuple:
    w = as_perm(w)
    d = rothe_diagram(w)
    code = [0] * w.rows
    for i, _ in d:
        code[i - 1] += 1
    return tuple(code)


def diagram_rows(w) -> list[frozenset]:
    w = as_perm(w)
    rows: list[set] = [set() for _ in range(w.rows)]
    for i, j in rothe_diagram(w):
        rows[i - 1].add(j)
    return [frozenset(r) for r in rows]


def rank_function(w, i: int, j: int) -> int:
    """#{k <= i : w(k) <= j}."""
    w = as_perm(w)
    if not (1 <= i <= w.rows and 1 <= j <= w.cols):
        raise IndexError(f"({i},{j}) outside the {w.rows}x{w.cols} grid")
    return sum(1 for c in w.row_map[:i] if c is not None and c <= j)


def rank_matrix(w) -> list[list[int]]:
    """rank_matrix(w)[i-1][j-1] == rank_function(w, i, j), by prefix sums."""
    w = as_perm(w)
    out = []
    counts = [0] * (w.cols + 1)
    for c in w.row_map:
        if c is not None:
            counts[c] += 1
        acc, row = 0, []
        for j in range(1, w.cols + 1):
            acc += counts[j]
            row.append(acc)
        out.append(row)
    return out


def bruhat_leq(v, w) -> bool:
    v, w = as_perm(v), as_perm(w)
    if (v.rows, v.cols) != (w.rows, w.cols):
        raise ValueError(f"size mismatch: {v} vs {w}")
    rv, rw = rank_matrix(v), rank_matrix(w)
    return all(a >= b for ra, rb in zip(rv, rw) for a, b in zip(ra, rb))


def bruhat_cover(v, w) -> bool:
    v, w = as_perm(v), as_perm(w)
    return v != w and bruhat_leq(v, w) and len(rothe_diagram(w)) == len(rothe_diagram(v)) + 1


def dominant_part(w) -> Partition:
    """The partition formed by {(i,j) in D_w : r_w(i,j) = 0}."""
    w = as_perm(w)
    parts = []
    running_min = _INF
    for c in w.row_map:
        if c is not None:
            running_min = min(running_min, c)
        parts.append(int(min(running_min - 1, w.cols)))
    return Partition(parts)


# --- classification --------------------------------------------------------

CDG_PATTERNS = tuple(
    Permutation.parse(p)
    for p in ("13254", "21543", "214635", "215364", "241635", "315264", "215634", "4261735")
)


def standardize(seq: Sequence[int]) -> tuple:
    order = sorted(seq)
    rank = {v: k + 1 for k, v in enumerate(order)}
    return tuple(rank[v] for v in seq)


def pattern_contains(w, p) -> bool:
    """True if some subsequence of w has the same relative order as p."""
    w, p = as_perm(w), as_perm(p)
    we, pe = tuple(w.entries), tuple(p.entries)
    k = len(pe)
    if k > len(we):
        return False
    # pe[t] < pe[s] must match the subsequence; check pairwise relations lazily
    for idx in itertools.combinations(range(len(we)), k):
        sub = [we[t] for t in idx]
        if all((sub[a] < sub[b]) == (pe[a] < pe[b]) for a in range(k) for b in range(a + 1, k)):
            return True
    return False


def is_dominant(w) -> bool:
    c = lehmer_code(w)
    return all(a >= b for a, b in zip(c, c[1:]))


def is_vexillary(w) -> bool:
    rows = [r for r in diagram_rows(w)]
    return all(a <= b or b <= a for a, b in itertools.combinations(rows, 2))


def is_predominant(w) -> bool:
    """Code of the form lambda 0^h ell: all but the last nonzero entry weakly decrease."""
    c = list(lehmer_code(w))
    while c and c[-1] == 0:
        c.pop()
    head = c[:-1]
    return all(a >= b for a, b in zip(head, head[1:]))


def is_copredominant(w) -> bool:
    return is_predominant(as_perm(w).transpose())


def is_banner(w) -> bool:
    from .blocks import block_decompose

    return all(
        is_predominant(b) or is_copredominant(b) or is_vexillary(b) for b in block_decompose(w)
    )


def is_block_predominant(w) -> bool:
    from .blocks import block_decompose

    return all(is_predominant(b) for b in block_decompose(w))


def avoids_cdg_patterns(w) -> bool:
    w = as_perm(w)
    if not isinstance(w, Permutation):
        from .blocks import complete

        w = complete(w)
    return not any(pattern_contains(w, p) for p in CDG_PATTERNS)


def classify(w) -> dict:
    return {
        "dominant": is_dominant(w),
        "vexillary": is_vexillary(w),
        "predominant": is_predominant(w),
        "copredominant": is_copredominant(w),
        "banner": is_banner(w),
        "block_predominant": is_block_predominant(w),
        "cdg_pattern_avoiding": avoids_cdg_patterns(w),
    }


def all_permutations(n: int):
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)
