"""Completion of partial permutations and the block sum construction."""

from __future__ import annotations

from .core import Permutation, PartialPermutation, as_perm, rothe_diagram


def complete(p) -> Permutation:
    """Smallest permutation whose diagram equals the diagram of ``p``.

    Empty rows are sent, in increasing order, to fresh columns n+1, n+2, ...;
    empty columns receive their dots, in increasing order, from fresh rows
    m+1, m+2, ...  Neither step creates diagram cells.
    """
    p = as_perm(p)
    if isinstance(p, Permutation):
        return p
    fresh_col = p.n
    entries = []
    for c in p.assignment:
        if c is None:
            fresh_col += 1
            entries.append(fresh_col)
        else:
            entries.append(c)
    entries.extend(j + 1 for j, r in enumerate(p.col_map) if r is None)
    return Permutation(tuple(entries))


def same_infinite_perm(a, b) -> bool:
    """Equality in S_infinity: completions agree after padding with fixed points."""
    return complete(a).trimmed() == complete(b).trimmed()


def _partial(w) -> PartialPermutation:
    w = as_perm(w)
    return w.to_partial() if isinstance(w, Permutation) else w


def block_sum(u, v) -> PartialPermutation:
    """The partial permutation whose diagram is [a]x[b] beside D(v) over D(u).

    ``u`` has b columns, ``v`` has a rows.  Start from the anti-block matrix
    [[0, v], [u, 0]] and repeatedly place a one at the lexicographically
    smallest diagram cell of the lower-right block until that block carries
    no diagram cells.
    """
    u, v = _partial(u), _partial(v)
    a, b = v.m, u.n
    m, n = a + u.m, b + v.n
    assignment = [None if c is None else c + b for c in v.assignment]
    assignment += list(u.assignment)
    while True:
        w = PartialPermutation(m, n, tuple(assignment))
        residual = sorted(c for c in rothe_diagram(w) if c[0] > a and c[1] > b)
        if not residual:
            return w
        i, j = residual[0]
        if assignment[i - 1] is not None or j in assignment:
            raise AssertionError(f"block sum fill hit an occupied line at {(i, j)}")
        assignment[i - 1] = j


def block_sum_all(blocks) -> PartialPermutation:
    blocks = list(blocks)
    if not blocks:
        raise ValueError("need at least one block")
    acc = _partial(blocks[-1])
    for blk in reversed(blocks[:-1]):
        acc = block_sum(blk, acc)
    return acc


def _submatrix(p: PartialPermutation, r0: int, r1: int, c0: int, c1: int) -> PartialPermutation:
    """Rows r0..r1 and columns c0..c1 (inclusive), re-indexed from 1."""
    assignment = []
    for i in range(r0, r1 + 1):
        c = p.assignment[i - 1]
        assignment.append(c - c0 + 1 if c is not None and c0 <= c <= c1 else None)
    return PartialPermutation(r1 - r0 + 1, c1 - c0 + 1, tuple(assignment))


def _trim_rows(p: PartialPermutation) -> PartialPermutation:
    target = complete(p).trimmed()
    while p.m > 0:
        q = PartialPermutation(p.m - 1, p.n, p.assignment[:-1])
        if complete(q).trimmed() != target:
            break
        p = q
    return p


def _trim_cols(p: PartialPermutation) -> PartialPermutation:
    return _trim_rows(p.transpose()).transpose()


def find_split(w):
    """Lexicographically smallest (a, b) at which ``w`` is a block sum, or None."""
    p = _partial(w)
    d = rothe_diagram(p)
    for a in range(1, p.m):
        for b in range(1, p.n):
            if (a, b) not in d:
                break
            if not all((i, j) in d for i in range(1, a + 1) for j in range(1, b + 1)):
                continue
            if any(i > a and j > b for i, j in d):
                continue
            return a, b
    return None


def split(w, a: int, b: int):
    """The pair (u, v) with w = u (+) v at the split point (a, b)."""
    p = _partial(w)
    u = _trim_rows(_submatrix(p, a + 1, p.m, 1, b))
    v = _trim_cols(_submatrix(p, 1, a, b + 1, p.n))
    return u, v


def block_decompose(w) -> list:
    """Maximal decomposition w = u1 (+) u2 (+) ... (+) uk, bottom-left block first.

    A diagram without any split (the identity included) is a single block.
    """
    return [blk for _, _, blk in block_offsets(w)]


def block_offsets(w) -> list:
    """block_decompose with each block's (row, col) offset inside ``w``."""
    p = _partial(w)
    # splits are read off the completion, which has the same diagram but
    # room for blocks reaching past the last row or column of p
    full = _partial(complete(p))
    found = find_split(full)
    if found is None:
        return [(0, 0, p)]
    a, b = found
    u, v = split(full, a, b)
    return [(ro + a, co, blk) for ro, co, blk in block_offsets(u)] + [
        (ro, co + b, blk) for ro, co, blk in block_offsets(v)
    ]
