"""Batch runs of a named check over S_n or a deterministic sample of it."""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from ..ideal import DEFAULT_BUDGET
from ..perm import Permutation, all_permutations
from .checks import CHECKS, ORDER_FREE
from .report import FAIL, PASS, SKIPPED, ScanSummary


def sample_permutations(n: int, sample: int | None = None, seed: int = 0) -> list:
    perms = list(all_permutations(n))
    if sample is None or sample >= len(perms):
        return perms
    return sorted(random.Random(seed).sample(perms, sample), key=lambda w: w.entries)


def _run_one(args):
    name, entries, order, budget = args
    return CHECKS[name](Permutation(entries), order, budget)


def _summarize(n, check, order, reports) -> ScanSummary:
    reports = sorted(reports, key=lambda r: Permutation.parse(r.subject).entries)
    totals = Counter({PASS: 0, FAIL: 0, SKIPPED: 0})
    totals.update(r.outcome for r in reports)
    return ScanSummary(
        n,
        check,
        order,
        dict(totals),
        [r.subject for r in reports if r.outcome == FAIL],
        [r.subject for r in reports if r.outcome == SKIPPED],
        reports,
    )


def scan(
    n: int,
    check: str,
    order: str | None = "row-lex",
    jobs: int = 1,
    sample: int | None = None,
    seed: int = 0,
    budget: int | None = DEFAULT_BUDGET,
) -> ScanSummary:
    if check not in CHECKS:
        raise KeyError(f"unknown check {check!r}; choose from {', '.join(sorted(CHECKS))}")
    if check in ORDER_FREE:
        order = None
    perms = sample_permutations(n, sample, seed)
    tasks = [(check, w.entries, order, budget) for w in perms]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        reports = [_run_one(t) for t in tasks]
    return _summarize(n, check, order, reports)


def check_pattern_conjecture(
    n: int,
    order: str | None = "row-lex",
    sample: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    budget: int | None = DEFAULT_BUDGET,
) -> ScanSummary:
    """Pattern avoidance versus the CDG property over S_n (or a sample)."""
    return scan(n, "pattern", order, jobs, sample, seed, budget)


__all__ = ["scan", "check_pattern_conjecture", "sample_permutations"]
