"""Report records for single checks and for scans."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class VerificationReport:
    subject: str
    check: str
    order: str | None
    outcome: str
    witnesses: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.outcome == PASS

    @property
    def reason(self) -> str | None:
        return self.witnesses.get("reason") if self.outcome == SKIPPED else None

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "check": self.check,
            "order": self.order,
            "outcome": self.outcome,
            "witnesses": self.witnesses,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def summary_line(self) -> str:
        tail = f" ({self.reason})" if self.outcome == SKIPPED else ""
        order = f" [{self.order}]" if self.order else ""
        return f"{self.check} {self.subject}{order}: {self.outcome}{tail}"


@dataclass
class ScanSummary:
    n: int
    check: str
    order: str | None
    totals: dict
    failing: list
    skipped: list = field(default_factory=list)
    reports: list = field(default_factory=list, repr=False)

    @property
    def size(self) -> int:
        return sum(self.totals.values())

    def to_json(self, with_reports: bool = False) -> dict:
        out = {
            "n": self.n,
            "check": self.check,
            "order": self.order,
            "totals": dict(self.totals),
            "failing": list(self.failing),
            "skipped": list(self.skipped),
        }
        if with_reports:
            out["reports"] = [r.to_json() for r in self.reports]
        return out

    def summary_line(self) -> str:
        t = self.totals
        return (
            f"scan S{self.n} {self.check}: {t.get(PASS, 0)} pass / {t.get(FAIL, 0)} fail"
            f" / {t.get(SKIPPED, 0)} skipped"
        )


class Timer:
    def __init__(self):
        self.start = time.perf_counter()

    @property
    def ms(self) -> float:
        return (time.perf_counter() - self.start) * 1000.0


@contextmanager
def timed():
    t = Timer()
    yield t


def make(subject, check, order, outcome, witnesses, timer) -> VerificationReport:
    return VerificationReport(str(subject), check, order, outcome, witnesses, timer.ms)
