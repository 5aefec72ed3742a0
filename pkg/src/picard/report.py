"""Check reports: one entry per axiom family, with a witness on failure."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import CompositionError, PicardError


@dataclass(frozen=True)
class CheckEntry:
    axiom: str
    passed: bool
    witness: tuple | None = None
    note: str = ""

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failing entry needs a witness")


@dataclass
class CheckReport:
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    def entry(self, axiom: str) -> CheckEntry:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(axiom)

    def axioms(self) -> list[str]:
        return [e.axiom for e in self.entries]

    @staticmethod
    def merge(*reports: "CheckReport", prefix: str = "") -> "CheckReport":
        seen: dict[str, CheckEntry] = {}
        for r in reports:
            for e in r.entries:
                seen.setdefault(prefix + e.axiom, CheckEntry(prefix + e.axiom, e.passed, e.witness, e.note))
        return CheckReport(sorted(seen.values(), key=lambda e: e.axiom))

    def summary(self) -> str:
        bad = self.failures
        if not bad:
            return f"all {len(self.entries)} checks pass"
        return "; ".join(f"{e.axiom} fails at {e.witness}" for e in bad)


# Exceptions that mean "this diagram cannot even be evaluated", which counts
# as a failure of the face being checked rather than a crash.
_EVAL_ERRORS = (CompositionError, KeyError, PicardError)


class Checker:
    """Collects entries.  ``run`` stops at the first counterexample of a family.

    Every case is an argument tuple for ``holds``.
    """

    def __init__(self) -> None:
        self._entries: list[CheckEntry] = []

    def run(self, axiom: str, cases: Iterable, holds: Callable[..., bool]) -> bool:
        for case in cases:
            try:
                good = holds(*case)
            except _EVAL_ERRORS:
                good = False
            if not good:
                self._entries.append(CheckEntry(axiom, False, case))
                return False
        self._entries.append(CheckEntry(axiom, True))
        return True

    def fail(self, axiom: str, witness: tuple, note: str = "") -> None:
        self._entries.append(CheckEntry(axiom, False, witness, note))

    def extend(self, report: CheckReport, prefix: str = "") -> None:
        for e in report.entries:
            self._entries.append(CheckEntry(prefix + e.axiom, e.passed, e.witness, e.note))

    def report(self) -> CheckReport:
        return CheckReport.merge(CheckReport(self._entries))
