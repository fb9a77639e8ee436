"""Pass/fail reporting for law checks.

A Report is an ordered list of named checks.  Failures keep the two composite
morphisms that were compared, so a failing law always comes with a concrete
counterexample rather than a bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator


@dataclass(frozen=True)
class CheckResult:
    law: str
    subject: str
    ok: bool
    lhs: Any = None
    rhs: Any = None
    detail: str = ""

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        text = f"[{status}] {self.law}: {self.subject}"
        if not self.ok:
            if self.detail:
                text += f" -- {self.detail}"
            if self.lhs is not None or self.rhs is not None:
                text += f"\n       lhs = {self.lhs!r}\n       rhs = {self.rhs!r}"
        return text


@dataclass
class Report:
    title: str = ""
    entries: list[CheckResult] = field(default_factory=list)

    def record(self, law: str, subject: str, ok: bool, *, lhs: Any = None,
               rhs: Any = None, detail: str = "") -> bool:
        self.entries.append(CheckResult(law, subject, bool(ok), lhs, rhs, detail))
        return bool(ok)

    def check_equal(self, law: str, subject: str, lhs: Any, rhs: Any) -> bool:
        ok = lhs == rhs
        # composites only retained on failure; reports stay light when green
        self.entries.append(CheckResult(law, subject, ok,
                                        None if ok else lhs, None if ok else rhs))
        return ok

    def extend(self, other: "Report") -> None:
        self.entries.extend(other.entries)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[CheckResult]:
        return [e for e in self.entries if not e.ok]

    def counts(self) -> tuple[int, int]:
        bad = len(self.failures())
        return len(self.entries) - bad, bad

    def first_failure(self) -> CheckResult | None:
        bad = self.failures()
        return bad[0] if bad else None

    def render(self, *, only_failures: bool = False) -> str:
        lines = []
        if self.title:
            lines.append(self.title)
        shown: Iterable[CheckResult] = self.failures() if only_failures else self.entries
        lines.extend(e.line() for e in shown)
        good, bad = self.counts()
        lines.append(f"{good} passed, {bad} failed")
        return "\n".join(lines)

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)
