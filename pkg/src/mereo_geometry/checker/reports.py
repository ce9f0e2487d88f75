# src/mereo_geometry/checker/reports.py
"""Check and suite reports with their text and TSV renderings.

Renderings are deterministic: wall-clock millis only appear in TSV output
when timings are requested, otherwise the column holds `-`.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


class Verdict(Enum):
    VALID = "valid"
    REFUTED = "refuted"


@dataclass
class CheckReport:
    formula_id: str
    model_id: str
    verdict: Verdict
    counterexample: Optional[dict] = None
    witness: tuple = ()
    assignments: int = 0
    elapsed_ms: float = 0.0
    notes: tuple = ()

    @property
    def valid(self):
        return self.verdict is Verdict.VALID

    def witness_text(self):
        return ", ".join(f"{var}={value}" for var, value in self.witness)

    def summary(self):
        text = f"{self.formula_id}@{self.model_id}: {self.verdict.value}"
        if self.verdict is Verdict.REFUTED and self.witness:
            text += f" [{self.witness_text()}]"
        text += f" ({self.assignments} assignments)"
        for note in self.notes:
            text += f"\n    note: {note}"
        return text


@dataclass
class EntryResult:
    entry_id: str
    model_id: str
    expected: Verdict
    report: Optional[CheckReport] = None
    error: Optional[str] = None
    blowup: bool = False

    @property
    def matched(self):
        return self.report is not None and self.report.verdict is self.expected

    @property
    def row_id(self):
        return f"{self.entry_id}@{self.model_id}"


@dataclass
class SuiteReport:
    results: list = field(default_factory=list)

    @property
    def success(self):
        return all(r.matched for r in self.results)

    @property
    def blowups(self):
        return [r for r in self.results if r.blowup]

    @property
    def failures(self):
        return [r for r in self.results if not r.matched]

    def to_text(self):
        lines = []
        for r in self.results:
            if r.error is not None:
                lines.append(f"ERROR {r.row_id}: {r.error}")
                continue
            status = "PASS" if r.matched else "FAIL"
            line = f"{status} {r.row_id} {r.report.verdict.value}"
            if not r.matched:
                line += f", expected {r.expected.value}"
            if r.report.verdict is Verdict.REFUTED and r.report.witness:
                line += f" [{r.report.witness_text()}]"
            line += f" ({r.report.assignments} assignments)"
            lines.append(line)
            lines.extend(f"    note: {note}" for note in r.report.notes)
        passed = sum(1 for r in self.results if r.matched)
        lines.append(
            f"{len(self.results)} checks, {passed} passed, {len(self.results) - passed} failed"
        )
        return "\n".join(lines) + "\n"

    def to_tsv(self, timings=False):
        lines = []
        for r in self.results:
            if r.report is None:
                lines.append(f"{r.row_id}\terror\t-\t-")
                continue
            millis = f"{r.report.elapsed_ms:.3f}" if timings else "-"
            lines.append(
                f"{r.row_id}\t{r.report.verdict.value}\t{r.report.assignments}\t{millis}"
            )
        return "\n".join(lines) + ("\n" if lines else "")
