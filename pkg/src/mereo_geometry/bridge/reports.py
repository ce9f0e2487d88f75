# src/mereo_geometry/bridge/reports.py
"""Bridge reports and their renderings.

The TSV layout matches the checker's: `id@scene  outcome  evaluations  millis`.
"""
from dataclasses import dataclass
from enum import Enum

from ..geometry.balls import TriBool


class Outcome(Enum):
    AGREEMENT = "agreement"
    INCONCLUSIVE_CANDIDATES = "inconclusive-candidates"
    HARD_DISAGREEMENT = "hard-disagreement"
    UNDECIDED_ANALYTIC = "undecided-analytic"


def as_bool(verdict):
    """True/False for a bool or a decided TriBool, None when undecided."""
    if isinstance(verdict, TriBool):
        return {TriBool.YES: True, TriBool.NO: False}.get(verdict)
    return bool(verdict)


def _verdict_text(verdict):
    if isinstance(verdict, TriBool):
        return verdict.value
    return "true" if verdict else "false"


def classify(analytic, mereological, covered):
    """Outcome of comparing the two verdicts.

    A mismatch is hard only when the injected witnesses settle the candidate
    restricted reading; otherwise the candidate set is to blame.
    """
    expected = as_bool(analytic)
    if expected is None:
        return Outcome.UNDECIDED_ANALYTIC
    if expected == mereological:
        return Outcome.AGREEMENT
    return Outcome.HARD_DISAGREEMENT if covered else Outcome.INCONCLUSIVE_CANDIDATES


@dataclass
class BridgeReport:
    def_id: str
    args: tuple
    scene: str
    analytic: object
    mereological: bool
    outcome: Outcome
    witnesses: tuple = ()
    candidates: int = 0
    evaluations: int = 0
    elapsed_ms: float = 0.0
    notes: tuple = ()

    @property
    def agreement(self):
        return as_bool(self.analytic) == self.mereological

    @property
    def row_id(self):
        return f"{self.def_id}({','.join(self.args)})@{self.scene}"

    def to_text(self):
        line = (
            f"{self.row_id}: analytic={_verdict_text(self.analytic)} "
            f"mereological={_verdict_text(self.mereological)} -> {self.outcome.value} "
            f"({self.candidates} candidates)"
        )
        if self.witnesses:
            line += "\n    witnesses: " + ", ".join(str(b) for b in self.witnesses)
        for note in self.notes:
            line += f"\n    note: {note}"
        return line

    def to_tsv(self, timings=False):
        millis = f"{self.elapsed_ms:.3f}" if timings else "-"
        return f"{self.row_id}\t{self.outcome.value}\t{self.evaluations}\t{millis}"


def render_reports(reports, tsv=False, timings=False):
    reports = list(reports)
    if tsv:
        return "".join(r.to_tsv(timings) + "\n" for r in reports)
    lines = [r.to_text() for r in reports]
    counts = {outcome: 0 for outcome in Outcome}
    for r in reports:
        counts[r.outcome] += 1
    lines.append(
        f"{len(reports)} bridge checks: "
        + ", ".join(f"{counts[o]} {o.value}" for o in Outcome)
    )
    return "\n".join(lines) + "\n"
