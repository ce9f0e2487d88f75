# src/mereo_geometry/checker/protothetic.py
"""Truth-table check of propositional extensionality.

Two readings are checked over p, q in {true, false} and the four unary truth
functions:

    R1:  forall p q f, (p == q) == (f(p) == f(q))
    R2:  forall p q, (p == q) == forall f, (f(p) == f(q))

R1 fails as soon as p differs from q and f is constant; R2 holds.
"""
import time

from .reports import CheckReport, EntryResult, SuiteReport, Verdict

MODEL_ID = "truth-values"

TRUTH_VALUES = (True, False)

TRUTH_FUNCTIONS = (
    ("constant-true", lambda p: True),
    ("constant-false", lambda p: False),
    ("identity", lambda p: p),
    ("negation", lambda p: not p),
)


def _text(value):
    return "true" if value else "false"


def _report(formula_id, counterexample, assignments, started):
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    if counterexample is None:
        return CheckReport(formula_id, MODEL_ID, Verdict.VALID,
                           assignments=assignments, elapsed_ms=elapsed_ms)
    witness = tuple(
        (var, value if isinstance(value, str) else _text(value))
        for var, value in counterexample.items()
    )
    return CheckReport(formula_id, MODEL_ID, Verdict.REFUTED,
                       counterexample=counterexample, witness=witness,
                       assignments=assignments, elapsed_ms=elapsed_ms)


def check_reading_r1():
    started = time.perf_counter()
    assignments = 0
    for p in TRUTH_VALUES:
        for q in TRUTH_VALUES:
            for name, f in TRUTH_FUNCTIONS:
                assignments += 1
                if (p == q) != (f(p) == f(q)):
                    return _report("protothetic-R1", {"p": p, "q": q, "f": name},
                                   assignments, started)
    return _report("protothetic-R1", None, assignments, started)


def check_reading_r2():
    started = time.perf_counter()
    assignments = 0
    for p in TRUTH_VALUES:
        for q in TRUTH_VALUES:
            assignments += 1
            agree = True
            for _, f in TRUTH_FUNCTIONS:
                assignments += 1
                if f(p) != f(q):
                    agree = False
                    break
            if (p == q) != agree:
                return _report("protothetic-R2", {"p": p, "q": q}, assignments, started)
    return _report("protothetic-R2", None, assignments, started)


def check_protothetic_extensionality():
    """Both readings as a suite, R1 expected refuted and R2 valid."""
    r1, r2 = check_reading_r1(), check_reading_r2()
    return SuiteReport([
        EntryResult(r1.formula_id, MODEL_ID, Verdict.REFUTED, r1),
        EntryResult(r2.formula_id, MODEL_ID, Verdict.VALID, r2),
    ])
