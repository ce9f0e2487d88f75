# src/mereo_geometry/bridge/axioms.py
"""Ball and solid axioms checked as formulas over a scene universe.

`balls` and `solids` are the universe constants. Quantifiers over individuals
are annotated `:singular`; the existential in the literal form ranges over
every name and is met by the empty name.
"""
from ..checker.evaluator import Reading, check_validity
from ..checker.reports import EntryResult, SuiteReport, Verdict
from ..errors import InputError
from ..formula.parser import parse_formula

SCENE_AXIOMS = (
    ("TA4",
     "forall A:singular, forall B:singular, "
     "A eps balls /\\ B eps el(A) -> (exists C:singular, C eps balls /\\ C eps el(B))"),
    ("TA4-literal",
     "forall A:singular, forall B:singular, "
     "A eps balls /\\ B eps el(A) -> (exists C:name, C eps balls -> C eps el(B))"),
    ("TA4'",
     "forall A:singular, forall B:singular, "
     "A eps solids /\\ B eps el(A) -> B eps solids"),
)


def check_TA4_TA4prime(universe):
    model = universe.model
    if model.size == 0:
        raise InputError("empty universe")
    results = []
    for axiom_id, text in SCENE_AXIOMS:
        formula = parse_formula(text, {"balls", "solids"})
        report = check_validity(model, formula, axiom_id, reading=Reading.ANNOTATED)
        results.append(EntryResult(axiom_id, model.model_id, Verdict.VALID, report))
    return SuiteReport(results)
