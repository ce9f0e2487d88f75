# src/mereo_geometry/checker/evaluator.py
import logging
import time
from enum import Enum

from ..errors import QuantifierBlowup, UnboundVariable
from ..formula.guards import check_singular_guards
from ..formula.nodes import (
    And, Apply, Eps, Forall, Iff, Implies, NameConst, NameVar, Not, Or,
    QUANTIFIERS, QuantDomain, Seq, Weq, free_variables,
)
from ..mereology.functors import DenotationCache
from .reports import CheckReport, Verdict

DEFAULT_MAX_ASSIGNMENTS = 10 ** 9


class Reading(Enum):
    """How `:singular` annotations are honoured.

    FULL ignores them and lets every variable range over all names.
    """
    FULL = "full"
    ANNOTATED = "annotated"


class Evaluator:
    """Satisfaction of formulas in one finite model.

    Holds a per-model denotation cache and counts quantifier bindings. Not
    meant to be shared across threads.
    """

    def __init__(self, model, reading=Reading.ANNOTATED,
                 max_assignments=DEFAULT_MAX_ASSIGNMENTS):
        self.model = model
        self.reading = reading
        self.max_assignments = max_assignments
        self.cache = DenotationCache(model)
        self.assignments = 0
        self._names = list(model.name_dens())
        self._singulars = list(model.singulars())

    def domain(self, domain):
        if domain is QuantDomain.SINGULAR and self.reading is Reading.ANNOTATED:
            return self._singulars
        return self._names

    def estimate(self, f):
        """Upper bound on the number of quantifier bindings evaluating f may take."""
        if isinstance(f, QUANTIFIERS):
            return len(self.domain(f.domain)) * (1 + self.estimate(f.body))
        if isinstance(f, Not):
            return self.estimate(f.body)
        if isinstance(f, (And, Or, Implies, Iff)):
            return self.estimate(f.left) + self.estimate(f.right)
        return 0

    def guard(self, f):
        estimate = self.estimate(f)
        if estimate > self.max_assignments:
            raise QuantifierBlowup(estimate, self.max_assignments)
        return estimate

    def term(self, env, t):
        if isinstance(t, NameVar):
            try:
                return env[t.name]
            except KeyError:
                raise UnboundVariable(t.name, t.span) from None
        if isinstance(t, NameConst):
            try:
                return self.model.constants[t.name]
            except KeyError:
                raise UnboundVariable(t.name, t.span) from None
        if isinstance(t, Apply):
            return self.cache.den(t.functor, tuple(self.term(env, a) for a in t.args))
        raise TypeError(f"not a term: {t!r}")

    def holds(self, env, f):
        if isinstance(f, Eps):
            a = self.term(env, f.left)
            return a.is_singular and bool(a.bits & self.term(env, f.right).bits)
        if isinstance(f, Seq):
            a, b = self.term(env, f.left), self.term(env, f.right)
            return a.is_singular and a.bits == b.bits
        if isinstance(f, Weq):
            return self.term(env, f.left).bits == self.term(env, f.right).bits
        if isinstance(f, Not):
            return not self.holds(env, f.body)
        if isinstance(f, And):
            return self.holds(env, f.left) and self.holds(env, f.right)
        if isinstance(f, Or):
            return self.holds(env, f.left) or self.holds(env, f.right)
        if isinstance(f, Implies):
            return not self.holds(env, f.left) or self.holds(env, f.right)
        if isinstance(f, Iff):
            return self.holds(env, f.left) == self.holds(env, f.right)
        if isinstance(f, QUANTIFIERS):
            return self._quantified(env, f)
        raise TypeError(f"not a formula: {f!r}")

    def _quantified(self, env, f):
        universal = isinstance(f, Forall)
        missing = object()
        saved = env.get(f.var, missing)
        try:
            for den in self.domain(f.domain):
                self.assignments += 1
                env[f.var] = den
                if self.holds(env, f.body) != universal:
                    return not universal
            return universal
        finally:
            if saved is missing:
                env.pop(f.var, None)
            else:
                env[f.var] = saved

    def first_counterexample(self, f):
        """Search the outermost universal prefix in lexicographic order.

        Returns (matrix, env) for the first falsifying assignment, or
        (matrix, None) when f holds.
        """
        prefix = []
        matrix = f
        while isinstance(matrix, Forall):
            prefix.append(matrix)
            matrix = matrix.body
        env = {}

        def search(depth):
            if depth == len(prefix):
                return None if self.holds(env, matrix) else dict(env)
            q = prefix[depth]
            for den in self.domain(q.domain):
                self.assignments += 1
                env[q.var] = den
                found = search(depth + 1)
                if found is not None:
                    return found
            return None

        return matrix, search(0)


def _check_closed(f, env=None):
    free = free_variables(f) - set(env or ())
    if free:
        raise UnboundVariable(sorted(free)[0])


def _prepare(model, f, reading, max_assignments, env=None):
    _check_closed(f, env)
    if reading is Reading.ANNOTATED:
        check_singular_guards(f)
    evaluator = Evaluator(model, reading, max_assignments)
    evaluator.guard(f)
    return evaluator


def eval_formula(model, env, f, reading=Reading.ANNOTATED,
                 max_assignments=DEFAULT_MAX_ASSIGNMENTS):
    evaluator = _prepare(model, f, reading, max_assignments, env)
    return evaluator.holds(dict(env), f)


def check_validity(model, f, formula_id="formula", reading=Reading.ANNOTATED,
                   max_assignments=DEFAULT_MAX_ASSIGNMENTS):
    evaluator = _prepare(model, f, reading, max_assignments)
    started = time.perf_counter()
    matrix, counterexample = evaluator.first_counterexample(f)
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    if counterexample is None:
        return CheckReport(formula_id, model.model_id, Verdict.VALID,
                           assignments=evaluator.assignments, elapsed_ms=elapsed_ms)

    # a reported counterexample must falsify the matrix on its own
    if Evaluator(model, reading, max_assignments).holds(dict(counterexample), matrix):
        raise AssertionError(f"{formula_id}: counterexample does not re-evaluate to false")
    witness = tuple((var, model.describe(den)) for var, den in counterexample.items())
    logging.info(f"{formula_id} refuted on {model.model_id}: "
                 + ", ".join(f"{v}={d}" for v, d in witness))
    return CheckReport(formula_id, model.model_id, Verdict.REFUTED,
                       counterexample=counterexample, witness=witness,
                       assignments=evaluator.assignments, elapsed_ms=elapsed_ms)
