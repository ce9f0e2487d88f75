# src/mereo_geometry/bridge/definitions.py
"""Ball definitions evaluated over a finite candidate set.

Every "given two balls X and Y" ranges over the scene's balls plus the
witnesses injected for the check, and uses only the universe's part order
and disjointness. The verdict is then compared with the metric predicate
from `geometry.balls`.

Definitions used inside other definitions (ET inside IDT, EDT/IT/IDT inside
CON) are evaluated on the candidates plus their own refuting witnesses and
memoised per argument tuple. Argument order follows the prose: in EDT and
IDT the host ball comes last.
"""
import logging
import time
from dataclasses import dataclass

from ..errors import DimensionRequired1, InputError, UnknownDefinition
from ..geometry import balls as geo
from ..geometry.interior import interior_point, interior_point_1d_exact, interior_subset_1d
from .reports import BridgeReport, Outcome, classify
from .witnesses import (
    Witnesses, con_witnesses, edt_witnesses, equid_witnesses, et_witnesses,
    idt_witnesses, ipoint_witnesses, it_witnesses,
)

DEFAULT_MAX_CANDIDATES = 12
UNDER_APPROXIMATION = "ball-to-solid parthood uses single-constituent containment"


class RestrictedDefinitions:
    """Definitions with ball quantifiers restricted to `candidates`.

    Scene balls are related through the universe's model; witness balls,
    which are not individuals of the universe, through the same analytic
    PartOf and Overlap the universe was built from.
    """

    def __init__(self, universe, extra=()):
        self.universe = universe
        self.candidates = tuple(universe.balls) + tuple(extra)
        self.evaluations = 0
        self.uncovered = set()
        self._memo = {}
        self._positions = {}
        for i, ball in enumerate(universe.balls):
            self._positions.setdefault(ball, i)

    def le(self, x, y):
        i, j = self._positions.get(x), self._positions.get(y)
        if i is not None and j is not None:
            return self.universe.model.leq(i, j)
        return geo.part_of(x, y)

    def disjoint(self, x, y):
        i, j = self._positions.get(x), self._positions.get(y)
        if i is not None and j is not None:
            return not self.universe.model.meets[i] >> j & 1
        return geo.ext(x, y)

    def below(self, x, y):
        return self.le(x, y) and not self.le(y, x)

    def _comparable(self, hosts):
        self.evaluations += len(hosts) ** 2
        return all(self.le(x, y) or self.le(y, x) for x in hosts for y in hosts)

    # outermost forms

    def et(self, a, b, pool):
        if not self.disjoint(a, b):
            return False
        self.evaluations += len(pool)
        return self._comparable([x for x in pool if self.le(a, x) and self.disjoint(x, b)])

    def it(self, a, b, pool):
        if not self.below(a, b):
            return False
        self.evaluations += len(pool)
        return self._comparable([x for x in pool if self.le(a, x) and self.le(x, b)])

    def edt(self, a, b, c, pool):
        if not (self.et_nested(a, c) and self.et_nested(b, c)):
            return False
        left = [x for x in pool if self.le(a, x) and self.disjoint(x, c)]
        right = [y for y in pool if self.le(b, y) and self.disjoint(y, c)]
        self.evaluations += 2 * len(pool) + len(left) * len(right)
        return all(self.disjoint(x, y) for x in left for y in right)

    def idt(self, a, b, c, pool):
        if not (self.it_nested(a, c) and self.it_nested(b, c)):
            return False
        left = [x for x in pool if self.disjoint(x, c) and self.et_nested(a, x)]
        right = [y for y in pool if self.disjoint(y, c) and self.et_nested(b, y)]
        self.evaluations += 2 * len(pool) + len(left) * len(right)
        return all(self.disjoint(x, y) for x in left for y in right)

    def con(self, a, b, pool):
        if self.le(a, b) and self.le(b, a):
            return True
        if self.below(a, b):
            return self._con_case(a, b, pool)
        if self.below(b, a):
            return self._con_case(b, a, pool)
        return False

    def _con_case(self, inner, outer, pool):
        tangent = [x for x in pool if self.it_nested(x, outer)]
        for x in tangent:
            for y in tangent:
                self.evaluations += 1
                if self.edt_nested(x, y, inner) and not self.idt_nested(x, y, outer):
                    return False
        return True

    def equid(self, p, q, c, pool):
        """Some ball around c has no ball around p or q inside it or outside it.

        Membership in a point is read analytically as sharing the centre.
        """
        members = [y for y in pool if geo.concentric(y, p) or geo.concentric(y, q)]
        for x in pool:
            if not geo.concentric(x, c):
                continue
            self.evaluations += 1 + len(members)
            if all(not self.le(y, x) and not self.disjoint(y, x) for y in members):
                return True
        return False

    def ipoint(self, p, label, pool):
        universe = self.universe
        s = universe.individual(label)
        if not universe.model.constants["solids"].bits >> s & 1:
            return False
        for x in pool:
            self.evaluations += 1
            if geo.concentric(x, p) and self._le_individual(x, s):
                return True
        return False

    def _le_individual(self, x, s):
        i = self._positions.get(x)
        if i is not None:
            return self.universe.model.leq(i, s)
        return any(geo.part_of(x, part) for part in self.universe.constituents(s))

    # nested forms

    def _nested(self, key, build, evaluate):
        if key not in self._memo:
            found = build()
            self._memo[key] = evaluate(self.candidates + found.balls)
            if not found.covered:
                self.uncovered.add(key)
        return self._memo[key]

    def et_nested(self, a, b):
        return self._nested(("ET", a, b), lambda: et_witnesses(a, b),
                            lambda pool: self.et(a, b, pool))

    def it_nested(self, a, b):
        return self._nested(("IT", a, b), lambda: it_witnesses(a, b),
                            lambda pool: self.it(a, b, pool))

    def edt_nested(self, a, b, c):
        return self._nested(("EDT", a, b, c), lambda: edt_witnesses(a, b, c),
                            lambda pool: self.edt(a, b, c, pool))

    def idt_nested(self, a, b, c):
        return self._nested(("IDT", a, b, c), lambda: idt_witnesses(a, b, c),
                            lambda pool: self.idt(a, b, c, pool))


@dataclass(frozen=True)
class _Definition:
    arity: int
    run: object
    existential: bool = False


@dataclass
class _Evaluation:
    analytic: object
    mereological: bool
    witnesses: Witnesses
    defs: RestrictedDefinitions
    notes: tuple = ()


def _evaluate(universe, found, inject, evaluate):
    found = found if inject else Witnesses(covered=False)
    defs = RestrictedDefinitions(universe, found.balls)
    return found, defs, evaluate(defs)


def _check_et(universe, args, inject):
    a, b = (universe.ball(x) for x in args)
    found, defs, value = _evaluate(universe, et_witnesses(a, b), inject,
                                   lambda d: d.et(a, b, d.candidates))
    return _Evaluation(geo.et(a, b), value, found, defs)


def _check_it(universe, args, inject):
    a, b = (universe.ball(x) for x in args)
    found, defs, value = _evaluate(universe, it_witnesses(a, b), inject,
                                   lambda d: d.it(a, b, d.candidates))
    return _Evaluation(geo.it(a, b), value, found, defs)


def _check_edt(universe, args, inject):
    a, b, c = (universe.ball(x) for x in args)
    found, defs, value = _evaluate(universe, edt_witnesses(a, b, c), inject,
                                   lambda d: d.edt(a, b, c, d.candidates))
    return _Evaluation(geo.edt(a, b, c), value, found, defs)


def _check_idt(universe, args, inject):
    a, b, c = (universe.ball(x) for x in args)
    found, defs, value = _evaluate(universe, idt_witnesses(a, b, c), inject,
                                   lambda d: d.idt(a, b, c, d.candidates))
    return _Evaluation(geo.idt(a, b, c), value, found, defs)


def _check_con(universe, args, inject):
    a, b = (universe.ball(x) for x in args)
    found, defs, value = _evaluate(universe, con_witnesses(a, b), inject,
                                   lambda d: d.con(a, b, d.candidates))
    notes = ()
    if a.dim == 1 and not found.covered:
        notes = ("in one dimension every pair of boundary points is antipodal",)
    return _Evaluation(geo.concentric(a, b), value, found, defs, notes)


def _check_point(universe, args, inject):
    result = _check_con(universe, args, inject)
    x, b = (universe.ball(label) for label in args)
    result.analytic = geo.point_of(x) == geo.point_of(b)
    result.notes += (f"{args[0]} eps point({args[1]}) read as concentricity",)
    return result


def _check_equid(universe, args, inject):
    p, q, c = (universe.ball(x) for x in args)
    analytic = geo.equidistant(geo.point_of(p), geo.point_of(q), geo.point_of(c))
    found, defs, value = _evaluate(universe, equid_witnesses(p, q, c, universe.balls), inject,
                                   lambda d: d.equid(p, q, c, d.candidates))
    notes = ()
    if analytic and not found.covered:
        notes = ("no rational ball around the centre passes through both points",)
    return _Evaluation(analytic, value, found, defs, notes)


def _check_ipoint(universe, args, inject):
    p = universe.ball(args[0])
    region = universe.region(args[1])
    if p.dim == 1:
        analytic = interior_point_1d_exact(p.center, region)
    else:
        analytic = interior_point(p.center, region)
    found, defs, value = _evaluate(universe, ipoint_witnesses(p, region), inject,
                                   lambda d: d.ipoint(p, args[1], d.candidates))
    notes = (UNDER_APPROXIMATION,) if len(region.parts) > 1 else ()
    return _Evaluation(analytic, value, found, defs, notes)


def _check_tarski_d8(universe, args, inject):
    s = universe.individual(args[0])
    value = bool(universe.model.constants["solids"].bits >> s & 1)
    defs = RestrictedDefinitions(universe)
    notes = () if universe.is_ball(args[0]) else (UNDER_APPROXIMATION,)
    region = universe.region(args[0])
    foreign = [p for p in region.parts if not any(geo.equal(p, b) for b in universe.balls)]
    # a sum of scene balls; a constituent outside the candidate set leaves it open
    analytic = bool(region.parts) and not foreign
    if foreign:
        notes += (f"{len(foreign)} constituent(s) of {args[0]} are not scene balls",)
    return _Evaluation(analytic, value, Witnesses(covered=not foreign), defs, notes)


DEFINITIONS = {
    "ET": _Definition(2, _check_et),
    "IT": _Definition(2, _check_it),
    "EDT": _Definition(3, _check_edt),
    "IDT": _Definition(3, _check_idt),
    "CON": _Definition(2, _check_con),
    "POINT": _Definition(2, _check_point),
    "EQUID": _Definition(3, _check_equid, existential=True),
    "IPOINT": _Definition(2, _check_ipoint, existential=True),
    "TarskiD8": _Definition(1, _check_tarski_d8, existential=True),
}


def _log_outcome(report):
    message = (
        f"{report.row_id}: {report.outcome.value} "
        f"(analytic {report.analytic}, mereological {report.mereological})"
    )
    if report.outcome is Outcome.HARD_DISAGREEMENT:
        logging.error(message)
    elif report.outcome is Outcome.AGREEMENT:
        logging.info(message)
    else:
        logging.warning(message)


def check_definition(universe, def_id, args, inject_witnesses=True,
                     max_candidates=DEFAULT_MAX_CANDIDATES):
    try:
        definition = DEFINITIONS[def_id]
    except KeyError:
        raise UnknownDefinition(def_id) from None
    args = tuple(args)
    if len(args) != definition.arity:
        raise InputError(f"{def_id} takes {definition.arity} argument(s), got {len(args)}")
    for label in args:
        universe.individual(label)

    started = time.perf_counter()
    result = definition.run(universe, args, inject_witnesses)
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    defs = result.defs
    if definition.existential:
        covered = result.witnesses.covered
    else:
        covered = (result.analytic or result.witnesses.covered) and not defs.uncovered
    candidates = len(defs.candidates)
    if candidates > max_candidates:
        logging.warning(
            f"{def_id}({','.join(args)}) on {universe.name}: {candidates} candidates "
            f"exceeds {max_candidates}"
        )
    report = BridgeReport(
        def_id, args, universe.name,
        result.analytic, result.mereological,
        classify(result.analytic, result.mereological, covered),
        witnesses=result.witnesses.balls,
        candidates=candidates,
        evaluations=defs.evaluations,
        elapsed_ms=elapsed_ms,
        notes=result.notes,
    )
    _log_outcome(report)
    return report


def check_interior_inclusion_1d(universe, s, t):
    """Interior-point inclusion against parthood for two 1-D regions.

    Parthood between regions never exceeds interior inclusion, so only the
    converse gap (inclusion without single-constituent parthood) can show
    up, and it is reported as inconclusive.
    """
    if universe.dim != 1:
        raise DimensionRequired1(universe.dim)
    started = time.perf_counter()
    analytic = interior_subset_1d(universe.region(s), universe.region(t))
    value = universe.leq(s, t)
    notes = (UNDER_APPROXIMATION,) if analytic and not value else ()
    report = BridgeReport(
        "InteriorInclusion", (s, t), universe.name,
        analytic, value, classify(analytic, value, covered=not analytic),
        candidates=len(universe.labels), evaluations=1,
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
        notes=notes,
    )
    _log_outcome(report)
    return report


def run_scene_checks(universe, checks, max_candidates=DEFAULT_MAX_CANDIDATES):
    """Reports for a scene's `check` directives, in file order."""
    reports = []
    for directive in checks:
        if directive.def_id == "InteriorInclusion":
            if len(directive.labels) != 2:
                raise InputError(f"InteriorInclusion takes 2 argument(s), got {len(directive.labels)}")
            reports.append(check_interior_inclusion_1d(universe, *directive.labels))
        else:
            reports.append(check_definition(universe, directive.def_id, directive.labels,
                                            max_candidates=max_candidates))
    return reports
