# src/mereo_geometry/cli/queries.py
"""Geometry queries such as `et(A,B)` over a loaded scene.

The query text is parsed by the formula grammar's `query` rule; arguments
are scene labels. Point arguments (`equid`, the first argument of `ipoint`)
name a ball and stand for its centre.
"""
from ..errors import InputError, UnknownQuery
from ..formula.nodes import NameVar
from ..formula.parser import parse_query
from ..geometry import balls as geo
from ..geometry.interior import interior_point


def _region(scene, label):
    for solid in scene.solids:
        if solid.label == label:
            return solid
    return geo.Solid((scene.ball(label),), label=label)


QUERIES = {
    "et": (2, lambda s, a, b: geo.et(s.ball(a), s.ball(b))),
    "it": (2, lambda s, a, b: geo.it(s.ball(a), s.ball(b))),
    "edt": (3, lambda s, a, b, c: geo.edt(s.ball(a), s.ball(b), s.ball(c))),
    "idt": (3, lambda s, a, b, c: geo.idt(s.ball(a), s.ball(b), s.ball(c))),
    "con": (2, lambda s, a, b: geo.concentric(s.ball(a), s.ball(b))),
    "equid": (3, lambda s, p, q, c: geo.equidistant(
        geo.point_of(s.ball(p)), geo.point_of(s.ball(q)), geo.point_of(s.ball(c)))),
    "ipoint": (2, lambda s, p, x: interior_point(geo.point_of(s.ball(p)), _region(s, x))),
    "partof": (2, lambda s, a, b: geo.part_of(s.ball(a), s.ball(b))),
    "ext": (2, lambda s, a, b: geo.ext(s.ball(a), s.ball(b))),
    "ov": (2, lambda s, a, b: geo.overlap(s.ball(a), s.ball(b))),
}


def _value_text(value):
    if isinstance(value, geo.TriBool):
        return value.value
    return "true" if value else "false"


def evaluate_query(scene, text):
    """Returns (rendered line, value)."""
    head, args, _ = parse_query(text)
    try:
        arity, predicate = QUERIES[head]
    except KeyError:
        raise UnknownQuery(head) from None
    labels = []
    for arg in args:
        if not isinstance(arg, NameVar):
            raise InputError(f"query arguments must be scene labels, got a functor term in '{text}'")
        labels.append(arg.name)
    if len(labels) != arity:
        raise InputError(f"{head} takes {arity} argument(s), got {len(labels)}")
    value = predicate(scene, *labels)
    return f"{head}({','.join(labels)}) = {_value_text(value)}", value
