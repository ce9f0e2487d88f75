# src/mereo_geometry/geometry/balls.py
"""Closed balls over exact rationals and the analytic predicates on them.

Every metric test compares squared quantities. Both sides are nonnegative
wherever a square is taken, so the comparisons are exact equivalents of the
distance conditions. Disjointness means disjoint interiors: externally
tangent balls are `ext`.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from ..errors import DimensionMismatch, DimensionOutOfRange, InputError, NonpositiveRadius

MAX_DIM = 4


def rat(value):
    """Exact rational from an int, a Fraction or a string like '-3/4'."""
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; use an int, Fraction or 'p/q' string")
    return Fraction(value)


def _coords(x):
    return x.coords if isinstance(x, GPoint) else tuple(x)


@dataclass(frozen=True)
class GPoint:
    coords: tuple

    def __post_init__(self):
        coords = tuple(rat(c) for c in self.coords)
        if not 1 <= len(coords) <= MAX_DIM:
            raise DimensionOutOfRange(len(coords))
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self):
        return len(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Ball:
    center: tuple
    radius: Fraction
    label: str = field(default="", compare=False)

    def __post_init__(self):
        center = tuple(rat(c) for c in _coords(self.center))
        radius = rat(self.radius)
        if not 1 <= len(center) <= MAX_DIM:
            raise DimensionOutOfRange(len(center))
        if radius <= 0:
            raise NonpositiveRadius(radius)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", radius)

    @property
    def dim(self):
        return len(self.center)

    def __str__(self):
        center = ", ".join(str(c) for c in self.center)
        name = f"{self.label}=" if self.label else ""
        return f"{name}B(({center}), {self.radius})"


@dataclass(frozen=True)
class Solid:
    parts: tuple
    label: str = field(default="", compare=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise InputError("a solid needs at least one ball")
        for ball in parts[1:]:
            if ball.dim != parts[0].dim:
                raise DimensionMismatch(parts[0].dim, ball.dim)
        object.__setattr__(self, "parts", parts)

    @property
    def dim(self):
        return self.parts[0].dim


class TriBool(Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided"


class BallRelation(Enum):
    PART_OF = "PartOf"
    PROPER_PART = "ProperPart"
    EQUAL = "Equal"
    OVERLAP = "Overlap"
    EXT = "Ext"


class Tangency(Enum):
    ET = "ET"
    IT = "IT"


class DiamTangency(Enum):
    EDT = "EDT"
    IDT = "IDT"


def sq_dist(p, q):
    p, q = _coords(p), _coords(q)
    if len(p) != len(q):
        raise DimensionMismatch(len(p), len(q))
    return sum(((a - b) ** 2 for a, b in zip(p, q)), Fraction(0))


def _d2(a, b):
    return sq_dist(a.center, b.center)


def part_of(a, b):
    return b.radius >= a.radius and _d2(a, b) <= (b.radius - a.radius) ** 2


def equal(a, b):
    if a.dim != b.dim:
        raise DimensionMismatch(a.dim, b.dim)
    return a.center == b.center and a.radius == b.radius


def proper_part(a, b):
    return part_of(a, b) and not equal(a, b)


def overlap(a, b):
    return _d2(a, b) < (a.radius + b.radius) ** 2


def ext(a, b):
    return _d2(a, b) >= (a.radius + b.radius) ** 2


_RELATIONS = {
    BallRelation.PART_OF: part_of,
    BallRelation.PROPER_PART: proper_part,
    BallRelation.EQUAL: equal,
    BallRelation.OVERLAP: overlap,
    BallRelation.EXT: ext,
}


def ball_mereo(kind, a, b):
    return _RELATIONS[BallRelation(kind)](a, b)


def et(a, b):
    return _d2(a, b) == (a.radius + b.radius) ** 2


def it(a, b):
    return a.radius < b.radius and _d2(a, b) == (b.radius - a.radius) ** 2 and not equal(a, b)


def tangency(kind, a, b):
    return et(a, b) if Tangency(kind) is Tangency.ET else it(a, b)


def edt(a, b, c):
    """a and b externally tangent to c at antipodal points."""
    return et(a, c) and et(b, c) and \
        _d2(a, b) == (a.radius + 2 * c.radius + b.radius) ** 2


def idt(a, b, c):
    """a and b internally tangent to c at antipodal points."""
    return it(a, c) and it(b, c) and \
        _d2(a, b) == (2 * c.radius - a.radius - b.radius) ** 2


def diam_tangency(kind, a, b, c):
    return edt(a, b, c) if DiamTangency(kind) is DiamTangency.EDT else idt(a, b, c)


def concentric(a, b):
    if a.dim != b.dim:
        raise DimensionMismatch(a.dim, b.dim)
    return a.center == b.center


def point_of(ball):
    return GPoint(ball.center)


def equidistant(p, q, c):
    """p and q lie on one sphere around c."""
    return sq_dist(c, p) == sq_dist(c, q)
