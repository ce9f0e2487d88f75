# src/mereo_geometry/bridge/witnesses.py
"""Rational witness balls for the bridge checks.

Each builder takes the balls of one check and returns extra candidates:
positive witnesses when the analytic predicate holds, and balls that refute
the quantified definition when it does not. `covered` is False when a
refuting configuration could not be built with rational coordinates, in
which case a restricted "true" proves nothing.

Tangency points are only constructed where they are rational: the unit
normal (a - c) / d needs d rational, and the builders below only divide by
distances already known to equal a sum or difference of radii.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from ..geometry.balls import (
    Ball, TriBool, concentric, edt, equal, et, ext, idt, it, overlap, part_of,
    proper_part, sq_dist,
)
from ..geometry.interior import interior_point, interior_witness

MAX_GROWTH_STEPS = 64


@dataclass(frozen=True)
class Witnesses:
    balls: tuple = ()
    covered: bool = True

    def __add__(self, other):
        return Witnesses(self.balls + other.balls, self.covered and other.covered)


def _add(p, q):
    return tuple(a + b for a, b in zip(p, q))


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _scale(p, k):
    return tuple(a * k for a in p)


def _dot(p, q):
    return sum((a * b for a, b in zip(p, q)), Fraction(0))


def _axis(dim, k):
    return tuple(Fraction(1) if i == k else Fraction(0) for i in range(dim))


def rational_sqrt(value):
    """Exact square root of a nonnegative rational, or None if irrational."""
    value = Fraction(value)
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    root_num, root_den = isqrt(num), isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    return None


def _offset_pair(a, fits, tag):
    """B(a -+ d e1, rA + d), d halved until both balls pass `fits`.

    Both balls contain a and neither is part of the other. Callers guarantee
    that `fits` accepts small enough d.
    """
    delta = a.radius
    e = _axis(a.dim, 0)
    while True:
        left = Ball(_sub(a.center, _scale(e, delta)), a.radius + delta, label=f"{tag}.left")
        right = Ball(_add(a.center, _scale(e, delta)), a.radius + delta, label=f"{tag}.right")
        if fits(left) and fits(right):
            return left, right
        delta /= 2


def _grown_pair(c, normal_a, normal_b, start, tag):
    """Balls tangent to c from outside at c + rC*n, grown until they overlap."""
    foot_a = _add(c.center, _scale(normal_a, c.radius))
    foot_b = _add(c.center, _scale(normal_b, c.radius))
    radius = start
    for _ in range(MAX_GROWTH_STEPS):
        x = Ball(_add(foot_a, _scale(normal_a, radius)), radius, label=f"{tag}.X")
        y = Ball(_add(foot_b, _scale(normal_b, radius)), radius, label=f"{tag}.Y")
        if overlap(x, y):
            return x, y
        radius *= 2
    return None


def et_witnesses(a, b):
    if et(a, b):
        normal = _scale(_sub(a.center, b.center), 1 / (a.radius + b.radius))
        enclosing = Ball(_add(a.center, _scale(normal, a.radius)), 2 * a.radius,
                         label="ET.enclosing")
        return Witnesses((enclosing,))
    if ext(a, b):
        return Witnesses(_offset_pair(a, lambda x: ext(x, b), "ET"))
    return Witnesses()


def it_witnesses(a, b):
    if it(a, b):
        normal = _scale(_sub(a.center, b.center), 1 / (b.radius - a.radius))
        foot = _add(b.center, _scale(normal, b.radius))
        radius = (a.radius + b.radius) / 2
        between = Ball(_sub(foot, _scale(normal, radius)), radius, label="IT.between")
        return Witnesses((between,))
    if proper_part(a, b):
        return Witnesses(_offset_pair(a, lambda x: part_of(x, b), "IT"))
    return Witnesses()


def edt_witnesses(a, b, c):
    found = et_witnesses(a, c) + et_witnesses(b, c)
    if et(a, c) and et(b, c) and not edt(a, b, c):
        normal_a = _scale(_sub(a.center, c.center), 1 / (a.radius + c.radius))
        normal_b = _scale(_sub(b.center, c.center), 1 / (b.radius + c.radius))
        pair = _grown_pair(c, normal_a, normal_b, max(a.radius, b.radius), "EDT")
        found += Witnesses(pair) if pair else Witnesses(covered=False)
    return found


def idt_witnesses(a, b, c):
    found = it_witnesses(a, c) + it_witnesses(b, c)
    if it(a, c) and it(b, c) and not idt(a, b, c):
        normal_a = _scale(_sub(a.center, c.center), 1 / (c.radius - a.radius))
        normal_b = _scale(_sub(b.center, c.center), 1 / (c.radius - b.radius))
        pair = _grown_pair(c, normal_a, normal_b, c.radius, "IDT")
        found += Witnesses(pair) if pair else Witnesses(covered=False)
    return found


def _diametric_pair(inner, outer, direction, radius_x, radius_y, tag):
    """Balls on both sides of `inner` along `direction`, touching it from outside."""
    x = Ball(_add(inner.center, _scale(direction, inner.radius + radius_x)), radius_x,
             label=f"{tag}.X")
    y = Ball(_sub(inner.center, _scale(direction, inner.radius + radius_y)), radius_y,
             label=f"{tag}.Y")
    return x, y


def _non_diametric_pair(inner, outer):
    """X, Y diametrically tangent to `inner` from outside and tangent to `outer`
    from inside, but not at antipodes of `outer`.

    Along a unit axis u with w = cI - cO, IT(X, outer) fixes
    rX = (rO^2 - rI^2 - |w|^2 - 2 rI w.u) / (2 (w.u + rI + rO)), and
    likewise rY with -u.
    """
    w = _sub(inner.center, outer.center)
    w2 = _dot(w, w)
    base = outer.radius ** 2 - inner.radius ** 2 - w2
    total = inner.radius + outer.radius
    for k in range(inner.dim):
        u = _axis(inner.dim, k)
        s = _dot(w, u)
        radius_x = (base - 2 * inner.radius * s) / (2 * (total + s))
        radius_y = (base + 2 * inner.radius * s) / (2 * (total - s))
        if radius_x <= 0 or radius_y <= 0:
            continue
        x, y = _diametric_pair(inner, outer, u, radius_x, radius_y, "CON")
        if edt(x, y, inner) and it(x, outer) and it(y, outer) and not idt(x, y, outer):
            return x, y
    return None


def con_witnesses(a, b):
    if equal(a, b):
        return Witnesses()
    if proper_part(a, b):
        inner, outer = a, b
    elif proper_part(b, a):
        inner, outer = b, a
    else:
        return Witnesses()
    if concentric(inner, outer):
        radius = (outer.radius - inner.radius) / 2
        pair = _diametric_pair(inner, outer, _axis(inner.dim, 0), radius, radius, "CON")
        return Witnesses(pair)
    pair = _non_diametric_pair(inner, outer)
    if pair is None:
        return Witnesses(covered=False)
    return Witnesses(pair, idt_witnesses(pair[0], pair[1], outer).covered)


def _settled_ball(center, host, label):
    """Ball centred at `center` that is part of `host` or exterior to it."""
    radius = host.radius
    while True:
        ball = Ball(center, radius, label=label)
        if part_of(ball, host) or ext(ball, host):
            return ball
        radius /= 2


def equid_witnesses(p, q, c, candidates):
    """Witnesses for "points of p and q are equidistant from the point of c".

    When the distances agree, a ball around c through p; otherwise one ball
    per candidate around c, centred on whichever of p, q is off its
    sphere.
    """
    to_p = sq_dist(c.center, p.center)
    if to_p == sq_dist(c.center, q.center):
        radius = rational_sqrt(to_p)
        if not radius:
            return Witnesses(covered=False)
        return Witnesses((Ball(c.center, radius, label="EQUID.X"),))
    found = []
    hosts = [x for x in candidates if concentric(x, c)]
    for k, host in enumerate(hosts):
        point = p if to_p != host.radius ** 2 else q
        found.append(_settled_ball(point.center, host, f"EQUID.Y{k}"))
    return Witnesses(tuple(found))


def ipoint_witnesses(p, solid):
    answer = interior_point(p.center, solid)
    if answer is TriBool.YES:
        ball, _ = interior_witness(p.center, solid)
        return Witnesses((Ball(ball.center, ball.radius, label="IPOINT.A"),))
    return Witnesses(covered=answer is TriBool.NO)
