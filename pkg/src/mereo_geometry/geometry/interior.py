# src/mereo_geometry/geometry/interior.py
"""Interior points of finite solids.

In dimension n >= 2 a point lying only on constituent boundaries can still be
interior to the union, so `interior_point` answers UNDECIDED there. Dimension
1 gets an exact answer from merged intervals.
"""
from fractions import Fraction

from ..errors import DimensionMismatch, DimensionRequired1
from .balls import Ball, TriBool, _coords, part_of, sq_dist


def _check_dims(point, solid):
    coords = _coords(point)
    if len(coords) != solid.dim:
        raise DimensionMismatch(solid.dim, len(coords))
    return coords


def interior_point(point, solid):
    coords = _check_dims(point, solid)
    on_boundary = False
    for ball in solid.parts:
        d2 = sq_dist(coords, ball.center)
        r2 = ball.radius ** 2
        if d2 < r2:
            return TriBool.YES
        if d2 == r2:
            on_boundary = True
    return TriBool.UNDECIDED if on_boundary else TriBool.NO


def interior_witness(point, solid):
    """A ball centred at `point` that is part of some constituent, or None.

    The radius starts at the host's radius and is halved until containment
    holds exactly, so it stays rational.
    """
    coords = _check_dims(point, solid)
    for host in solid.parts:
        if sq_dist(coords, host.center) >= host.radius ** 2:
            continue
        radius = host.radius
        while True:
            candidate = Ball(coords, radius, label=f"w[{host.label or 'ball'}]")
            if part_of(candidate, host):
                return candidate, host
            radius /= 2
    return None


def merged_intervals(solid):
    """Maximal disjoint closed intervals covering a 1-D solid, left to right."""
    if solid.dim != 1:
        raise DimensionRequired1(solid.dim)
    spans = sorted((b.center[0] - b.radius, b.center[0] + b.radius) for b in solid.parts)
    merged = [list(spans[0])]
    for low, high in spans[1:]:
        if low <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], high)
        else:
            merged.append([low, high])
    return [(low, high) for low, high in merged]


def interior_point_1d_exact(point, solid):
    if solid.dim != 1:
        raise DimensionRequired1(solid.dim)
    coords = _coords(point)
    if len(coords) != 1:
        raise DimensionRequired1(len(coords))
    x = Fraction(coords[0])
    return any(low < x < high for low, high in merged_intervals(solid))


def interior_subset_1d(inner, outer):
    """Every interior point of `inner` is an interior point of `outer`."""
    covering = merged_intervals(outer)
    for low, high in merged_intervals(inner):
        if not any(c_low <= low and high <= c_high for c_low, c_high in covering):
            return False
    return True
