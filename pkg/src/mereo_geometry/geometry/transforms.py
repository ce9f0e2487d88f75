# src/mereo_geometry/geometry/transforms.py
"""Similarity generators used to test that the predicates are coordinate-free."""
from dataclasses import dataclass

from ..errors import DimensionMismatch, InputError, NonpositiveScale
from .balls import Ball, GPoint, Solid, _coords, rat


@dataclass(frozen=True)
class Translation:
    offset: tuple

    def __post_init__(self):
        object.__setattr__(self, "offset", tuple(rat(c) for c in self.offset))

    def apply(self, coords):
        if len(coords) != len(self.offset):
            raise DimensionMismatch(len(self.offset), len(coords))
        return tuple(c + o for c, o in zip(coords, self.offset))

    def scale_radius(self, radius):
        return radius


@dataclass(frozen=True)
class Permutation:
    order: tuple

    def __post_init__(self):
        order = tuple(self.order)
        if sorted(order) != list(range(len(order))):
            raise InputError(f"not a permutation of 0..{len(order) - 1}: {order}")
        object.__setattr__(self, "order", order)

    def apply(self, coords):
        if len(coords) != len(self.order):
            raise DimensionMismatch(len(self.order), len(coords))
        return tuple(coords[i] for i in self.order)

    def scale_radius(self, radius):
        return radius


@dataclass(frozen=True)
class SignFlip:
    axis: int

    def apply(self, coords):
        if not 0 <= self.axis < len(coords):
            raise DimensionMismatch(self.axis + 1, len(coords))
        return tuple(-c if i == self.axis else c for i, c in enumerate(coords))

    def scale_radius(self, radius):
        return radius


@dataclass(frozen=True)
class Scaling:
    factor: object

    def __post_init__(self):
        factor = rat(self.factor)
        if factor <= 0:
            raise NonpositiveScale(factor)
        object.__setattr__(self, "factor", factor)

    def apply(self, coords):
        return tuple(c * self.factor for c in coords)

    def scale_radius(self, radius):
        return radius * self.factor


def transform(ball, t):
    return Ball(t.apply(ball.center), t.scale_radius(ball.radius), label=ball.label)


def transform_point(point, t):
    return GPoint(t.apply(_coords(point)))


def transform_solid(solid, t):
    return Solid(tuple(transform(b, t) for b in solid.parts), label=solid.label)
