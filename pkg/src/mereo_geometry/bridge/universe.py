# src/mereo_geometry/bridge/universe.py
"""Finite mereological universe read off a scene.

Individuals are the scene's balls followed by its labelled solids. Each
individual is a list of constituent balls (a ball is its own only
constituent); i <= j when every constituent of i is PartOf some constituent
of j, and i meets j when some constituent of i overlaps some constituent of j.
Between a ball and a solid this is single-constituent containment, which
under-approximates region parthood.
"""
import logging
from dataclasses import dataclass

from ..errors import DimensionMismatch, DuplicateLabel, InputError, UnknownLabel
from ..mereology.functors import Functor, functor_den
from ..mereology.model import FiniteModel, NameDen
from ..geometry.balls import Solid, overlap, part_of

RESERVED_CONSTANTS = ("balls", "solids")


@dataclass(frozen=True, eq=False)
class SceneUniverse:
    name: str
    dim: int
    balls: tuple
    solids: tuple
    model: FiniteModel
    index: dict

    @property
    def labels(self):
        return self.model.labels

    def individual(self, label):
        try:
            return self.index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def ball(self, label):
        i = self.individual(label)
        if i >= len(self.balls):
            raise InputError(f"'{label}' is a solid, a ball is needed here")
        return self.balls[i]

    def region(self, label):
        """The solid named by `label`; a ball counts as a one-ball solid."""
        i = self.individual(label)
        if i < len(self.balls):
            return Solid((self.balls[i],), label=label)
        return self.solids[i - len(self.balls)]

    def is_ball(self, label):
        return self.individual(label) < len(self.balls)

    def constituents(self, i):
        if i < len(self.balls):
            return (self.balls[i],)
        return self.solids[i - len(self.balls)].parts

    def leq(self, a, b):
        return self.model.leq(self.individual(a), self.individual(b))


def _constituent_leq(inner, outer):
    return all(any(part_of(p, q) for q in outer) for p in inner)


def _constituents_meet(left, right):
    return any(overlap(p, q) for p in left for q in right)


def _solids_constant(model, balls):
    """Individuals that are a sub-collection of some collection of balls."""
    bits = 0
    for c in functor_den(model, Functor.COLL, balls):
        bits |= functor_den(model, Functor.SUBCOLL, NameDen.single(c)).bits
    return NameDen(bits)


def scene_to_universe(balls, solids=(), name="scene"):
    balls, solids = tuple(balls), tuple(solids)
    if not balls:
        raise InputError("a scene universe needs at least one ball")
    dim = balls[0].dim
    for item in balls + solids:
        if item.dim != dim:
            raise DimensionMismatch(dim, item.dim)

    labels = [b.label or f"b{k}" for k, b in enumerate(balls)]
    labels += [s.label or f"s{k}" for k, s in enumerate(solids)]
    index = {}
    for i, label in enumerate(labels):
        if label in index or label in RESERVED_CONSTANTS:
            raise DuplicateLabel(label)
        index[label] = i

    constituents = [(b,) for b in balls] + [s.parts for s in solids]
    size = len(constituents)
    below = [
        NameDen.of(i for i in range(size) if _constituent_leq(constituents[i], constituents[j])).bits
        for j in range(size)
    ]
    meets = [
        NameDen.of(j for j in range(size) if _constituents_meet(constituents[i], constituents[j])).bits
        for i in range(size)
    ]
    for i in range(size):
        for j in range(i + 1, size):
            if below[j] >> i & 1 and below[i] >> j & 1:
                logging.warning(
                    f"{name}: '{labels[i]}' and '{labels[j]}' are parts of each other; "
                    "the part order is not antisymmetric"
                )

    constants = {label: NameDen.single(i) for label, i in index.items()}
    ball_den = NameDen.of(range(len(balls)))
    constants["balls"] = ball_den
    model = FiniteModel(name, labels, below, constants, meets=meets)
    model.constants["solids"] = _solids_constant(model, ball_den)
    logging.info(f"Universe {name}: {len(balls)} balls, {len(solids)} solids")
    return SceneUniverse(name, dim, balls, solids, model, index)


def universe_from_scene(scene):
    return scene_to_universe(scene.balls, scene.solids, name=scene.name)
