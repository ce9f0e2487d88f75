# tests/test_functors.py
"""
Tests for name-forming functors: worked values, and exhaustive agreement of
the definitional semantics with the lattice closed forms.
"""

import itertools

import pytest

from mereo_geometry.errors import ArityMismatch, NotAPowersetModel, UnknownFunctor
from mereo_geometry.mereology.functors import (
    DenotationCache, Functor, functor_den, oracle_den,
)
from mereo_geometry.mereology.model import NameDen, make_powerset_model
from mereo_geometry.bridge.universe import scene_to_universe
from mereo_geometry.geometry.balls import Ball

X, Y, XY = 0, 1, 2


def test_class_of_two_atoms(two_atoms):
    a = NameDen.of([X, Y])
    assert functor_den(two_atoms, Functor.KL, a) == NameDen.single(XY)
    assert oracle_den(two_atoms, Functor.KL, a) == NameDen.single(XY)


def test_class_of_empty_name_is_empty(two_atoms):
    assert functor_den(two_atoms, Functor.KL, NameDen()).is_empty


def test_collections_of_two_atoms(two_atoms):
    a = NameDen.of([X, Y])
    assert functor_den(two_atoms, Functor.COLL, a) == NameDen.of([X, Y, XY])


def test_parts_and_elements(two_atoms):
    whole = NameDen.single(XY)
    assert functor_den(two_atoms, Functor.PT, whole) == NameDen.of([X, Y])
    assert functor_den(two_atoms, Functor.EL, whole) == NameDen.of([X, Y, XY])
    assert functor_den(two_atoms, Functor.PT, NameDen.single(X)).is_empty


def test_overlap_exterior_distinct(two_atoms):
    x = NameDen.single(X)
    assert functor_den(two_atoms, Functor.OV, x) == NameDen.of([X, XY])
    assert functor_den(two_atoms, Functor.EXT, x) == NameDen.single(Y)
    assert functor_den(two_atoms, Functor.DISTINCT, x) == NameDen.of([Y, XY])


def test_subcoll_is_everything_below_the_join(two_atoms):
    assert functor_den(two_atoms, Functor.SUBCOLL, NameDen.single(X)) == NameDen.single(X)
    assert functor_den(two_atoms, Functor.SUBCOLL, NameDen.single(XY)) == two_atoms.everything


def test_union_is_binary(two_atoms):
    assert functor_den(two_atoms, Functor.UNION, NameDen.single(X), NameDen.single(Y)) \
        == NameDen.of([X, Y])
    with pytest.raises(ArityMismatch):
        functor_den(two_atoms, Functor.UNION, NameDen.single(X))
    with pytest.raises(ArityMismatch):
        functor_den(two_atoms, Functor.PT, NameDen.single(X), NameDen.single(Y))


def test_unknown_functor_name():
    with pytest.raises(UnknownFunctor):
        Functor.from_name("sum")


def test_oracle_needs_powerset_model():
    universe = scene_to_universe([Ball((0, 0), 1, label="A")])
    with pytest.raises(NotAPowersetModel):
        oracle_den(universe.model, Functor.PT, NameDen.single(0))


@pytest.mark.parametrize("atoms", [1, 2, 3])
def test_literal_matches_oracle_exhaustively(atoms):
    """Every functor on every argument tuple, zero tolerance."""
    model = make_powerset_model(atoms)
    names = list(model.name_dens())
    for functor in Functor:
        for args in itertools.product(names, repeat=functor.arity):
            assert functor_den(model, functor, *args) == oracle_den(model, functor, *args), \
                f"{functor.value}{tuple(model.describe(a) for a in args)} on {atoms} atoms"


def test_denotation_cache_counts_hits(two_atoms):
    cache = DenotationCache(two_atoms)
    key = (NameDen.single(XY),)
    first = cache.den(Functor.EL, key)
    second = cache.den(Functor.EL, key)
    assert first == second
    assert cache.hits == 1
