# tests/test_model.py
"""
Tests for powerset models, name denotations, epsilon and the two equalities.
"""

import pytest

from mereo_geometry.errors import (
    AtomCountOutOfRange, DuplicateAtom, EmptySetAsIndividual, ForeignIndividual,
    UnknownAtomInConstant,
)
from mereo_geometry.mereology.model import (
    EqualityKind, NameDen, eval_epsilon, eval_equality, make_powerset_model,
)


def test_one_atom_model_has_one_individual():
    model = make_powerset_model(1)
    assert model.size == 1
    assert model.labels == ("{x}",)
    assert model.constants["empty"] == NameDen()


def test_two_atom_model_orders_by_subset(two_atoms):
    """Individuals follow binary counting over the atoms."""
    assert two_atoms.labels == ("{x}", "{y}", "{x,y}")
    assert two_atoms.leq(0, 2)
    assert two_atoms.leq(1, 2)
    assert not two_atoms.leq(0, 1)
    assert not two_atoms.leq(2, 0)
    assert two_atoms.strictly_below(2) == 0b011
    assert two_atoms.strictly_below(0) == 0


def test_three_atom_model_has_three_minimal_individuals(three_atoms):
    assert three_atoms.size == 7
    minimal = [i for i in range(three_atoms.size) if three_atoms.strictly_below(i) == 0]
    assert [three_atoms.labels[i] for i in minimal] == ["{x}", "{y}", "{z}"]


def test_meets_follows_shared_atoms(two_atoms):
    assert two_atoms.meets[0] == 0b101
    assert two_atoms.meets[2] == 0b111


@pytest.mark.parametrize("count", [0, 7])
def test_atom_count_out_of_range(count):
    with pytest.raises(AtomCountOutOfRange):
        make_powerset_model(count)


def test_duplicate_atom_names():
    with pytest.raises(DuplicateAtom) as exc:
        make_powerset_model(3, atom_names=("p", "q", "p"))
    assert exc.value.atom == "p"
    assert exc.value.line is None
    assert make_powerset_model(2, atom_names=("p", "q")).labels[-1] == "{p,q}"


def test_constant_with_unknown_atom():
    with pytest.raises(UnknownAtomInConstant):
        make_powerset_model(2, {"bad": [["z"]]})


def test_constant_with_empty_individual():
    with pytest.raises(EmptySetAsIndividual):
        make_powerset_model(2, {"bad": [[]]})


def test_constants_map_to_bitmasks(two_atoms):
    assert two_atoms.constants["u"] == two_atoms.everything
    assert two_atoms.describe(two_atoms.constants["u"]) == "[{x}, {y}, {x,y}]"


def test_name_den_shape():
    den = NameDen.of([0, 2])
    assert list(den) == [0, 2]
    assert len(den) == 2
    assert 2 in den and 1 not in den
    assert not den.is_singular
    assert NameDen.single(3).sole == 3
    assert NameDen().is_empty
    with pytest.raises(ValueError):
        den.sole


def test_epsilon(two_atoms):
    x, xy = NameDen.single(0), NameDen.single(2)
    assert eval_epsilon(two_atoms, x, NameDen.of([0, 2]))
    assert not eval_epsilon(two_atoms, NameDen.of([0, 2]), NameDen.of([0, 2]))
    assert not eval_epsilon(two_atoms, NameDen(), two_atoms.everything)
    assert not eval_epsilon(two_atoms, xy, x)


def test_equalities(two_atoms):
    x = NameDen.single(0)
    plural = NameDen.of([0, 2])
    assert eval_equality(two_atoms, EqualityKind.SINGULAR, x, x)
    assert not eval_equality(two_atoms, EqualityKind.SINGULAR, plural, plural)
    assert eval_equality(two_atoms, EqualityKind.WEAK, NameDen(), NameDen())
    assert eval_equality(two_atoms, EqualityKind.WEAK, plural, plural)


def test_foreign_individual_rejected(two_atoms):
    with pytest.raises(ForeignIndividual):
        eval_epsilon(two_atoms, NameDen.single(5), two_atoms.everything)


def test_name_dens_in_bit_order(two_atoms):
    dens = list(two_atoms.name_dens())
    assert len(dens) == 8
    assert dens[0] == NameDen()
    assert dens == sorted(dens)
