# src/mereo_geometry/mereology/model.py
"""Finite models of Lesniewski's ontology.

A model is a finite set of individuals ordered by a part relation, plus named
constants. Name denotations (`NameDen`) are bitmasks over individual indices:
bit i set means individual i falls under the name. The empty name is 0, a
singular name has exactly one bit set.

Powerset models have atoms; individual i is the nonempty atom subset whose
bitmask is i + 1, so indices follow binary counting over the atom list
({x}, {y}, {x,y}, {z}, ...). Scene universes (see bridge) reuse the same class
with their own order.
"""
from dataclasses import dataclass
from enum import Enum

from ..errors import (
    AtomCountOutOfRange, DuplicateAtom, EmptySetAsIndividual, ForeignIndividual, InputError,
    UnknownAtomInConstant,
)

MIN_ATOMS = 1
MAX_ATOMS = 6
DEFAULT_ATOM_NAMES = ("x", "y", "z", "w", "v", "t")


@dataclass(frozen=True, order=True)
class NameDen:
    """Denotation of a name: a set of individual indices, stored as a bitmask."""
    bits: int = 0

    @classmethod
    def of(cls, indices):
        bits = 0
        for i in indices:
            bits |= 1 << i
        return cls(bits)

    @classmethod
    def single(cls, index):
        return cls(1 << index)

    @property
    def members(self):
        return frozenset(self)

    @property
    def is_empty(self):
        return self.bits == 0

    @property
    def is_singular(self):
        return self.bits != 0 and self.bits & (self.bits - 1) == 0

    @property
    def sole(self):
        """Index of the only member of a singular name."""
        if not self.is_singular:
            raise ValueError(f"{self} is not a singular name")
        return self.bits.bit_length() - 1

    def __iter__(self):
        bits = self.bits
        i = 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __len__(self):
        return bin(self.bits).count("1")

    def __contains__(self, index):
        return bool(self.bits >> index & 1)

    def __or__(self, other):
        return NameDen(self.bits | other.bits)


class EqualityKind(Enum):
    SINGULAR = "singular"
    WEAK = "weak"


class FiniteModel:
    """Finite ordered universe with named constants.

    `below[i]` is the bitmask of individuals that are part of i (i included),
    `meets[i]` the bitmask of individuals sharing a common part with i.
    """

    def __init__(self, model_id, labels, below, constants=None, meets=None,
                 atoms=None, masks=None):
        self.model_id = model_id
        self.labels = tuple(labels)
        self.size = len(self.labels)
        self.below = tuple(below)
        self.above = tuple(
            NameDen.of(j for j in range(self.size) if self.below[j] >> i & 1).bits
            for i in range(self.size)
        )
        if meets is None:
            meets = [
                NameDen.of(j for j in range(self.size) if self.below[i] & self.below[j]).bits
                for i in range(self.size)
            ]
        self.meets = tuple(meets)
        self.constants = dict(constants or {})
        self.atoms = tuple(atoms) if atoms is not None else None
        self.masks = tuple(masks) if masks is not None else None
        self.everything = NameDen((1 << self.size) - 1)

    def __repr__(self):
        return f"FiniteModel({self.model_id!r}, {self.size} individuals)"

    @property
    def is_powerset(self):
        return self.masks is not None

    def leq(self, i, j):
        return bool(self.below[j] >> i & 1)

    def strictly_below(self, i):
        """Bitmask of proper parts of i."""
        return self.below[i] & ~self.above[i]

    def check(self, den):
        if den.bits >> self.size:
            raise ForeignIndividual(den.bits.bit_length() - 1, self.size)
        return den

    def name_dens(self):
        """Every name denotation, in increasing bit-vector order."""
        for bits in range(1 << self.size):
            yield NameDen(bits)

    def singulars(self):
        for i in range(self.size):
            yield NameDen(1 << i)

    def describe(self, den):
        return "[" + ", ".join(self.labels[i] for i in den) + "]"


def eval_epsilon(model, A, b):
    """`A eps b`: A names exactly one individual and b names it too."""
    model.check(A)
    model.check(b)
    return A.is_singular and bool(A.bits & b.bits)


def eval_equality(model, kind, lhs, rhs):
    if kind is EqualityKind.SINGULAR:
        return eval_epsilon(model, lhs, rhs) and eval_epsilon(model, rhs, lhs)
    model.check(lhs)
    model.check(rhs)
    return lhs.bits == rhs.bits


def _atom_label(mask, atom_names):
    return "{" + ",".join(a for k, a in enumerate(atom_names) if mask >> k & 1) + "}"


def make_powerset_model(atom_count, constant_defs=None, atom_names=None, model_id=None):
    """Build the model whose individuals are the nonempty subsets of the atoms.

    `constant_defs` maps a constant name to a list of atom subsets, each subset
    a list of atom names. The constant `empty` always denotes the empty name.
    """
    if not MIN_ATOMS <= atom_count <= MAX_ATOMS:
        raise AtomCountOutOfRange(atom_count, MIN_ATOMS, MAX_ATOMS)
    atom_names = tuple(atom_names or DEFAULT_ATOM_NAMES[:atom_count])
    if len(atom_names) != atom_count:
        raise AtomCountOutOfRange(len(atom_names), atom_count, atom_count)
    for k, atom in enumerate(atom_names):
        if atom in atom_names[:k]:
            raise DuplicateAtom(atom)

    masks = range(1, 1 << atom_count)
    labels = [_atom_label(m, atom_names) for m in masks]
    below = [
        NameDen.of(j for j, sub in enumerate(masks) if sub & m == sub).bits
        for m in masks
    ]

    position = {name: k for k, name in enumerate(atom_names)}
    constants = {"empty": NameDen()}
    for name, subsets in (constant_defs or {}).items():
        bits = 0
        for subset in subsets:
            mask = 0
            for atom in subset:
                if atom not in position:
                    raise UnknownAtomInConstant(name, atom)
                mask |= 1 << position[atom]
            if mask == 0:
                raise EmptySetAsIndividual(name)
            bits |= 1 << (mask - 1)
        if name == "empty" and bits:
            raise InputError("constant 'empty' must denote nothing")
        constants[name] = NameDen(bits)

    return FiniteModel(
        model_id or f"powerset-{atom_count}",
        labels, below, constants,
        atoms=atom_names, masks=masks,
    )
