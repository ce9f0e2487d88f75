# src/mereo_geometry/formula/nodes.py
"""Immutable AST for terms and formulas.

Every node carries an optional `span` (start, end) into the parsed text. Spans
are excluded from equality so a reparsed formula compares equal to the
original.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from ..mereology.functors import Functor

Span = Optional[Tuple[int, int]]


class QuantDomain(Enum):
    NAME = "name"
    SINGULAR = "singular"


# Terms

@dataclass(frozen=True)
class NameConst:
    name: str
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class NameVar:
    name: str
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Apply:
    functor: Functor
    args: tuple
    span: Span = field(default=None, compare=False, repr=False)


# Formulas

@dataclass(frozen=True)
class Eps:
    left: object
    right: object
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Seq:
    left: object
    right: object
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Weq:
    left: object
    right: object
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Not:
    body: object
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class And:
    left: object
    right: object
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Or:
    left: object
    right: object
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Implies:
    left: object
    right: object
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Iff:
    left: object
    right: object
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Forall:
    var: str
    domain: QuantDomain
    body: object
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Exists:
    var: str
    domain: QuantDomain
    body: object
    span: Span = field(default=None, compare=False, repr=False)


ATOMIC = (Eps, Seq, Weq)
BINARY = (And, Or, Implies, Iff)
QUANTIFIERS = (Forall, Exists)


def free_variables(node, bound=frozenset()):
    """Names of NameVar leaves not bound by an enclosing quantifier."""
    if isinstance(node, NameVar):
        return set() if node.name in bound else {node.name}
    if isinstance(node, NameConst):
        return set()
    if isinstance(node, Apply):
        return set().union(*(free_variables(a, bound) for a in node.args))
    if isinstance(node, QUANTIFIERS):
        return free_variables(node.body, bound | {node.var})
    if isinstance(node, Not):
        return free_variables(node.body, bound)
    return free_variables(node.left, bound) | free_variables(node.right, bound)


def quantifier_count(node):
    if isinstance(node, QUANTIFIERS):
        return 1 + quantifier_count(node.body)
    if isinstance(node, Not):
        return quantifier_count(node.body)
    if isinstance(node, BINARY):
        return quantifier_count(node.left) + quantifier_count(node.right)
    return 0
