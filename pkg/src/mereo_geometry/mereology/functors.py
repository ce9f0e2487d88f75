# src/mereo_geometry/mereology/functors.py
"""Name-forming functors and their denotations.

`functor_den` evaluates each functor by its defining clauses over the model's
part order. `oracle_den` computes the same denotations from lattice closed
forms on atom masks and only works on powerset models; the two are compared
exhaustively by the test suite.
"""
from enum import Enum

from ..errors import ArityMismatch, NotAPowersetModel, UnknownFunctor
from .model import NameDen


class Functor(Enum):
    PT = "pt"
    EL = "el"
    KL = "Kl"
    COLL = "coll"
    OV = "ov"
    SUBCOLL = "subcoll"
    DISTINCT = "distinct"
    EXT = "ext"
    UNION = "union"

    @property
    def arity(self):
        return 2 if self is Functor.UNION else 1

    @classmethod
    def from_name(cls, name, span=None):
        try:
            return cls(name)
        except ValueError:
            raise UnknownFunctor(name, span) from None


DEFAULT_LIBRARY = (
    Functor.PT, Functor.EL, Functor.KL, Functor.COLL,
    Functor.OV, Functor.DISTINCT, Functor.EXT,
)


def _check_args(model, functor, args):
    if len(args) != functor.arity:
        raise ArityMismatch(functor.value, functor.arity, len(args))
    for arg in args:
        model.check(arg)


# Definitional semantics

def _pt(model, b):
    bits = 0
    for y in b:
        bits |= model.strictly_below(y)
    return NameDen(bits)


def _el(model, b):
    bits = 0
    for y in b:
        bits |= model.below[y]
    return NameDen(bits)


def _sums_of(model, a):
    """Individuals s satisfying the class clauses for a.

    s is an object, a is not empty, every a is an element of s, and every
    element of s shares a part with some a.
    """
    if a.is_empty:
        return NameDen()
    found = 0
    for s in range(model.size):
        if a.bits & ~model.below[s]:
            continue
        if all(model.meets[x] & a.bits for x in NameDen(model.below[s])):
            found |= 1 << s
    return NameDen(found)


def _coll(model, a):
    """P such that every element Q of P meets some a that is itself an element of P."""
    found = 0
    for p in range(model.size):
        inside = a.bits & model.below[p]
        if all(model.meets[q] & inside for q in NameDen(model.below[p])):
            found |= 1 << p
    return NameDen(found)


def _ov(model, q):
    return NameDen.of(p for p in range(model.size) if model.meets[p] & q.bits)


def _subcoll(model, a):
    """Sums of nonempty sets of elements of a.

    If B is the sum of some S within el(a), then S lies within el(B) as well,
    and B is also the sum of el(a) & el(B). So it is enough to test that one
    set per candidate B.
    """
    elements = _el(model, a).bits
    found = 0
    for b in range(model.size):
        shared = NameDen(elements & model.below[b])
        if not shared.is_empty and b in _sums_of(model, shared):
            found |= 1 << b
    return NameDen(found)


def _distinct(model, b):
    return NameDen(model.everything.bits & ~b.bits)


def _ext(model, b):
    return NameDen.of(x for x in range(model.size) if not model.meets[x] & b.bits)


def _union(model, b, c):
    return b | c


_LITERAL = {
    Functor.PT: _pt,
    Functor.EL: _el,
    Functor.KL: _sums_of,
    Functor.COLL: _coll,
    Functor.OV: _ov,
    Functor.SUBCOLL: _subcoll,
    Functor.DISTINCT: _distinct,
    Functor.EXT: _ext,
    Functor.UNION: _union,
}


def functor_den(model, functor, *args):
    _check_args(model, functor, args)
    return _LITERAL[functor](model, *args)


# Closed forms on atom masks

def _mask(i):
    return i + 1


def _index(mask):
    return mask - 1


def _join(den):
    mask = 0
    for i in den:
        mask |= _mask(i)
    return mask


def _oracle_kl(model, a):
    return NameDen() if a.is_empty else NameDen.single(_index(_join(a)))


def _oracle_el(model, b):
    return NameDen.of(
        x for x in range(model.size)
        if any(_mask(x) & ~_mask(y) == 0 for y in b)
    )


def _oracle_pt(model, b):
    return NameDen.of(
        x for x in range(model.size)
        if any(_mask(x) & ~_mask(y) == 0 and x != y for y in b)
    )


def _oracle_coll(model, a):
    joins = {_mask(i) for i in a}
    frontier = set(joins)
    while frontier:
        grown = {m | _mask(i) for m in frontier for i in a} - joins
        joins |= grown
        frontier = grown
    return NameDen.of(_index(m) for m in joins)


def _oracle_ov(model, q):
    return NameDen.of(
        p for p in range(model.size) if any(_mask(p) & _mask(y) for y in q)
    )


def _oracle_ext(model, b):
    return NameDen.of(
        x for x in range(model.size) if not any(_mask(x) & _mask(y) for y in b)
    )


def _oracle_subcoll(model, a):
    if a.is_empty:
        return NameDen()
    top = _join(a)
    return NameDen.of(x for x in range(model.size) if _mask(x) & ~top == 0)


_ORACLE = {
    Functor.PT: _oracle_pt,
    Functor.EL: _oracle_el,
    Functor.KL: _oracle_kl,
    Functor.COLL: _oracle_coll,
    Functor.OV: _oracle_ov,
    Functor.SUBCOLL: _oracle_subcoll,
    Functor.DISTINCT: _distinct,
    Functor.EXT: _oracle_ext,
    Functor.UNION: _union,
}


def oracle_den(model, functor, *args):
    if not model.is_powerset:
        raise NotAPowersetModel(f"oracle needs a powerset model, got {model.model_id}")
    _check_args(model, functor, args)
    return _ORACLE[functor](model, *args)


class DenotationCache:
    """Memoised `functor_den` for one model.

    Not shared between threads; each worker builds its own.
    """

    def __init__(self, model):
        self.model = model
        self._table = {}
        self.hits = 0

    def den(self, functor, args):
        key = (functor, args)
        value = self._table.get(key)
        if value is None:
            value = functor_den(self.model, functor, *args)
            self._table[key] = value
        else:
            self.hits += 1
        return value
