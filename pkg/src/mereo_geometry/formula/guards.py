# src/mereo_geometry/formula/guards.py
"""Which `:singular` annotations leave a formula's truth value unchanged.

A name that is not singular makes `X eps t`, `seq(X, t)` and `seq(t, X)`
false. Propagating that through the connectives gives, for each variable X
and subformula f, two conservative facts:

    strict   f is false whenever X is not singular
    trivial  f is true whenever X is not singular

`forall X:singular, f` ranges safely over singular names when f is trivial
in X, and `exists X:singular, f` when f is strict in X. Under these
conditions the annotated and full readings agree on every model.
"""
from ..errors import UnguardedSingular
from .nodes import (
    And, Eps, Forall, Iff, Implies, NameVar, Not, Or, QUANTIFIERS,
    QuantDomain, Seq, Weq,
)


def _is_var(term, name):
    return isinstance(term, NameVar) and term.name == name


def singular_status(f, name):
    """(strict, trivial) for variable `name` in formula f."""
    if isinstance(f, Eps):
        return _is_var(f.left, name), False
    if isinstance(f, Seq):
        return _is_var(f.left, name) or _is_var(f.right, name), False
    if isinstance(f, Weq):
        return False, False
    if isinstance(f, Not):
        strict, trivial = singular_status(f.body, name)
        return trivial, strict
    if isinstance(f, QUANTIFIERS):
        if f.var == name:
            return False, False
        # quantifier domains are never empty
        return singular_status(f.body, name)

    ls, lt = singular_status(f.left, name)
    rs, rt = singular_status(f.right, name)
    if isinstance(f, And):
        return ls or rs, lt and rt
    if isinstance(f, Or):
        return ls and rs, lt or rt
    if isinstance(f, Implies):
        return lt and rs, ls or rt
    if isinstance(f, Iff):
        return (ls and rt) or (lt and rs), (ls and rs) or (lt and rt)
    raise TypeError(f"not a formula: {f!r}")


def unguarded_singulars(f):
    """Every `:singular` quantifier in f whose restriction is not justified."""
    found = []

    def walk(node):
        if isinstance(node, QUANTIFIERS):
            if node.domain is QuantDomain.SINGULAR:
                strict, trivial = singular_status(node.body, node.var)
                if not (trivial if isinstance(node, Forall) else strict):
                    found.append(node)
            walk(node.body)
        elif isinstance(node, Not):
            walk(node.body)
        elif isinstance(node, (And, Or, Implies, Iff)):
            walk(node.left)
            walk(node.right)

    walk(f)
    return found


def check_singular_guards(f):
    """Raise UnguardedSingular for the first unjustified annotation."""
    for node in unguarded_singulars(f):
        raise UnguardedSingular(node.var, node.span)
