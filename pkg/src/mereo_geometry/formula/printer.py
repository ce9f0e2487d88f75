# src/mereo_geometry/formula/printer.py
"""Canonical text for formulas.

The ASCII form reparses to the same AST. Parentheses are only added where
binding strength or associativity requires them; quantifiers used as an
operand are always parenthesised since their body would otherwise swallow
the rest of the line.
"""
from .nodes import (
    And, Apply, Eps, Exists, Forall, Iff, Implies, NameConst, NameVar, Not, Or,
    QUANTIFIERS, Seq, Weq,
)

ASCII = {
    "eps": " eps ", "not": "~", "and": " /\\ ", "or": " \\/ ",
    "implies": " -> ", "iff": " <-> ", "forall": "forall ", "exists": "exists ",
}

UNICODE = {
    "eps": " ε ", "not": "¬", "and": " ∧ ", "or": " ∨ ",
    "implies": " → ", "iff": " ↔ ", "forall": "∀", "exists": "∃",
}

# Binding strength; higher binds tighter.
_QUANT, _IFF, _IMPLIES, _OR, _AND, _NOT, _ATOM = range(7)

_BINARY = {
    Iff: ("iff", _IFF),
    Implies: ("implies", _IMPLIES),
    Or: ("or", _OR),
    And: ("and", _AND),
}


def _level(node):
    if isinstance(node, QUANTIFIERS):
        return _QUANT
    if isinstance(node, Not):
        return _NOT
    for kind, (_, level) in _BINARY.items():
        if isinstance(node, kind):
            return level
    return _ATOM


def print_term(term):
    if isinstance(term, (NameConst, NameVar)):
        return term.name
    if isinstance(term, Apply):
        return f"{term.functor.value}({', '.join(print_term(a) for a in term.args)})"
    raise TypeError(f"not a term: {term!r}")


class _Printer:

    def __init__(self, symbols):
        self.symbols = symbols

    def wrap(self, node, parens):
        text = self.formula(node)
        return f"({text})" if parens else text

    def formula(self, node):
        sym = self.symbols
        if isinstance(node, Eps):
            return f"{print_term(node.left)}{sym['eps']}{print_term(node.right)}"
        if isinstance(node, Seq):
            return f"seq({print_term(node.left)}, {print_term(node.right)})"
        if isinstance(node, Weq):
            return f"weq({print_term(node.left)}, {print_term(node.right)})"
        if isinstance(node, Not):
            return sym["not"] + self.wrap(node.body, _level(node.body) < _NOT)
        if isinstance(node, QUANTIFIERS):
            head = sym["forall"] if isinstance(node, Forall) else sym["exists"]
            return f"{head}{node.var}:{node.domain.value}, {self.formula(node.body)}"
        kind, level = _BINARY[type(node)]
        left, right = _level(node.left), _level(node.right)
        if isinstance(node, Implies):
            left_parens, right_parens = left <= level, right < level
        else:
            left_parens, right_parens = left < level, right <= level
        # a quantifier always needs parentheses as an operand
        left_parens = left_parens or left == _QUANT
        right_parens = right_parens or right == _QUANT
        return (
            self.wrap(node.left, left_parens)
            + sym[kind]
            + self.wrap(node.right, right_parens)
        )


def print_formula(f, unicode=False):
    return _Printer(UNICODE if unicode else ASCII).formula(f)
