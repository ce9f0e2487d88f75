# src/mereo_geometry/formula/parser.py
from dataclasses import replace
from functools import lru_cache

from lark import Lark, Transformer, v_args
from lark.exceptions import (
    UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError,
)

from ..errors import (
    ArityMismatch, FormulaSyntaxError, ShadowedConstant, UnboundVariable,
)
from ..mereology.functors import Functor
from .grammar import GRAMMAR, START_RULES
from .nodes import (
    And, Apply, Eps, Exists, Forall, Iff, Implies, NameConst, NameVar, Not, Or,
    QUANTIFIERS, QuantDomain, Seq, Weq,
)


@lru_cache(maxsize=1)
def _lark():
    return Lark(GRAMMAR, parser="lalr", lexer="basic", start=START_RULES,
                propagate_positions=True)


def _span(meta):
    return (meta.start_pos, meta.end_pos)


def _token_span(token):
    return (token.start_pos, token.end_pos)


@v_args(meta=True)
class _ToAst(Transformer):
    """Builds AST nodes; every identifier is a NameVar until scopes are resolved."""

    def name(self, meta, children):
        (token,) = children
        return NameVar(str(token), _token_span(token))

    def call(self, meta, children):
        head, *args = children
        functor = Functor.from_name(str(head), _token_span(head))
        if len(args) != functor.arity:
            raise ArityMismatch(functor.value, functor.arity, len(args))
        return Apply(functor, tuple(args), _span(meta))

    def eps(self, meta, children):
        return Eps(children[0], children[1], _span(meta))

    def seq(self, meta, children):
        return Seq(children[0], children[1], _span(meta))

    def weq(self, meta, children):
        return Weq(children[0], children[1], _span(meta))

    def not_(self, meta, children):
        return Not(children[0], _span(meta))

    def and_(self, meta, children):
        return And(children[0], children[1], _span(meta))

    def or_(self, meta, children):
        return Or(children[0], children[1], _span(meta))

    def implies(self, meta, children):
        return Implies(children[0], children[1], _span(meta))

    def iff(self, meta, children):
        return Iff(children[0], children[1], _span(meta))

    def name_domain(self, meta, children):
        return QuantDomain.NAME

    def singular_domain(self, meta, children):
        return QuantDomain.SINGULAR

    def forall(self, meta, children):
        var, domain, body = children
        return Forall(str(var), domain or QuantDomain.NAME, body, _span(meta))

    def exists(self, meta, children):
        var, domain, body = children
        return Exists(str(var), domain or QuantDomain.NAME, body, _span(meta))

    def query(self, meta, children):
        head, *args = children
        return str(head), tuple(args), _span(meta)


def _describe_terminal(name):
    if name == "$END":
        return "end of input"
    if name == "IDENT":
        return "identifier"
    try:
        pattern = _lark().get_terminal(name).pattern
    except KeyError:
        return name
    return f"'{pattern.value}'"


def _syntax_error(text, err):
    size = len(text)
    if isinstance(err, UnexpectedToken):
        expected = err.accepts or err.expected
        token = err.token
        if token.type == "$END":
            return FormulaSyntaxError(
                "unexpected end of input", (size, size),
                {_describe_terminal(t) for t in expected},
            )
        return FormulaSyntaxError(
            f"unexpected '{token}' at offset {token.start_pos}",
            (token.start_pos, min(token.end_pos, size)),
            {_describe_terminal(t) for t in expected},
        )
    if isinstance(err, UnexpectedCharacters):
        pos = min(err.pos_in_stream, size)
        return FormulaSyntaxError(
            f"unexpected character {text[pos:pos + 1]!r} at offset {pos}",
            (pos, min(pos + 1, size)),
            {_describe_terminal(t) for t in (err.allowed or ())},
        )
    if isinstance(err, UnexpectedEOF):
        return FormulaSyntaxError(
            "unexpected end of input", (size, size),
            {_describe_terminal(t) for t in err.expected},
        )
    return FormulaSyntaxError(str(err), (size, size))


def _parse_tree(text, start):
    try:
        tree = _lark().parse(text, start=start)
    except UnexpectedInput as err:
        raise _syntax_error(text, err) from None
    try:
        return _ToAst().transform(tree)
    except VisitError as err:
        raise err.orig_exc from None


def resolve_names(node, known_constants, closed=True, bound=frozenset()):
    """Turn identifiers into NameConst or NameVar according to scope."""
    if isinstance(node, NameVar):
        if node.name in bound:
            return node
        if node.name in known_constants:
            return NameConst(node.name, node.span)
        if closed:
            raise UnboundVariable(node.name, node.span)
        return node
    if isinstance(node, NameConst):
        return node
    if isinstance(node, Apply):
        args = tuple(resolve_names(a, known_constants, closed, bound) for a in node.args)
        return replace(node, args=args)
    if isinstance(node, QUANTIFIERS):
        if node.var in known_constants:
            raise ShadowedConstant(node.var, node.span)
        body = resolve_names(node.body, known_constants, closed, bound | {node.var})
        return replace(node, body=body)
    if isinstance(node, Not):
        return replace(node, body=resolve_names(node.body, known_constants, closed, bound))
    return replace(
        node,
        left=resolve_names(node.left, known_constants, closed, bound),
        right=resolve_names(node.right, known_constants, closed, bound),
    )


def parse_formula(text, known_constants=frozenset(), closed=True):
    """Parse DSL text into a Formula.

    Identifiers bound by a quantifier become NameVar, identifiers listed in
    `known_constants` become NameConst. Any other identifier raises
    UnboundVariable unless `closed` is false, in which case it stays a free
    NameVar.
    """
    ast = _parse_tree(text, "formula")
    return resolve_names(ast, frozenset(known_constants), closed)


def parse_query(text):
    """Parse `head(arg, ...)`; returns (head, args, span) with unresolved args."""
    return _parse_tree(text, "query")


def parse_formula_file(path, known_constants=frozenset()):
    with open(path, "r", encoding="utf-8") as f:
        return parse_formula(f.read(), known_constants)
