# src/mereo_geometry/formula/grammar.py
r"""lark grammar for the formula DSL and the geometry query language.

Binding strength, tightest first: `~`, `/\`, `\/`, `->` (right associative),
`<->`. `/\`, `\/` and `<->` associate to the left. A quantifier body extends
as far to the right as possible.

Keywords (eps, seq, weq, forall, exists, name, singular) are reserved and
never lex as identifiers.
"""

GRAMMAR = r"""
?formula: iff_level

?iff_level: implies_level
          | iff_level "<->" implies_level        -> iff

?implies_level: or_level
              | or_level "->" implies_level      -> implies

?or_level: and_level
         | or_level "\/" and_level               -> or_

?and_level: unary
          | and_level "/\\" unary                -> and_

?unary: "~" unary                                -> not_
      | "forall" IDENT [domain] "," formula      -> forall
      | "exists" IDENT [domain] "," formula      -> exists
      | atom

?domain: ":" "name"                              -> name_domain
       | ":" "singular"                          -> singular_domain

?atom: term "eps" term                           -> eps
     | "seq" "(" term "," term ")"               -> seq
     | "weq" "(" term "," term ")"               -> weq
     | "(" formula ")"

?term: IDENT                                     -> name
     | IDENT "(" term ("," term)* ")"            -> call

query: IDENT "(" term ("," term)* ")"

IDENT: /[A-Za-z][A-Za-z0-9_]*/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

START_RULES = ["formula", "query"]

KEYWORDS = frozenset({"eps", "seq", "weq", "forall", "exists", "name", "singular"})
