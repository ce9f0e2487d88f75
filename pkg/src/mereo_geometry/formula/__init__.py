"""Formula AST, lark grammar, parser, printer and the model text format."""
