# src/mereo_geometry/errors.py
"""Exception hierarchy shared by every sub-package.

`InputError` subclasses describe malformed or inconsistent input and map to
exit code 2 in the CLI; `QuantifierBlowup` maps to exit code 3.
"""


class MereoGeometryError(Exception):
    """Base class for all errors raised by mereo_geometry."""


class InputError(MereoGeometryError):
    """Input that cannot be turned into a model, formula, scene or registry."""


# Models and denotations

class AtomCountOutOfRange(InputError):
    def __init__(self, atom_count, low=1, high=6):
        super().__init__(f"atom count {atom_count} outside {low}..{high}")
        self.atom_count = atom_count


class UnknownAtomInConstant(InputError):
    def __init__(self, constant, atom):
        super().__init__(f"constant '{constant}' uses undeclared atom '{atom}'")
        self.constant = constant
        self.atom = atom


class EmptySetAsIndividual(InputError):
    def __init__(self, constant):
        super().__init__(f"constant '{constant}' lists the empty set as an individual")
        self.constant = constant


class ForeignIndividual(MereoGeometryError):
    def __init__(self, index, size):
        super().__init__(f"individual index {index} not in a model of {size} individuals")
        self.index = index


class ArityMismatch(InputError):
    def __init__(self, functor, expected, got):
        super().__init__(f"functor '{functor}' takes {expected} argument(s), got {got}")
        self.functor = functor
        self.expected = expected
        self.got = got


class NotAPowersetModel(MereoGeometryError):
    """Closed-form oracles need the atom structure of a powerset model."""


class DuplicateAtom(InputError):
    def __init__(self, atom, line=None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"atom '{atom}' listed twice{where}")
        self.atom = atom
        self.line = line


class DuplicateConstant(InputError):
    def __init__(self, name, line=None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"constant '{name}' defined twice{where}")
        self.name = name
        self.line = line


class ModelTextError(InputError):
    def __init__(self, line, message):
        super().__init__(f"model text line {line}: {message}")
        self.line = line


# Formulas

class FormulaSyntaxError(InputError):
    """Parse failure with a (start, end) character span inside the input."""

    def __init__(self, message, span, expected=()):
        super().__init__(message)
        self.span = span
        self.expected = tuple(sorted(expected))

    def diagnostic(self, text):
        start, end = self.span
        line_start = text.rfind("\n", 0, start) + 1
        line_end = text.find("\n", start)
        if line_end == -1:
            line_end = len(text)
        caret = " " * (start - line_start) + "^" * max(1, min(end, line_end) - start)
        expected = f"\nexpected one of: {', '.join(self.expected)}" if self.expected else ""
        return f"{self}\n{text[line_start:line_end]}\n{caret}{expected}"


class UnknownFunctor(InputError):
    def __init__(self, name, span=None):
        super().__init__(f"unknown functor '{name}'")
        self.name = name
        self.span = span


class UnboundVariable(InputError):
    def __init__(self, name, span=None):
        super().__init__(f"unbound variable '{name}'")
        self.name = name
        self.span = span


class ShadowedConstant(InputError):
    def __init__(self, name, span=None):
        super().__init__(f"quantifier binds '{name}', which is a declared constant")
        self.name = name
        self.span = span


class UnguardedSingular(InputError):
    """A `:singular` binding whose restriction could change the verdict.

    `forall X:singular` needs a body that holds whenever X is not singular;
    `exists X:singular` needs one that fails whenever X is not singular.
    """

    def __init__(self, name, span=None):
        super().__init__(
            f"'{name}' is annotated :singular but not guarded by '{name} eps ...' or seq"
        )
        self.name = name
        self.span = span


class QuantifierBlowup(MereoGeometryError):
    def __init__(self, estimate, cap):
        super().__init__(f"estimated {estimate} assignments exceeds the cap of {cap}")
        self.estimate = estimate
        self.cap = cap


class NonemptyLibraryRequired(InputError):
    def __init__(self):
        super().__init__("functor library must contain at least one unary functor")


class RegistryError(InputError):
    def __init__(self, line, message):
        super().__init__(f"registry line {line}: {message}")
        self.line = line


# Geometry

class DimensionMismatch(InputError):
    def __init__(self, expected, got):
        super().__init__(f"dimension mismatch: expected {expected}, got {got}")
        self.expected = expected
        self.got = got


class DimensionOutOfRange(InputError):
    def __init__(self, dim):
        super().__init__(f"dimension {dim} outside 1..4")
        self.dim = dim


class NonpositiveRadius(InputError):
    def __init__(self, radius):
        super().__init__(f"radius must be positive, got {radius}")
        self.radius = radius


class NonpositiveScale(InputError):
    def __init__(self, factor):
        super().__init__(f"scale factor must be positive, got {factor}")
        self.factor = factor


class DimensionRequired1(InputError):
    def __init__(self, dim):
        super().__init__(f"exact interior test needs dimension 1, got {dim}")
        self.dim = dim


class SceneSyntaxError(InputError):
    def __init__(self, line, message):
        super().__init__(f"scene line {line}: {message}")
        self.line = line


class DuplicateLabel(InputError):
    def __init__(self, label):
        super().__init__(f"label '{label}' used twice")
        self.label = label


class UnknownLabel(InputError):
    def __init__(self, label):
        super().__init__(f"unknown label '{label}'")
        self.label = label


class UnknownDefinition(InputError):
    def __init__(self, def_id):
        super().__init__(f"unknown definition '{def_id}'")
        self.def_id = def_id


class UnknownQuery(InputError):
    def __init__(self, head):
        super().__init__(f"unknown query predicate '{head}'")
        self.head = head
