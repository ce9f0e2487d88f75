# src/mereo_geometry/formula/model_text.py
"""Reader for `.mmod` model files.

    # comment
    atoms: x y z
    name planets = {x} {y} {x,y}
    name nothing =
"""
import re
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import (
    DuplicateAtom, DuplicateConstant, EmptySetAsIndividual, ModelTextError,
    UnknownAtomInConstant,
)
from ..mereology.model import make_powerset_model
from .grammar import KEYWORDS

IDENT = r"[A-Za-z][A-Za-z0-9_]*"
ATOMS_LINE = re.compile(r"^atoms:\s*(.*)$")
NAME_LINE = re.compile(rf"^name\s+({IDENT})\s*=\s*(.*)$")
GROUP = re.compile(r"\{([^{}\s]*)\}")
IDENT_RE = re.compile(rf"^{IDENT}$")


@dataclass
class ModelSpec:
    atoms: tuple
    constants: dict = field(default_factory=dict)


def _strip_comment(line):
    return line.split("#", 1)[0].strip()


def parse_model(text):
    atoms = None
    constants = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if atoms is None:
            match = ATOMS_LINE.match(line)
            if not match:
                raise ModelTextError(number, "first line must be 'atoms: ...'")
            atoms = tuple(match.group(1).split())
            for atom in atoms:
                if not IDENT_RE.match(atom):
                    raise ModelTextError(number, f"bad atom identifier '{atom}'")
            for k, atom in enumerate(atoms):
                if atom in atoms[:k]:
                    raise DuplicateAtom(atom, number)
            continue

        match = NAME_LINE.match(line)
        if not match:
            raise ModelTextError(number, f"expected 'name <id> = {{...}} ...', got '{line}'")
        name, body = match.groups()
        if name in KEYWORDS:
            raise ModelTextError(number, f"'{name}' is a reserved word")
        if name in constants:
            raise DuplicateConstant(name, number)
        if GROUP.sub("", body).strip():
            raise ModelTextError(number, f"malformed individual list '{body}'")
        subsets = []
        for group in GROUP.findall(body):
            members = tuple(group.split(",")) if group else ()
            if "" in members:
                raise ModelTextError(number, f"empty atom in '{{{group}}}'")
            if not members:
                raise EmptySetAsIndividual(name)
            for atom in members:
                if atom not in atoms:
                    raise UnknownAtomInConstant(name, atom)
            subsets.append(members)
        constants[name] = tuple(subsets)

    if atoms is None:
        raise ModelTextError(1, "missing 'atoms:' line")
    return ModelSpec(atoms, constants)


def build_model(spec, model_id=None):
    return make_powerset_model(
        len(spec.atoms), spec.constants, atom_names=spec.atoms, model_id=model_id,
    )


def load_model(path):
    path = Path(path)
    spec = parse_model(path.read_text(encoding="utf-8"))
    return build_model(spec, model_id=path.stem)
