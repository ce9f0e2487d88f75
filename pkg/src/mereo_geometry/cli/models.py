# src/mereo_geometry/cli/models.py
"""Powerset models for suite runs."""
import re

from ..errors import AtomCountOutOfRange, InputError
from ..mereology.model import DEFAULT_ATOM_NAMES, MAX_ATOMS, MIN_ATOMS, make_powerset_model

RANGE_RE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$")


def parse_atom_range(text):
    """'1..3' -> (1, 3); a single number N means N..N."""
    match = RANGE_RE.match(str(text))
    if not match:
        raise InputError(f"expected an atom range like '1..3', got '{text}'")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) is not None else low
    if low > high:
        raise InputError(f"empty atom range '{text}'")
    return low, high


def _all_individuals(atom_count):
    names = DEFAULT_ATOM_NAMES[:atom_count]
    return [
        [a for k, a in enumerate(names) if mask >> k & 1]
        for mask in range(1, 1 << atom_count)
    ]


def generate_models(atoms_range):
    """One powerset model per atom count, with constants `empty` and `u`."""
    low, high = parse_atom_range(atoms_range) if isinstance(atoms_range, str) else atoms_range
    for count in (low, high):
        if not MIN_ATOMS <= count <= MAX_ATOMS:
            raise AtomCountOutOfRange(count, MIN_ATOMS, MAX_ATOMS)
    return [
        make_powerset_model(n, {"u": _all_individuals(n)})
        for n in range(low, high + 1)
    ]
