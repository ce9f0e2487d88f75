# src/mereo_geometry/checker/registry.py
"""Statement registry (`.mreg`) and the suite runner.

Each non-comment line reads

    id | path.mgf | expect=valid|refuted | atoms<=N [| reading=full|annotated]

The atom field may also give a range, `atoms=M..N`, for statements whose
expected verdict only holds from M atoms on.

Paths are relative to the registry file. `builtin:<name>` in place of a path
runs one of the dedicated checks that the formula language cannot express.
"""
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..errors import MereoGeometryError, QuantifierBlowup, RegistryError
from ..formula.parser import parse_formula
from .evaluator import DEFAULT_MAX_ASSIGNMENTS, Reading, check_validity
from .functor_library import check_mereot16
from .protothetic import check_reading_r1, check_reading_r2
from .reports import EntryResult, SuiteReport, Verdict

ID_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_'.\-]*$")
EXPECT_RE = re.compile(r"^expect\s*=\s*(valid|refuted)$")
ATOMS_RE = re.compile(r"^atoms\s*(?:<=\s*(\d+)|=\s*(\d+)\s*\.\.\s*(\d+))$")
READING_RE = re.compile(r"^reading\s*=\s*(full|annotated)$")
BUILTIN_PREFIX = "builtin:"

BUILTINS = {
    "mereot16": lambda model: check_mereot16(model),
    "protothetic-r1": lambda model: check_reading_r1(),
    "protothetic-r2": lambda model: check_reading_r2(),
}


@dataclass(frozen=True)
class RegistryEntry:
    entry_id: str
    source: str
    expected: Verdict
    max_atoms: int
    reading: Optional[Reading] = None
    line: int = 0
    min_atoms: int = 1

    @property
    def builtin(self):
        if self.source.startswith(BUILTIN_PREFIX):
            return self.source[len(BUILTIN_PREFIX):]
        return None


@dataclass
class Registry:
    entries: list = field(default_factory=list)
    base_dir: Path = Path(".")

    def formula_path(self, entry):
        return self.base_dir / entry.source


def parse_registry(text, base_dir="."):
    entries = []
    seen = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) not in (4, 5):
            raise RegistryError(number, f"expected 4 or 5 '|'-separated fields, got {len(fields)}")
        entry_id, source, expect, atoms = fields[:4]
        if not ID_RE.match(entry_id):
            raise RegistryError(number, f"bad entry id '{entry_id}'")
        if entry_id in seen:
            raise RegistryError(number, f"duplicate entry id '{entry_id}'")
        seen.add(entry_id)
        if source.startswith(BUILTIN_PREFIX):
            if source[len(BUILTIN_PREFIX):] not in BUILTINS:
                raise RegistryError(number, f"unknown builtin '{source}'")
        elif not source.endswith(".mgf"):
            raise RegistryError(number, f"formula path must end in .mgf, got '{source}'")
        expect_match = EXPECT_RE.match(expect)
        if not expect_match:
            raise RegistryError(number, f"expected 'expect=valid|refuted', got '{expect}'")
        atoms_match = ATOMS_RE.match(atoms)
        if not atoms_match:
            raise RegistryError(number, f"expected 'atoms<=N' or 'atoms=M..N', got '{atoms}'")
        if atoms_match.group(1) is not None:
            min_atoms, max_atoms = 1, int(atoms_match.group(1))
        else:
            min_atoms, max_atoms = int(atoms_match.group(2)), int(atoms_match.group(3))
        if min_atoms > max_atoms:
            raise RegistryError(number, f"empty atom range '{atoms}'")
        reading = None
        if len(fields) == 5:
            reading_match = READING_RE.match(fields[4])
            if not reading_match:
                raise RegistryError(number, f"expected 'reading=full|annotated', got '{fields[4]}'")
            reading = Reading(reading_match.group(1))
        entries.append(RegistryEntry(
            entry_id, source, Verdict(expect_match.group(1)),
            max_atoms, reading, number, min_atoms,
        ))
    return Registry(entries, Path(base_dir))


def load_registry(path):
    path = Path(path)
    return parse_registry(path.read_text(encoding="utf-8"), path.parent)


def _atom_count(model):
    return len(model.atoms) if model.atoms is not None else model.size


class _SuiteRun:
    """One registry over a list of models; formulas are read once per entry."""

    def __init__(self, registry, reading, max_assignments):
        self.registry = registry
        self.reading = reading
        self.max_assignments = max_assignments
        self._texts = {}

    def formula_text(self, entry):
        if entry.entry_id not in self._texts:
            path = self.registry.formula_path(entry)
            self._texts[entry.entry_id] = path.read_text(encoding="utf-8")
        return self._texts[entry.entry_id]

    def run(self, task):
        entry, model = task
        result = EntryResult(entry.entry_id, model.model_id, entry.expected)
        try:
            if entry.builtin is not None:
                result.report = BUILTINS[entry.builtin](model)
            else:
                formula = parse_formula(self.formula_text(entry), model.constants.keys())
                result.report = check_validity(
                    model, formula, entry.entry_id,
                    reading=entry.reading or self.reading,
                    max_assignments=self.max_assignments,
                )
        except QuantifierBlowup as err:
            result.error = str(err)
            result.blowup = True
        except (MereoGeometryError, OSError) as err:
            result.error = f"{type(err).__name__}: {err}"
        return result


def run_registry(models, registry, reading=Reading.ANNOTATED,
                 max_assignments=DEFAULT_MAX_ASSIGNMENTS, jobs=1):
    """Check every entry on every model within its atom cap.

    Results come back in registry order, then model order, whatever `jobs` is.
    """
    tasks = [
        (entry, model)
        for entry in registry.entries
        for model in models
        if entry.min_atoms <= _atom_count(model) <= entry.max_atoms
    ]
    run = _SuiteRun(registry, reading, max_assignments)
    for entry in registry.entries:
        if entry.builtin is None:
            try:
                run.formula_text(entry)
            except OSError as err:
                logging.error(f"Cannot read formula for {entry.entry_id}: {err}")

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        results = list(pool.map(run.run, tasks))

    for result in results:
        if result.error is not None:
            logging.error(f"{result.row_id}: {result.error}")
        elif not result.matched:
            logging.warning(
                f"{result.row_id}: got {result.report.verdict.value}, "
                f"expected {result.expected.value}"
            )
        else:
            logging.info(f"{result.row_id}: {result.report.verdict.value}")
    return SuiteReport(results)
