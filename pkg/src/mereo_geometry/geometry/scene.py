# src/mereo_geometry/geometry/scene.py
"""`.geo` scene files.

    # comment
    dim: 2
    ball A (0, 1/2) 3/4
    solid S = A B
    check ET A B

`dim` comes first. Solids and checks may only name labels defined above them.
"""
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from ..errors import (
    DimensionMismatch, DimensionOutOfRange, DuplicateLabel,
    SceneSyntaxError, UnknownLabel,
)
from ..formula.grammar import KEYWORDS
from .balls import MAX_DIM, Ball, Solid

RAT = r"-?\d+(?:/\d+)?"
LABEL = r"[A-Za-z][A-Za-z0-9_]*"
DIM_RE = re.compile(r"^dim\s*:\s*(\d+)$")
BALL_RE = re.compile(rf"^ball\s+({LABEL})\s*\(([^)]*)\)\s*({RAT})$")
SOLID_RE = re.compile(rf"^solid\s+({LABEL})\s*=\s*((?:{LABEL}\s*)+)$")
CHECK_RE = re.compile(rf"^check\s+({LABEL})((?:\s+{LABEL})*)$")
RAT_RE = re.compile(rf"^{RAT}$")


@dataclass(frozen=True)
class CheckDirective:
    def_id: str
    labels: tuple
    line: int = 0


@dataclass
class Scene:
    dim: int
    balls: list = field(default_factory=list)
    solids: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    name: str = "scene"

    def ball(self, label):
        for b in self.balls:
            if b.label == label:
                return b
        raise UnknownLabel(label)

    def solid(self, label):
        for s in self.solids:
            if s.label == label:
                return s
        raise UnknownLabel(label)

    @property
    def labels(self):
        return [b.label for b in self.balls] + [s.label for s in self.solids]


def _rational(text, number):
    text = text.strip()
    if not RAT_RE.match(text):
        raise SceneSyntaxError(number, f"not a rational: '{text}'")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise SceneSyntaxError(number, f"zero denominator in '{text}'") from None


def _claim(label, seen, number):
    if label in KEYWORDS:
        raise SceneSyntaxError(number, f"'{label}' is a reserved word")
    if label in seen:
        raise DuplicateLabel(label)
    seen.add(label)


def parse_scene(text, name="scene"):
    scene = None
    seen = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if scene is None:
            match = DIM_RE.match(line)
            if not match:
                raise SceneSyntaxError(number, "scene must start with 'dim: N'")
            dim = int(match.group(1))
            if not 1 <= dim <= MAX_DIM:
                raise DimensionOutOfRange(dim)
            scene = Scene(dim, name=name)
            continue

        if match := BALL_RE.match(line):
            label, center_text, radius_text = match.groups()
            center = tuple(_rational(c, number) for c in center_text.split(","))
            if len(center) != scene.dim:
                raise DimensionMismatch(scene.dim, len(center))
            _claim(label, seen, number)
            scene.balls.append(Ball(center, _rational(radius_text, number), label=label))
        elif match := SOLID_RE.match(line):
            label, members = match.group(1), match.group(2).split()
            _claim(label, seen, number)
            parts = tuple(scene.ball(m) for m in members)
            scene.solids.append(Solid(parts, label=label))
        elif match := CHECK_RE.match(line):
            labels = tuple(match.group(2).split())
            for label in labels:
                if label not in seen:
                    raise UnknownLabel(label)
            scene.checks.append(CheckDirective(match.group(1), labels, number))
        elif DIM_RE.match(line):
            raise SceneSyntaxError(number, "'dim' given twice")
        else:
            raise SceneSyntaxError(number, f"cannot parse '{line}'")

    if scene is None:
        raise SceneSyntaxError(0, "empty scene")
    return scene


def load_scene(path):
    path = Path(path)
    return parse_scene(path.read_text(encoding="utf-8"), name=path.stem)
