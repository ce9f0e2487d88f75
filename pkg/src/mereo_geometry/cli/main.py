# src/mereo_geometry/cli/main.py
"""`mg`: command-line front end.

Exit codes: 0 every verdict matched its expectation, 1 some verdict did not,
2 usage or input error, 3 a quantifier cap was hit.
"""
import argparse
import datetime
import logging
import os
import sys
from pathlib import Path

import yaml

from ..bridge.axioms import check_TA4_TA4prime
from ..bridge.definitions import check_definition, run_scene_checks
from ..bridge.reports import Outcome, render_reports
from ..bridge.universe import universe_from_scene
from ..checker.evaluator import Reading, check_validity
from ..checker.protothetic import check_protothetic_extensionality
from ..checker.registry import load_registry, run_registry
from ..checker.reports import EntryResult, SuiteReport, Verdict
from ..errors import FormulaSyntaxError, InputError, QuantifierBlowup
from ..formula.model_text import load_model
from ..formula.parser import parse_formula
from ..formula.printer import print_formula
from ..geometry.scene import load_scene
from .models import generate_models, parse_atom_range
from .queries import evaluate_query

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BLOWUP = 3

PACKAGE_DIR = Path(__file__).resolve().parents[1]
DEFAULT_CONFIG = PACKAGE_DIR / "config" / "mereo_geometry.yaml"
DEFAULT_REGISTRY = PACKAGE_DIR / "data" / "registry" / "core.mreg"

DEFAULTS = {
    "max_assignments": 10 ** 9,
    "default_reading": "annotated",
    "default_atoms": "1..2",
    "jobs": 1,
    "max_candidates": 12,
    "timings": False,
    "log_level": "INFO",
    "log_dir": None,
}


def load_config(path=None):
    """Settings from the YAML config, upper-case keys, defaults filled in."""
    config_path = Path(path or os.environ.get("MEREO_GEOMETRY_CONFIG", DEFAULT_CONFIG))
    with open(config_path, "r", encoding="utf-8") as f:
        config = yaml.safe_load(f) or {}
    if not isinstance(config, dict):
        raise InputError(f"{config_path}: expected a mapping of settings")
    merged = dict(DEFAULTS)
    merged.update({k: v for k, v in config.items() if v is not None})
    try:
        return {
            "MAX_ASSIGNMENTS": int(merged["max_assignments"]),
            "DEFAULT_READING": Reading(merged["default_reading"]),
            "DEFAULT_ATOMS": parse_atom_range(merged["default_atoms"]),
            "JOBS": int(merged["jobs"]),
            "MAX_CANDIDATES": int(merged["max_candidates"]),
            "TIMINGS": bool(merged["timings"]),
            "LOG_LEVEL": str(merged["log_level"]).upper(),
            "LOG_DIR": merged["log_dir"],
        }
    except ValueError as err:
        raise InputError(f"{config_path}: {err}") from None


def setup_logging(settings):
    handlers = [logging.StreamHandler(sys.stderr)]
    log_dir = settings.get("LOG_DIR")
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        session = datetime.datetime.now().strftime("%Y%m%d_%H%M%S")
        handlers.append(logging.FileHandler(os.path.join(log_dir, f"session_{session}.log")))
    logging.basicConfig(
        level=getattr(logging, settings.get("LOG_LEVEL", "INFO"), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(message)s",
        handlers=handlers,
        force=True,
    )


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML settings file")
    common.add_argument("--reading", choices=[r.value for r in Reading],
                        help="how :singular annotations are honoured")
    common.add_argument("--tsv", action="store_true", help="machine-readable output")
    common.add_argument("--timings", action="store_true", help="wall-clock millis in TSV output")
    common.add_argument("--unicode", action="store_true", help="print formulas with logical symbols")
    common.add_argument("--max-assignments", type=int, help="cap on quantifier bindings")
    common.add_argument("--jobs", type=int, help="worker threads for suite runs")
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog="mg", description="Finite-model checks for mereology and balls.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common], help="check one formula on one model")
    source = check.add_mutually_exclusive_group(required=True)
    source.add_argument("--model", help=".mmod model file")
    source.add_argument("--atoms", type=int, help="use the powerset model over N atoms")
    check.add_argument("--formula", required=True, help=".mgf formula file")
    check.add_argument("--expect", choices=[v.value for v in Verdict], default="valid")

    suite = sub.add_parser("suite", parents=[common], help="run a statement registry")
    suite.add_argument("--registry", default=str(DEFAULT_REGISTRY), help=".mreg registry file")
    suite.add_argument("--atoms", help="atom counts, e.g. 1..3")

    geo = sub.add_parser("geo", parents=[common], help="evaluate geometry queries on a scene")
    geo.add_argument("--scene", required=True, help=".geo scene file")
    geo.add_argument("--query", action="append", required=True, help="e.g. 'et(A,B)'; repeatable")

    bridge = sub.add_parser("bridge", parents=[common], help="compare definitions with geometry")
    bridge.add_argument("--scene", required=True, help=".geo scene file")
    bridge.add_argument("--def", dest="def_id", help="definition id, e.g. ET; default: the scene's checks")
    bridge.add_argument("--args", help="comma-separated labels for --def")
    bridge.add_argument("--ta4", action="store_true", help="also check TA4 and TA4' on the scene")
    bridge.add_argument("--no-witnesses", action="store_true", help="do not inject witness balls")

    sub.add_parser("proto", parents=[common], help="protothetic extensionality, both readings")
    return parser


def _emit(text):
    sys.stdout.write(text)


def _suite_exit(report):
    if any(not r.matched and not r.blowup for r in report.results):
        return EXIT_MISMATCH
    if report.blowups:
        return EXIT_BLOWUP
    return EXIT_OK


def _option(value, default):
    return default if value is None else value


def _render(report, args, settings):
    if args.tsv:
        return report.to_tsv(timings=args.timings or settings["TIMINGS"])
    return report.to_text()


def _cmd_check(args, settings):
    model = load_model(args.model) if args.model else generate_models((args.atoms, args.atoms))[0]
    path = Path(args.formula)
    text = path.read_text(encoding="utf-8")
    try:
        formula = parse_formula(text, model.constants.keys())
    except FormulaSyntaxError as err:
        print(f"{path}: {err.diagnostic(text)}", file=sys.stderr)
        return EXIT_USAGE
    reading = Reading(args.reading) if args.reading else settings["DEFAULT_READING"]
    cap = _option(args.max_assignments, settings["MAX_ASSIGNMENTS"])
    report = check_validity(model, formula, path.stem, reading=reading, max_assignments=cap)
    suite = SuiteReport([EntryResult(path.stem, model.model_id, Verdict(args.expect), report)])
    if not args.tsv:
        _emit(f"formula: {print_formula(formula, unicode=args.unicode)}\n")
    _emit(_render(suite, args, settings))
    return _suite_exit(suite)


def _cmd_suite(args, settings):
    registry = load_registry(args.registry)
    models = generate_models(args.atoms or settings["DEFAULT_ATOMS"])
    reading = Reading(args.reading) if args.reading else settings["DEFAULT_READING"]
    logging.info(f"Running {len(registry.entries)} entries on {len(models)} model(s), "
                 f"{reading.value} reading")
    report = run_registry(
        models, registry, reading=reading,
        max_assignments=_option(args.max_assignments, settings["MAX_ASSIGNMENTS"]),
        jobs=_option(args.jobs, settings["JOBS"]),
    )
    _emit(_render(report, args, settings))
    return _suite_exit(report)


def _cmd_geo(args, settings):
    scene = load_scene(args.scene)
    lines = []
    for query in args.query:
        try:
            line, _ = evaluate_query(scene, query)
        except FormulaSyntaxError as err:
            print(f"query: {err.diagnostic(query)}", file=sys.stderr)
            return EXIT_USAGE
        lines.append(line)
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_bridge(args, settings):
    scene = load_scene(args.scene)
    universe = universe_from_scene(scene)
    timings = args.timings or settings["TIMINGS"]
    if args.def_id:
        labels = [a.strip() for a in (args.args or "").split(",") if a.strip()]
        reports = [check_definition(universe, args.def_id, labels,
                                    inject_witnesses=not args.no_witnesses,
                                    max_candidates=settings["MAX_CANDIDATES"])]
    else:
        reports = run_scene_checks(universe, scene.checks, max_candidates=settings["MAX_CANDIDATES"])
    _emit(render_reports(reports, tsv=args.tsv, timings=timings))
    code = EXIT_OK
    if any(r.outcome is Outcome.HARD_DISAGREEMENT for r in reports):
        code = EXIT_MISMATCH
    if args.ta4:
        axioms = check_TA4_TA4prime(universe)
        _emit(_render(axioms, args, settings))
        if code == EXIT_OK:
            code = _suite_exit(axioms)
    return code


def _cmd_proto(args, settings):
    suite = check_protothetic_extensionality()
    _emit(_render(suite, args, settings))
    return _suite_exit(suite)


COMMANDS = {
    "check": _cmd_check,
    "suite": _cmd_suite,
    "geo": _cmd_geo,
    "bridge": _cmd_bridge,
    "proto": _cmd_proto,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings = load_config(args.config)
    except (OSError, yaml.YAMLError, InputError) as err:
        print(f"error: cannot load config: {err}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(settings)

    try:
        return COMMANDS[args.command](args, settings)
    except QuantifierBlowup as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BLOWUP
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
