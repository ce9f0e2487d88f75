# tests/test_cli.py
"""
Tests for the `mg` command line: subcommands, output formats, configuration
and exit codes.
"""

import logging

import pytest

from mereo_geometry.checker.evaluator import Reading
import mereo_geometry.cli.main as cli_main
from mereo_geometry.cli.main import (
    EXIT_BLOWUP, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, load_config, main,
)
from mereo_geometry.cli.models import generate_models, parse_atom_range
from mereo_geometry.cli.queries import evaluate_query
from mereo_geometry.errors import AtomCountOutOfRange, InputError, UnknownQuery
from mereo_geometry.geometry.balls import TriBool
from mereo_geometry.geometry.scene import load_scene


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch):
    """No config from the environment; root handlers restored after each run."""
    monkeypatch.delenv("MEREO_GEOMETRY_CONFIG", raising=False)
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)


# Models and queries

def test_generate_models():
    models = generate_models("1..2")
    assert [m.size for m in models] == [1, 3]
    assert models[1].constants["u"] == models[1].everything
    assert models[1].constants["empty"].is_empty
    assert [m.size for m in generate_models("3..3")] == [7]
    with pytest.raises(AtomCountOutOfRange):
        generate_models("0..1")
    with pytest.raises(AtomCountOutOfRange):
        generate_models((6, 7))


def test_parse_atom_range():
    assert parse_atom_range("1..3") == (1, 3)
    assert parse_atom_range("2") == (2, 2)
    with pytest.raises(InputError):
        parse_atom_range("3..1")
    with pytest.raises(InputError):
        parse_atom_range("a..b")


def test_queries(scenes_dir):
    scene = load_scene(scenes_dir / "et_tangent.geo")
    assert evaluate_query(scene, "et(A,B)") == ("et(A,B) = true", True)
    assert evaluate_query(scene, "it( D , C )")[0] == "it(D,C) = true"
    assert evaluate_query(scene, "ov(A,C)")[0] == "ov(A,C) = true"
    assert evaluate_query(scene, "con(A,C)")[0] == "con(A,C) = true"
    ipoint = load_scene(scenes_dir / "ipoint_2d.geo")
    assert evaluate_query(ipoint, "ipoint(Q,S)") == ("ipoint(Q,S) = undecided", TriBool.UNDECIDED)
    assert evaluate_query(ipoint, "ipoint(P,A)")[0] == "ipoint(P,A) = yes"
    equid = load_scene(scenes_dir / "equid.geo")
    assert evaluate_query(equid, "equid(P,Q,C)")[0] == "equid(P,Q,C) = true"


def test_query_errors(scenes_dir):
    scene = load_scene(scenes_dir / "et_tangent.geo")
    with pytest.raises(UnknownQuery):
        evaluate_query(scene, "touch(A,B)")
    with pytest.raises(InputError):
        evaluate_query(scene, "et(A)")
    with pytest.raises(InputError):
        evaluate_query(scene, "et(A, el(B))")


# Configuration

def test_default_config():
    settings = load_config()
    assert settings["DEFAULT_READING"] is Reading.ANNOTATED
    assert settings["DEFAULT_ATOMS"] == (1, 2)
    assert settings["MAX_ASSIGNMENTS"] == 10 ** 9
    assert settings["MAX_CANDIDATES"] == 12


def test_config_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "custom.yaml"
    path.write_text("default_reading: full\nmax_candidates: 4\n")
    monkeypatch.setenv("MEREO_GEOMETRY_CONFIG", str(path))
    settings = load_config()
    assert settings["DEFAULT_READING"] is Reading.FULL
    assert settings["MAX_CANDIDATES"] == 4
    assert settings["JOBS"] == 1


def test_config_reaches_the_suite_runner(core_registry, tmp_path, mocker):
    path = tmp_path / "suite.yaml"
    path.write_text("jobs: 3\ndefault_reading: full\n")
    spy = mocker.spy(cli_main, "run_registry")
    code = main(["suite", "--registry", str(core_registry), "--atoms", "1", "--config", str(path)])
    assert code == EXIT_OK
    assert spy.call_args.kwargs["jobs"] == 3
    assert spy.call_args.kwargs["reading"] is Reading.FULL


def test_log_dir_gets_a_session_file(tmp_path):
    log_dir = tmp_path / "logs"
    path = tmp_path / "logging.yaml"
    path.write_text(f"log_dir: {log_dir}\n")
    assert main(["proto", "--config", str(path)]) == EXIT_OK
    for handler in logging.getLogger().handlers:
        handler.flush()
    assert [p.name.startswith("session_") for p in log_dir.iterdir()] == [True]


def test_bad_config_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.yaml"
    path.write_text("default_reading: sometimes\n")
    assert main(["proto", "--config", str(path)]) == EXIT_USAGE
    assert "cannot load config" in capsys.readouterr().err


# Exit codes

def test_proto(capsys):
    assert main(["proto"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "PASS protothetic-R1@truth-values refuted [p=true, q=false, f=constant-true]" in out
    assert "PASS protothetic-R2@truth-values valid" in out


def test_check_valid_formula(formulas_dir, capsys):
    code = main(["check", "--atoms", "2", "--formula", str(formulas_dir / "MereoT26.mgf")])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("formula: forall A:singular, forall a:name, A eps Kl(a) -> A eps Kl(Kl(a))\n")
    assert "PASS MereoT26@powerset-2 valid" in out


def test_check_with_model_file(data_dir, formulas_dir, capsys):
    code = main(["check", "--model", str(data_dir / "models" / "planets.mmod"),
                 "--formula", str(formulas_dir / "D4_reflexive.mgf"), "--expect", "refuted", "--tsv"])
    assert code == EXIT_OK
    assert capsys.readouterr().out == "D4_reflexive@planets\trefuted\t1\t-\n"


def test_check_mismatch(formulas_dir):
    code = main(["check", "--atoms", "2", "--formula", str(formulas_dir / "D4_reflexive.mgf")])
    assert code == EXIT_MISMATCH


def test_check_syntax_error_shows_span(tmp_path, capsys):
    bad = tmp_path / "bad.mgf"
    bad.write_text("forall A, A eps pt(")
    assert main(["check", "--atoms", "1", "--formula", str(bad)]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "unexpected end of input" in err
    assert "^" in err


def test_missing_file_is_usage_error(tmp_path):
    assert main(["check", "--atoms", "1", "--formula", str(tmp_path / "nope.mgf")]) == EXIT_USAGE


def test_usage_errors():
    assert main([]) == EXIT_USAGE
    assert main(["check", "--formula", "x.mgf"]) == EXIT_USAGE
    assert main(["suite", "--atoms", "0..1"]) == EXIT_USAGE


def test_check_blowup(formulas_dir, capsys):
    code = main(["check", "--atoms", "2", "--formula", str(formulas_dir / "A2.mgf"),
                 "--max-assignments", "5"])
    assert code == EXIT_BLOWUP
    assert "exceeds the cap of 5" in capsys.readouterr().err


def test_explicit_zero_overrides_config(core_registry, formulas_dir, tmp_path, mocker, capsys):
    code = main(["check", "--atoms", "1", "--formula", str(formulas_dir / "MereoT29.mgf"),
                 "--max-assignments", "0"])
    assert code == EXIT_BLOWUP
    assert "exceeds the cap of 0" in capsys.readouterr().err
    path = tmp_path / "suite.yaml"
    path.write_text("jobs: 3\n")
    spy = mocker.spy(cli_main, "run_registry")
    main(["suite", "--registry", str(core_registry), "--atoms", "1", "--config", str(path),
          "--jobs", "0"])
    assert spy.call_args.kwargs["jobs"] == 0


def test_suite_blowup(core_registry):
    code = main(["suite", "--registry", str(core_registry), "--atoms", "2",
                 "--max-assignments", "2"])
    assert code == EXIT_BLOWUP


def test_suite_full_reading(core_registry, capsys):
    code = main(["suite", "--registry", str(core_registry), "--atoms", "1..2", "--reading", "full"])
    assert code == EXIT_OK
    assert capsys.readouterr().out.splitlines()[-1].endswith(" 0 failed")


def test_suite_tsv_is_deterministic(core_registry, capsys):
    args = ["suite", "--registry", str(core_registry), "--atoms", "1..2", "--tsv", "--jobs", "2"]
    assert main(args) == EXIT_OK
    first = capsys.readouterr().out
    assert main(args) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second
    assert all(line.endswith("\t-") for line in first.splitlines())


def test_suite_reports_mismatch(tmp_path, formulas_dir):
    registry = tmp_path / "wrong.mreg"
    registry.write_text(
        f"reflexive | {formulas_dir / 'D4_reflexive.mgf'} | expect=valid | atoms<=1\n"
    )
    assert main(["suite", "--registry", str(registry), "--atoms", "1"]) == EXIT_MISMATCH


def test_geo(scenes_dir, capsys):
    code = main(["geo", "--scene", str(scenes_dir / "et_tangent.geo"),
                 "--query", "et(A,B)", "--query", "it(A,C)"])
    assert code == EXIT_OK
    assert capsys.readouterr().out == "et(A,B) = true\nit(A,C) = false\n"


def test_geo_bad_query(scenes_dir):
    scene = str(scenes_dir / "et_tangent.geo")
    assert main(["geo", "--scene", scene, "--query", "et(A,"]) == EXIT_USAGE
    assert main(["geo", "--scene", scene, "--query", "et(A,Z)"]) == EXIT_USAGE


def test_bridge_scene_checks(scenes_dir, capsys):
    assert main(["bridge", "--scene", str(scenes_dir / "concentric.geo"), "--tsv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    assert lines[0].startswith("CON(A,B)@concentric\tagreement\t")


def test_bridge_single_definition(scenes_dir, capsys):
    code = main(["bridge", "--scene", str(scenes_dir / "it_pair.geo"),
                 "--def", "IT", "--args", "S,B", "--no-witnesses"])
    assert code == EXIT_OK
    assert "-> inconclusive-candidates" in capsys.readouterr().out


def test_bridge_with_axioms(scenes_dir, capsys):
    code = main(["bridge", "--scene", str(scenes_dir / "solids.geo"), "--ta4"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "PASS TA4'@solids valid" in out


def test_bridge_unknown_definition(scenes_dir):
    code = main(["bridge", "--scene", str(scenes_dir / "solids.geo"), "--def", "NOPE", "--args", "A"])
    assert code == EXIT_USAGE
