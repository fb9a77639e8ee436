"""Instance files and the command-line driver."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from morita import (ParseError, UnknownCommand, ValidationError, load_instance,
                    run_suite)
from morita.cli import main

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def write(tmp_path, doc):
    p = tmp_path / "case.json"
    p.write_text(json.dumps(doc) if isinstance(doc, dict) else doc)
    return str(p)


MINIMAL = {
    "format_version": 1,
    "kind": "finset_disjoint",
    "monoids": [{"name": "A", "carrier": ["a"], "mult": [0, 0], "unit": []}],
}


# ---------------------------------------------------------------------------
# loading


def test_load_samples():
    fin = load_instance(f"{FIX}/finset_sample.json")
    assert fin.kind == "finset_disjoint"
    sections = [s for s, _, _ in fin.entities()]
    assert sections.count("monoids") == 3
    assert sections.count("bimodules") == 2
    lin = load_instance(f"{FIX}/finvect_sample.json")
    assert lin.kind == "finvect"
    assert any(s == "maps" for s, _, _ in lin.entities())


def test_malformed_json_reports_position(tmp_path):
    p = write(tmp_path, '{"format_version": 1,,}')
    with pytest.raises(ParseError) as exc:
        load_instance(p)
    assert exc.value.line == 1 and exc.value.column is not None


def test_missing_file():
    with pytest.raises(ParseError):
        load_instance("no/such/file.json")


def test_wrong_format_version(tmp_path):
    p = write(tmp_path, {**MINIMAL, "format_version": 2})
    with pytest.raises(ParseError, match="format_version"):
        load_instance(p)


def test_unknown_top_level_key(tmp_path):
    p = write(tmp_path, {**MINIMAL, "extra": []})
    with pytest.raises(ParseError, match="extra"):
        load_instance(p)


def test_unknown_kind(tmp_path):
    p = write(tmp_path, {**MINIMAL, "kind": "topos"})
    with pytest.raises(ParseError, match="kind"):
        load_instance(p)


def test_duplicate_names_rejected(tmp_path):
    doc = {**MINIMAL, "monoids": MINIMAL["monoids"] * 2}
    with pytest.raises(ParseError, match="duplicate"):
        load_instance(write(tmp_path, doc))


def test_unresolved_reference(tmp_path):
    doc = {**MINIMAL,
           "bimodules": [{"name": "M", "left": "A", "right": "GHOST",
                          "carrier": ["m"], "lact": [0, 0], "ract": [0, 0]}]}
    with pytest.raises(ParseError, match="GHOST"):
        load_instance(write(tmp_path, doc))


def test_bool_label_rejected(tmp_path):
    doc = {**MINIMAL,
           "monoids": [{"name": "A", "carrier": [True], "mult": [0, 0],
                        "unit": []}]}
    with pytest.raises(ParseError):
        load_instance(write(tmp_path, doc))


def test_opposite_declared_data_unsupported(tmp_path):
    doc = {**MINIMAL, "kind": "opposite",
           "children": [{"kind": "finset_disjoint"}]}
    with pytest.raises(ParseError, match="opposite"):
        load_instance(write(tmp_path, doc))


def test_opposite_without_data_loads(tmp_path):
    doc = {"format_version": 1, "kind": "opposite",
           "children": [{"kind": "finvect", "p": 3}]}
    loaded = load_instance(write(tmp_path, doc))
    assert loaded.kind == "opposite"
    assert repr(loaded.instance) == "op(matmod(3))"


def test_product_instance_loads(tmp_path):
    doc = {"format_version": 1, "kind": "product",
           "children": [{"kind": "finset_disjoint"},
                        {"kind": "finvect", "p": 2}]}
    loaded = load_instance(write(tmp_path, doc))
    assert repr(loaded.instance) == "prod(finset(+), matmod(2))"


def test_validation_error_names_first_bad_entity():
    with pytest.raises(ValidationError) as exc:
        load_instance(f"{FIX}/nonassoc_monoid.json")
    assert exc.value.entity == "lopsided"
    assert exc.value.report.first_failure().law == "monoid.assoc"


def test_validation_error_on_map():
    with pytest.raises(ValidationError) as exc:
        load_instance(f"{FIX}/nonequivariant_map.json")
    assert exc.value.entity == "twisted"
    assert exc.value.report.first_failure().law == "map.left_equivariant"


def test_validation_error_on_tetrahedron():
    with pytest.raises(ValidationError) as exc:
        load_instance(f"{FIX}/corrupted_phi013.json")
    assert exc.value.entity == "skewed"
    assert exc.value.report.first_failure().law == "simplex3.equation"


# ---------------------------------------------------------------------------
# programmatic suite


def test_run_suite_validate():
    rep = run_suite("validate", f"{FIX}/finset_sample.json")
    assert rep.ok


def test_run_suite_unknown_command():
    with pytest.raises(UnknownCommand):
        run_suite("frobnicate", f"{FIX}/finset_sample.json")


def test_run_suite_calculus_on_file():
    rep = run_suite("calculus", f"{FIX}/finvect_sample.json", max_dim=1)
    assert rep.ok


# ---------------------------------------------------------------------------
# binary behavior


def test_main_exit_codes(capsys):
    assert main(["validate", f"{FIX}/finset_sample.json"]) == 0
    capsys.readouterr()
    assert main(["axioms", f"{FIX}/broken_associator.json",
                 "--max-set-size", "1"]) == 1
    capsys.readouterr()
    assert main(["validate", "no/such/file.json"]) == 2
    capsys.readouterr()


def test_main_validation_failure_names_entity(capsys):
    code = main(["validate", f"{FIX}/nonassoc_monoid.json"])
    out = capsys.readouterr().out
    assert code == 1
    doc = json.loads(out)
    rows = [r for r in doc["rows"] if r["law"] == "file.invalid"]
    assert rows and rows[0]["subject"] == "lopsided"


def test_main_summary_shape(capsys):
    main(["validate", f"{FIX}/finset_sample.json"])
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert doc["format_version"] == 1
    assert doc["command"] == "validate"
    assert doc["ok"] is True and doc["failed"] == 0
    assert all(set(r) == {"law", "subject", "ok", "detail"} for r in doc["rows"])
    # timing lives on stderr only
    assert "s)" in captured.err and "s)" not in captured.out


def test_stdout_is_deterministic(capsys):
    main(["nerve", f"{FIX}/finset_sample.json", "--seed", "7"])
    first = capsys.readouterr().out
    main(["nerve", f"{FIX}/finset_sample.json", "--seed", "7"])
    second = capsys.readouterr().out
    assert first == second


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "morita.cli", "validate",
         f"{FIX}/finset_sample.json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ok"] is True
