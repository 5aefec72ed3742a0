import json
import subprocess
import sys

import pytest

from picard import catalog
from picard.cli import main
from picard.textio import dumps, parse


def run(*argv):
    return subprocess.run([sys.executable, "-m", "picard", *argv], capture_output=True, text=True)


def checks(report_text):
    t = parse(report_text).sections["report"].tables
    return {k[0]: v for k, v in t["check"].items()}, {k[0]: v for k, v in t.get("witness", {}).items()}


def test_validate_catalog_instance(capsys):
    assert main(["validate", "catalog:D4@Z4", "--deterministic"]) == 0
    out = capsys.readouterr().out
    status, _ = checks(out)
    assert status and set(status.values()) == {"PASS"}
    assert "scalars.ring.mult.pentagon" in status
    assert "info result = PASS" in out


def test_validate_file_and_mutation(tmp_path, capsys):
    bad = dumps(catalog.ring("Z4")).replace("mulm i1 i1 = i1", "mulm i1 i1 = i3")
    path = tmp_path / "z4.txt"
    path.write_text(bad)
    assert main(["validate", str(path)]) == 1
    status, witness = checks(capsys.readouterr().out)
    assert status["ring.mult.bifunctor"] == "FAIL"
    assert "ring.mult.bifunctor" in witness


def test_parse_error_exits_two_with_location(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text(dumps(catalog.twogroup("B2")).replace("unit = 0", "colour = 0"))
    assert main(["validate", str(path), "--deterministic"]) == 2
    captured = capsys.readouterr()
    status, witness = checks(captured.out)
    assert status == {"input": "FAIL"}
    assert witness["input"][0] == "PARSE_ERROR"
    assert "line" in captured.err


def test_unknown_catalog_name_is_usage(capsys):
    assert main(["validate", "catalog:D5"]) == 2


def test_wrong_input_type_is_usage(capsys):
    assert main(["puppe", "catalog:D2@Z4"]) == 2


def test_budget_exceeded_exits_three(capsys):
    assert main(["construct", "hom", "catalog:D4@Z4", "catalog:D4@Z4", "--budget", "2"]) == 3
    err = capsys.readouterr().err
    assert err.startswith("# picard: BUDGET_EXCEEDED")
    status, witness = checks(err)
    assert status == {"budget": "FAIL"}
    assert witness["budget"] == ("BUDGET_EXCEEDED",)


def test_budget_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("PICARD_BUDGET", "2")
    assert main(["equiv", "catalog:D4@Z4", "catalog:D4@Z4"]) == 3
    monkeypatch.setenv("PICARD_BUDGET", "many")
    assert main(["equiv", "catalog:D4@Z4", "catalog:D4@Z4"]) == 2


def test_equiv_reports_fingerprint_witness(capsys):
    assert main(["equiv", "catalog:D2@Z6", "catalog:D3@Z6", "--deterministic"]) == 1
    out = capsys.readouterr().out
    assert "witness equivalence = (fingerprint,(2,1,(1,1)),(3,1,(1,1,1)))" in out


def test_equiv_success_includes_witness_checks(capsys):
    assert main(["equiv", "catalog:B2@Z4", "catalog:B2@Z4", "--format", "json-lines"]) == 0
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert rows[-1]["result"] == "PASS"
    assert any(r.get("axiom", "").startswith("witness.") for r in rows[:-1])
    assert "elapsed" in rows[-1]["info"]


def test_equiv_refuses_mixed_rings(capsys):
    assert main(["equiv", "catalog:D2@Z2", "catalog:D2@Z4"]) == 2


def test_puppe_command(capsys):
    assert main(["puppe", "catalog:mod2-D4-D2@Z4", "--deterministic"]) == 0
    status, _ = checks(capsys.readouterr().out)
    assert sorted(status) == ["puppe.coker_ker", "puppe.coroot_pip", "puppe.ker_coker", "puppe.root_copip"]


def test_catalog_listing(capsys):
    assert main(["catalog"]) == 0
    assert capsys.readouterr().out.split() == catalog.names()


@pytest.mark.parametrize("construction,inputs,part", [
    ("kernel", ["catalog:mod2-D4-D2@Z4"], "eps"),
    ("cokernel", ["catalog:times2-D2-D4@Z4"], "pi"),
    ("pip", ["catalog:mod2-B4-B2@Z4"], "sigma"),
    ("copip", ["catalog:times2-D2-D4@Z4"], "module"),
    ("root", ["catalog:copip-D2-D4@Z4"], "map"),
    ("coroot", ["catalog:pip-B4-B2@Z4"], "module"),
    ("im2pl", ["catalog:mod2-D4-D2@Z4"], "Omega"),
    ("biproduct", ["catalog:D2@Z6", "catalog:D3@Z6"], "i1"),
    ("end", ["catalog:D3"], "module"),
    ("hom", ["catalog:B2@Z2", "catalog:B2@Z2"], "module"),
])
def test_construct_then_validate(tmp_path, construction, inputs, part, capsys):
    out = tmp_path / "out.txt"
    assert main(["construct", construction, *inputs, "--part", part, "-o", str(out), "--deterministic"]) == 0
    assert main(["validate", str(out)]) == 0


def test_construct_pipes_into_validate():
    made = run("construct", "kernel", "catalog:mod2-D4-D2@Z4")
    assert made.returncode == 0
    assert made.stdout.startswith("picard 1\nkind module\n")
    assert "info result = PASS" in made.stderr
    checked = subprocess.run([sys.executable, "-m", "picard", "validate", "-"], input=made.stdout,
                             capture_output=True, text=True)
    assert checked.returncode == 0


def test_construct_rejects_unknown_part(capsys):
    assert main(["construct", "kernel", "catalog:mod2-D4-D2@Z4", "--part", "nope"]) == 2


def test_deterministic_reports_are_byte_identical():
    argv = ["puppe", "catalog:mod2-B4-B2@Z4", "--deterministic"]
    first, second = run(*argv), run(*argv)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert "elapsed" not in first.stdout


def test_options_before_or_after_the_subcommand(capsys):
    assert main(["--format", "json-lines", "validate", "catalog:B2"]) == 0
    assert capsys.readouterr().out.startswith("{")
    assert main(["validate", "catalog:B2", "--format", "json-lines"]) == 0
    assert capsys.readouterr().out.startswith("{")
