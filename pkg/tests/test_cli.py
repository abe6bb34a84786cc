"""End-to-end command-line tests: exit codes, JSON shapes, determinism."""

from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

import factolab.cli as cli


def run_cli(*argv, stdin_text=None, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "factolab", *argv],
        input=stdin_text,
        capture_output=True,
        text=True,
        env=env,
    )


def run_inproc(*argv, capsys=None):
    code = cli.main(list(argv))
    out = capsys.readouterr().out if capsys else ""
    return code, out


@pytest.fixture
def p23(tmp_path):
    path = tmp_path / "p23.json"
    path.write_text(json.dumps({"dim": 1, "generators": [["2"], ["3"]]}))
    return str(path)


@pytest.fixture
def puiseux(tmp_path):
    path = tmp_path / "puiseux.json"
    path.write_text(
        json.dumps({"dim": 1, "generators": [["1/2"], ["2/3"]]})
    )
    return str(path)


# ---------------------------------------------------------------------------
# analyze / factorize / evidence
# ---------------------------------------------------------------------------


def test_analyze_2_3(p23, capsys):
    code, out = run_inproc("analyze", p23, capsys=capsys)
    assert code == 0
    report = json.loads(out)
    assert report["kernel_basis"] == [[3, -2]]
    assert report["is_lfm"] and not report["is_ufm"] and not report["is_hfm"]
    assert report["labels"] == ["purely_long", "purely_short"]
    assert report["master"] == {"left": [3, 0], "right": [0, 2]}
    assert report["witnesses"]["not_ufm"] == [3, -2]


def test_analyze_output_is_byte_identical(p23):
    first = run_cli("analyze", p23)
    second = run_cli("analyze", p23)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.strip().startswith("{")


def test_analyze_reads_stdin():
    payload = json.dumps({"dim": 1, "generators": [["2"], ["3"]]})
    result = run_cli("analyze", "-", stdin_text=payload)
    assert result.returncode == 0
    assert json.loads(result.stdout)["kernel_rank"] == 1


def test_analyze_requires_normalized_unless_flagged(tmp_path, capsys):
    path = tmp_path / "p234.json"
    path.write_text(json.dumps({"dim": 1, "generators": [["2"], ["3"], ["4"]]}))
    result = run_cli("analyze", str(path))
    assert result.returncode == 1
    assert "error" in result.stderr

    code, out = run_inproc("analyze", str(path), "--normalize", capsys=capsys)
    assert code == 0
    assert json.loads(out)["kernel_basis"] == [[3, -2]]


def test_factorize(p23, capsys):
    code, out = run_inproc(
        "factorize", p23, "--element", "12", capsys=capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["element"] == ["12"]
    assert data["factorizations"] == [[0, 4], [3, 2], [6, 0]]
    assert data["lengths"] == [4, 5, 6]


def test_factorize_element_outside_monoid(p23, capsys):
    code, out = run_inproc(
        "factorize", p23, "--element", "1", capsys=capsys
    )
    assert code == 0
    assert json.loads(out)["factorizations"] == []


def test_factorize_dimension_mismatch(p23):
    result = run_cli("factorize", p23, "--element", "1,2")
    assert result.returncode == 1


def test_evidence(p23, capsys):
    code, out = run_inproc(
        "evidence", p23, "--bound", "20", capsys=capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["bound"] == 20
    assert len(data["relations"]) == 6
    assert data["relations"][0] == {"left": [3, 0], "right": [0, 2]}


# ---------------------------------------------------------------------------
# error reporting
# ---------------------------------------------------------------------------


def test_malformed_json_reports_position(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 1, "generators": [["2"],]}')
    result = run_cli("analyze", str(path))
    assert result.returncode == 1
    assert "line 1 column" in result.stderr


def test_missing_file(tmp_path):
    result = run_cli("analyze", str(tmp_path / "nope.json"))
    assert result.returncode == 1
    assert "error" in result.stderr


def test_not_pointed_presentation(tmp_path):
    path = tmp_path / "sym.json"
    path.write_text(json.dumps({"dim": 1, "generators": [["1"], ["-1"]]}))
    result = run_cli("analyze", str(path))
    assert result.returncode == 1
    assert "pointed" in result.stderr


def test_unknown_subcommand_fails():
    result = run_cli("no-such-command")
    assert result.returncode == 2  # argparse usage error


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def test_construct_master(capsys):
    code, out = run_inproc(
        "construct-master", "--long", "3", "--short", "2", capsys=capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["presentation"]["generators"] == [["1"], ["3/2"]]
    assert data["report"]["master"] == {"left": [3, 0], "right": [0, 2]}


def test_construct_master_rejects_inadmissible():
    result = run_cli("construct-master", "--long", "2", "--short", "3")
    assert result.returncode == 1
    assert "longer" in result.stderr


def test_pls_example(capsys):
    code, out = run_inproc("pls-example", "2", "1", capsys=capsys)
    assert code == 0
    data = json.loads(out)
    assert data["report"]["purely_long"] == [0, 1]
    assert data["report"]["purely_short"] == [2]


def test_pls_example_rejects_zero():
    result = run_cli("pls-example", "0", "1")
    assert result.returncode == 1


# ---------------------------------------------------------------------------
# gallery
# ---------------------------------------------------------------------------


def test_gallery_default(capsys):
    code, out = run_inproc("gallery", capsys=capsys)
    assert code == 0
    data = json.loads(out)
    assert data["truncation"] == 4
    assert data["mismatches"] == []
    assert [f["name"] for f in data["fixtures"]][0] == "lfm-pair-2-3"
    assert len(data["fixtures"]) == 6


def test_gallery_env_and_flag_precedence():
    env_run = run_cli("gallery", env_extra={"FACTOLAB_TRUNCATION_K": "3"})
    assert json.loads(env_run.stdout)["truncation"] == 3
    flag_run = run_cli(
        "gallery", "--k", "5", env_extra={"FACTOLAB_TRUNCATION_K": "3"}
    )
    assert json.loads(flag_run.stdout)["truncation"] == 5


def test_gallery_bad_env_value():
    result = run_cli("gallery", env_extra={"FACTOLAB_TRUNCATION_K": "many"})
    assert result.returncode == 1
    assert "FACTOLAB_TRUNCATION_K" in result.stderr


def test_gallery_rejects_tiny_k():
    result = run_cli("gallery", "--k", "1")
    assert result.returncode == 1


def test_gallery_mismatch_exits_2(monkeypatch, capsys):
    monkeypatch.setattr(cli, "verify_gallery", lambda gallery: ["boom"])
    code, out = run_inproc("gallery", capsys=capsys)
    assert code == 2
    assert json.loads(out)["mismatches"] == ["boom"]


# ---------------------------------------------------------------------------
# semiring commands
# ---------------------------------------------------------------------------


def test_semiring_atom_reducible(tmp_path, capsys):
    path = tmp_path / "poly.json"
    path.write_text(
        json.dumps(
            {
                "coeff_domain": "N",
                "monoid": "N0",
                "terms": [["4", "1"], ["3", "2"], ["2", "2"], ["1", "7"], ["0", "6"]],
            }
        )
    )
    code, out = run_inproc("semiring-atom", str(path), capsys=capsys)
    assert code == 0
    data = json.loads(out)
    assert data["is_atom"] is False
    assert data["witness"]["factor"]["terms"] == [["1", "1"], ["0", "1"]]
    assert data["witness"]["cofactor"]["terms"] == [
        ["3", "1"],
        ["2", "1"],
        ["1", "1"],
        ["0", "6"],
    ]


def test_semiring_atom_atom_case(capsys):
    payload = json.dumps(
        {"coeff_domain": "N", "monoid": "N0", "terms": [["1", "1"], ["0", "1"]]}
    )
    result = run_cli("semiring-atom", "-", stdin_text=payload)
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data == {"is_atom": True, "witness": None}


def test_semiring_atom_rejects_rational_domain():
    payload = json.dumps(
        {"coeff_domain": "Q", "monoid": "N0", "terms": [["1", "1"]]}
    )
    result = run_cli("semiring-atom", "-", stdin_text=payload)
    assert result.returncode == 1


def test_algebra_witness_2_3(capsys):
    code, out = run_inproc("algebra-witness", "2", "3", capsys=capsys)
    assert code == 0
    data = json.loads(out)
    assert (data["p"], data["q"], data["r"], data["s"], data["c"]) == (2, 1, 1, 1, 1)
    assert data["product"]["terms"] == [["6", "1"], ["5", "-1"]]
    assert data["factorization_length"] == 2
    assert data["z1"][0]["factor"]["terms"] == [["2", "1"]]
    assert data["z1"][0]["multiplicity"] == 1
    assert data["monoid"]["generators"] == [["2"], ["3"]]


def test_algebra_witness_rejects_bad_pair():
    result = run_cli("algebra-witness", "2", "4")
    assert result.returncode == 1
    assert "coprime" in result.stderr


def test_case1(puiseux, capsys):
    code, out = run_inproc("case1", puiseux, "0", "1", capsys=capsys)
    assert code == 0
    data = json.loads(out)
    assert data == {"left": [4, 0], "right": [0, 3], "element": "2"}


def test_case1_rejects_same_atom(puiseux):
    result = run_cli("case1", puiseux, "0", "0")
    assert result.returncode == 1


# ---------------------------------------------------------------------------
# pipelines
# ---------------------------------------------------------------------------


def test_construct_then_analyze_round_trip():
    built = run_cli("construct-master", "--long", "1", "2", "--short", "2")
    assert built.returncode == 0
    data = json.loads(built.stdout)
    reread = run_cli(
        "analyze", "-", stdin_text=json.dumps(data["presentation"])
    )
    assert reread.returncode == 0
    assert json.loads(reread.stdout) == data["report"]


def test_console_script_is_installed():
    result = subprocess.run(
        ["factolab", "--help"], capture_output=True, text=True
    )
    assert result.returncode == 0
    assert "analyze" in result.stdout and "gallery" in result.stdout
