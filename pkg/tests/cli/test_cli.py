# Tests for the quasi-schur command line
import csv
import io
import json
import os

import pytest
from click.testing import CliRunner

from quasi_schur_app import main

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "chains", "golden")


@pytest.fixture
def runner_instance():
    return CliRunner()


@pytest.fixture
def worked_example_path(tmp_path):
    terms = {(1, 2, 2): 1, (1, 3, 1): 1, (1, 4): 1, (2, 2, 1): 1, (2, 3): 2, (3, 2): 2, (4, 1): 1}
    payload = {"degree": 5, "basis": "F",
               "terms": [{"index": list(index), "coeff": str(coeff)} for index, coeff in terms.items()]}
    path = tmp_path / "worked_example.json"
    path.write_text(json.dumps(payload))
    return str(path)


def test_version(runner_instance):
    result = runner_instance.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "0.1.0" in result.output


def test_qk_one(runner_instance, tmp_path):
    out = tmp_path / "qk1.csv"
    result = runner_instance.invoke(main, ["qk", "1", "--output", str(out)])
    assert result.exit_code == 0
    assert list(csv.reader(io.StringIO(out.read_text()))) == [["", "[1]"], ["[1]", "1"]]


def test_qk_seven_inverse(runner_instance, tmp_path):
    out = tmp_path / "qk7.json"
    result = runner_instance.invoke(main, ["qk", "7", "--inverse", "--cross-check", "--format", "json",
                                           "--output", str(out)])
    assert result.exit_code == 0
    assert "max |entry| = 4" in result.output
    payload = json.loads(out.read_text())
    assert payload["inverse"] is True
    assert len(payload["rows"]) == 15
    assert payload["max_abs_entry"] == "4"


def test_qk_seven_csv(runner_instance, tmp_path):
    out = tmp_path / "qk7.csv"
    result = runner_instance.invoke(main, ["qk", "7", "--output", str(out)])
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert len(rows) == 16
    assert rows[6][:3] == ["[4,2,1]", "0", "0"]
    assert rows[6][12] == "2"


def test_qk_zero_is_rejected(runner_instance):
    result = runner_instance.invoke(main, ["qk", "0"])
    assert result.exit_code == 3


def test_f2s_worked_example(runner_instance, worked_example_path):
    result = runner_instance.invoke(main, ["f2s", worked_example_path])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload == {"degree": 5, "basis": "s",
                       "terms": [{"index": [4, 1], "coeff": "1"}, {"index": [3, 2], "coeff": "1"}]}


def test_f2s_via_chains_text(runner_instance, worked_example_path):
    result = runner_instance.invoke(main, ["f2s", worked_example_path, "--via-chains", "--format", "text"])
    assert result.exit_code == 0
    assert "s[4,1] + s[3,2]" in result.output


def test_f2s_rejects_non_symmetric(runner_instance, tmp_path):
    path = tmp_path / "f21.json"
    path.write_text('{"degree": 3, "basis": "F", "terms": [{"index": [2, 1], "coeff": "1"}]}')
    result = runner_instance.invoke(main, ["f2s", str(path)])
    assert result.exit_code == 3
    assert "not symmetric" in result.output


def test_f2s_rejects_bad_json(runner_instance, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    result = runner_instance.invoke(main, ["f2s", str(path)])
    assert result.exit_code == 3


def test_f2s_rejects_csv_format(runner_instance, worked_example_path):
    result = runner_instance.invoke(main, ["f2s", worked_example_path, "--format", "csv"])
    assert result.exit_code == 3


def test_plethysm_leading_only(runner_instance):
    result = runner_instance.invoke(main, ["plethysm", "[2,1]", "[2,2]", "--leading-only"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"leading_term": [6, 5, 1]}


def test_plethysm_leading_only_text(runner_instance):
    result = runner_instance.invoke(main, ["plethysm", "[2,1]", "[2,2]", "--leading-only", "--format", "text"])
    assert result.exit_code == 0
    assert result.output == "[6,5,1]\n"


def test_plethysm_second_leading_term(runner_instance):
    result = runner_instance.invoke(main, ["plethysm", "[1,1,1]", "[2]", "--leading-only", "--second"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"leading_term": [4, 1, 1], "second_leading_term": [3, 3]}


def test_plethysm_schur_basis(runner_instance):
    result = runner_instance.invoke(main, ["plethysm", "[2]", "[2]", "--basis", "s"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["terms"] == [{"index": [4], "coeff": "1"}, {"index": [2, 2], "coeff": "1"}]


def test_plethysm_size_guard(runner_instance):
    result = runner_instance.invoke(main, ["plethysm", "[3]", "[3,3]"])
    assert result.exit_code == 3
    assert "size guard" in result.output


@pytest.mark.parametrize('inputs', [["plethysm", "[1,2]", "[2]"], ["plethysm", "2", "[2]"], ["chains", "[a]", "[1]"]])
def test_bad_partition_is_a_usage_error(runner_instance, inputs):
    result = runner_instance.invoke(main, inputs)
    assert result.exit_code == 2


def test_twovar(runner_instance):
    result = runner_instance.invoke(main, ["twovar", "2", "3"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"w": 2, "h": 3,
                                         "terms": [{"index": [6, 0], "coeff": "1"}, {"index": [4, 2], "coeff": "1"}]}


def test_twovar_all_methods(runner_instance):
    result = runner_instance.invoke(main, ["twovar", "3", "6", "--method", "all", "--format", "text"])
    assert result.exit_code == 0
    assert result.output.startswith("s3[s6](x,y) =")


def test_twovar_scd_unsupported_width(runner_instance):
    result = runner_instance.invoke(main, ["twovar", "5", "2", "--method", "scd"])
    assert result.exit_code == 3


def test_twovar_unknown_method(runner_instance):
    result = runner_instance.invoke(main, ["twovar", "2", "3", "--method", "guess"])
    assert result.exit_code == 2


def test_scd_empty_box(runner_instance):
    result = runner_instance.invoke(main, ["scd", "2", "0"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"w": 2, "h": 0, "chains": [{"elements": [[]], "labels": []}]}


def test_scd_golden_match(runner_instance):
    result = runner_instance.invoke(main, ["scd", "3", "10", "--golden", os.path.join(GOLDEN_DIR, "L3x10.json")])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["golden"] == {"match": True, "differences": []}
    assert len(payload["chains"]) == 18


def test_scd_golden_mismatch_exits_four(runner_instance, tmp_path):
    out = tmp_path / "L3x3.json"
    result = runner_instance.invoke(main, ["scd", "3", "3", "--golden", os.path.join(GOLDEN_DIR, "L4x3.json"),
                                           "--output", str(out)])
    assert result.exit_code == 4
    payload = json.loads(out.read_text())
    assert payload["golden"]["match"] is False


def test_scd_certify(runner_instance):
    result = runner_instance.invoke(main, ["scd", "3", "4", "--certify"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["certificate"]["passed"] is True
    assert sorted(payload["certificate"]["checks"]) == sorted(
        ["cover", "saturation", "rank_symmetry", "restriction", "extension", "pattern"])


def test_scd_certify_text(runner_instance):
    result = runner_instance.invoke(main, ["scd", "4", "3", "--certify", "--format", "text"])
    assert result.exit_code == 0
    assert "Certificate for L(4,3)" in result.output
    assert "PASSED" in result.output


def test_scd_unsupported_width(runner_instance):
    result = runner_instance.invoke(main, ["scd", "5", "3"])
    assert result.exit_code == 3


def test_chains(runner_instance):
    result = runner_instance.invoke(main, ["chains", "[4,1,1,1]", "[2,2,2,1]"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["sum"] == "1"
    assert sorted(chain["sign"] for chain in payload["chains"]) == ["-1", "1", "1"]
    assert payload["mu"] == [4, 1, 1, 1]
    assert payload["lambda"] == [2, 2, 2, 1]


def test_chains_text(runner_instance):
    result = runner_instance.invoke(main, ["chains", "[4,1,1,1]", "[2,2,2,1]", "--format", "text"])
    assert result.exit_code == 0
    assert "Signed sum: 1 (inverse matrix entry 1)" in result.output


def test_chains_size_mismatch(runner_instance):
    result = runner_instance.invoke(main, ["chains", "[2]", "[2,1]"])
    assert result.exit_code == 3


def test_verbose_flag(runner_instance, tmp_path):
    out = tmp_path / "qk3.csv"
    result = runner_instance.invoke(main, ["-vv", "qk", "3", "--output", str(out)])
    assert result.exit_code == 0
    assert out.read_text().startswith(",[3],")
