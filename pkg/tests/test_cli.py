"""
Tests for padic_kwapien.cli module.
"""

import csv
import io
import json

import pytest
from click.testing import CliRunner

from padic_kwapien.cli import ExperimentConfig, cli, run
from padic_kwapien.config import reset_config
from padic_kwapien.padic import Ball
from padic_kwapien.serialize import jsonio
from padic_kwapien.stepfn import make_ball_indicator, to_dict

BUDGET = ["--restarts", "1", "--iters", "3"]


@pytest.fixture(autouse=True)
def fresh_config():
    reset_config()
    yield
    reset_config()


def invoke(*args):
    return CliRunner().invoke(cli, list(args), catch_exceptions=False)


def test_verify_parseval():
    result = invoke("verify-parseval", "--p", "3", "--M", "1", "--L", "2", "--trials", "100", "--seed", "1")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["max_parseval_deviation"] < 1e-12
    assert report["max_inversion_deviation"] < 1e-12


def test_transform(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(jsonio.dumps(to_dict(make_ball_indicator(Ball.unit(2), [1, 2]))))
    result = invoke("transform", str(path))
    assert result.exit_code == 0
    g = json.loads(result.output)
    assert (g["support_exp"], g["level_exp"]) == (0, 0)
    assert g["values"] == [[[1.0, 0.0], [2.0, 0.0]]]
    out = tmp_path / "out" / "g.json"
    assert invoke("transform", str(path), "--inverse", "--output", str(out)).exit_code == 0
    assert json.loads(out.read_text())["values"] == g["values"]


def test_khinchin(tmp_path):
    path = tmp_path / "vectors.json"
    path.write_text("[[1, 0], [0, 1]]")
    result = invoke("khinchin", "--q", "1", "--dim", "2", "--vectors", str(path), "--realization")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["expectation"] == 4
    assert report["ratio"] == 2
    assert report["rademacher_expectation"] == 4


def test_khinchin_complex_pairs(tmp_path):
    path = tmp_path / "vectors.json"
    path.write_text(json.dumps({"vectors": [[[3, 0], [0, 4]]]}))
    result = invoke("khinchin", "--dim", "2", "--vectors", str(path))
    assert json.loads(result.output)["expectation"] == pytest.approx(25)


def test_estimate_constant_euclidean():
    result = invoke("estimate-constant", "--p", "2", "--N", "1", "--q", "2", "--dim", "2", *BUDGET)
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["value"] == pytest.approx(1, abs=1e-9)
    assert report["label"] == "certified lower bound on the optimal C"


def test_witness_round_trip(tmp_path):
    out = tmp_path / "estimate.json"
    args = ["estimate-constant", "--p", "2", "--N", "1", "--q", "1.5", "--dim", "2", *BUDGET]
    assert invoke(*args, "--output", str(out)).exit_code == 0
    estimate = json.loads(out.read_text())
    result = invoke("ratio", "--witness", str(out))
    assert result.exit_code == 0
    assert json.loads(result.output)["ratio"] == pytest.approx(estimate["value"], rel=1e-12)

    bare = tmp_path / "witness.json"
    bare.write_text(json.dumps(estimate["witness"]))
    result = invoke("ratio", "--witness", str(bare), "--q", "1.5", "--dim", "2")
    assert json.loads(result.output)["ratio"] == pytest.approx(estimate["value"], rel=1e-12)


def test_dual_check():
    result = invoke("dual-check", "--p", "2", "--N", "1", "--q", "1", "--dim", "2", *BUDGET)
    assert result.exit_code == 0
    assert json.loads(result.output)["status"] == "OK"


def test_monna():
    result = invoke("monna", "--p", "3", "--precision", "3", "--pattern", "1,2")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["padic_measure"] == report["lebesgue_measure"] == "1/9"
    assert report["tau"] == "5/9"


def test_sweep_csv():
    args = ["--format", "csv", "sweep", "--p", "2", "--N", "1", "--q", "1,2,inf", "--dims", "1,2,4"]
    result = invoke(*args, *BUDGET, "--no-timing")
    assert result.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(result.output)))
    assert len(rows) == 9
    assert list(rows[0]) == ["p", "N", "q", "d", "direction", "certified_constant", "value",
                             "witness_hash", "wall_time", "error"]
    for row in rows:
        if row["q"] == "2.0" or row["d"] == "1":
            assert float(row["certified_constant"]) == pytest.approx(1, abs=1e-9)
    l1_pair = next(r for r in rows if r["q"] == "1.0" and r["d"] == "2")
    assert float(l1_pair["certified_constant"]) >= 2 - 1e-9


def test_report_is_sweep_alias():
    args = ["report", "--q", "2", "--dims", "2", *BUDGET, "--no-timing"]
    assert json.loads(invoke(*args).output)["rows"][0]["d"] == 2


def test_determinism():
    for args in (
        ["sweep", "--q", "1.5", "--dims", "2", "--direction", "upper", "--direction", "lower", *BUDGET,
         "--no-timing"],
        ["estimate-constant", "--p", "3", "--N", "1", "--q", "inf", "--dim", "2", "--seed", "9", *BUDGET],
        ["verify-parseval", "--p", "2", "--M", "2", "--L", "2", "--dim", "3", "--trials", "5"],
    ):
        assert invoke(*args).output == invoke(*args).output


def test_invalid_input_exit_code():
    result = invoke("estimate-constant", "--p", "4", "--N", "1", *BUDGET)
    assert result.exit_code == 2
    error = json.loads(result.output)
    assert error["error"] == "InvalidInputError"
    assert error["exit_code"] == 2


def test_cap_exceeded_exit_code():
    result = invoke("estimate-constant", "--p", "5", "--N", "2", "--dim", "4", *BUDGET)
    assert result.exit_code == 3
    assert json.loads(result.output)["error"] == "CapExceededError"


def test_weights_required_for_wlq():
    result = invoke("estimate-constant", "--p", "2", "--N", "1", "--norm", "wlq", *BUDGET)
    assert result.exit_code == 2


def assert_invalid_input(result):
    assert result.exit_code == 2
    error = json.loads(result.output)
    assert error["error"] == "InvalidInputError"
    assert error["exit_code"] == 2


@pytest.mark.parametrize(
    "command, content",
    [
        ("transform", {"p": 2, "support_exp": 0, "level_exp": 0, "values": [[[1, 0]]]}),
        ("transform", [1, 2, 3]),
        ("khinchin", {"vecs": [[1, 0]]}),
        ("ratio", {"witness": {"p": 2, "N": 1, "vectors": []}}),
        ("ratio", {"witness": {}, "norm": {"q": 2}}),
        ("ratio", [[1, 0]]),
    ],
)
def test_malformed_json_exits_with_error_json(tmp_path, command, content):
    path = tmp_path / "input.json"
    path.write_text(json.dumps(content))
    option = {"transform": [], "khinchin": ["--vectors"], "ratio": ["--witness"]}[command]
    assert_invalid_input(invoke(command, *option, str(path)))


def test_malformed_integer_lists():
    assert_invalid_input(invoke("monna", "--p", "2", "--precision", "3", "--pattern", "1,a"))
    assert_invalid_input(invoke("sweep", "--dims", "1,two", *BUDGET))
    assert_invalid_input(invoke("sweep", "--q", "1,x", "--dims", "2", *BUDGET))


def test_usage_errors_exit_with_error_json():
    for args in (["estimate-constant", "--N", "1"], ["monna", "--p", "x", "--precision", "2"],
                 ["no-such-command"]):
        result = invoke(*args)
        assert result.exit_code == 2
        error = json.loads(result.output)
        assert error["exit_code"] == 2
        assert error["message"]


def test_help_still_works():
    result = invoke("--help")
    assert result.exit_code == 0
    assert "estimate-constant" in result.output


def test_config_option(tmp_path):
    config = tmp_path / "config.toml"
    config.write_text('output_format = "csv"\nmax_grid_size = 8\n')
    result = invoke("--config", str(config), "verify-parseval", "--p", "2", "--M", "2", "--L", "2")
    assert result.exit_code == 3
    result = invoke("--config", str(config), "monna", "--p", "2", "--precision", "2")
    assert result.output.splitlines()[0].startswith("p,pattern,precision,")


def test_run_directly():
    config = ExperimentConfig("monna", {"p": 2, "precision": 1, "pattern": "1"})
    assert run(config) == 0
