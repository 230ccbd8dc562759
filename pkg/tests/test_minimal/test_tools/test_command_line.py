import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from wallchamber.exceptions import InvariantViolation
from wallchamber.tools import command_line
from wallchamber.tools.command_line import wallchamber_cli
from wallchamber.utils.report import make_report, record_violation

D4_TUBE_TABLE = Path(__file__).parent.parent / "test_tame" / "d4_tube_table.json"


@pytest.fixture
def runner():
    return CliRunner()


def test_nakayama_to_stdout(runner):
    result = runner.invoke(wallchamber_cli, ["nakayama", "2"])
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert document["meta"]["kind"] == "nakayama"
    assert len(document["chambers"]) == 6
    assert document["verification"]["passed"]


def test_regular_to_files(runner, tmp_path):
    output_path, svg_path = tmp_path / "a2.json", tmp_path / "a2.svg"
    arguments = ["regular", "3; 2>1,3>2,3>1", "--output-path", str(output_path), "--svg-path", str(svg_path)]
    result = runner.invoke(wallchamber_cli, arguments)
    assert result.exit_code == 0, result.output
    assert json.loads(output_path.read_text())["meta"]["quiver"] == "3; 2>1,3>1,3>2"
    assert svg_path.read_text().startswith("<svg")


def test_regular_with_tube_table(runner):
    result = runner.invoke(wallchamber_cli, ["regular", "5; 1>5,2>5,3>5,4>5", "--tube-table", str(D4_TUBE_TABLE)])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["meta"]["eta"] == ["1", "1", "1", "1", "2"]


def test_mutate(runner):
    result = runner.invoke(wallchamber_cli, ["mutate", "4; 3>1,3>4,4>2,2>1", "2,4"])
    assert result.exit_code == 0, result.output
    meta = json.loads(result.stdout)["meta"]
    assert meta["kind"] == "mutated"
    assert meta["history"] == [[2, "+-"], [4, "+-"]]
    assert meta["eta"] == ["1", "0", "1", "0"]


def test_mutate_without_sequence(runner):
    result = runner.invoke(wallchamber_cli, ["mutate", "3; 2>1,3>2,3>1"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["meta"]["kind"] == "regular"


@pytest.mark.parametrize(
    "arguments",
    [
        ["regular", "3; 1>4"],
        ["regular", "2; 1>2,1>2,1>2"],
        ["regular", "5; 1>5,2>5,3>5,4>5"],
        ["mutate", "4; 1>2,2>3,3>4,1>4", "2,x"],
        ["nakayama", "9"],
        ["verify"],
    ],
)
def test_usage_errors(runner, arguments):
    assert runner.invoke(wallchamber_cli, arguments).exit_code == 2


def test_verify_rank(runner):
    result = runner.invoke(wallchamber_cli, ["verify", "--rank", "2", "--suite", "stt", "--seed", "4"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["passed"]
    assert report["seed"] == 4
    assert report["stt"]["counts"] == {"1": 2, "2": 6}


def test_verify_on_threads(runner):
    arguments = ["verify", "3; 2>1,3>2,3>1", "--suite", "thmB", "--suite", "thmC"]
    result = runner.invoke(wallchamber_cli, arguments, env={"WALLCHAMBER_NUM_THREADS": "2"})
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["suites"] == ["thmB", "thmC"]


def test_failed_verification(runner, monkeypatch):
    def failing_suites(suites, **kwargs):
        report = make_report(suites=list(suites))
        record_violation(report, "complete", suite="fan")
        return report

    monkeypatch.setattr(command_line, "run_suites", failing_suites)
    result = runner.invoke(wallchamber_cli, ["verify", "3; 2>1,3>2,3>1", "--suite", "fan"])
    assert result.exit_code == 1
    assert json.loads(result.stdout)["passed"] is False


def test_invariant_violation(runner, monkeypatch):
    class BrokenPicture:
        def __init__(self, **kwargs):
            raise InvariantViolation("transported label turned negative")

    monkeypatch.setattr(command_line, "RegularPicture", BrokenPicture)
    result = runner.invoke(wallchamber_cli, ["regular", "3; 2>1,3>2,3>1"])
    assert result.exit_code == 3
    assert "transported label turned negative" in result.output
