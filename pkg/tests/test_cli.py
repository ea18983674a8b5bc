import json
from pathlib import Path

import click
from click.testing import CliRunner
import pytest

from fracmis.cli import cli
from fracmis.cli import parse_args
from fracmis.commands import Command
from fracmis.commands import Method
from fracmis.commands import Subcommand
from fracmis.commands import run
from fracmis.graphs import Family

OUTPUTS_DIR = Path(__file__).parent / "outputs"


def scenario(name, args, expected):
  return {"name": name, "args": args, "expected": expected}


def get_test_scenarios():
  """Each scenario is a command line and the report it must print, minus timing."""
  return [
    scenario("alpha psw closed", ["alpha", "-F", "psw", "-n", "6", "-m", "closed"], "alpha_psw_6_closed.json"),
    scenario("alpha gasket classes", ["alpha", "-F", "gasket", "-n", "3", "--classes"], "alpha_gasket_3_classes.json"),
    scenario(
      "alpha gasket triangle classes",
      ["alpha", "--family", "gasket", "--n", "1", "--classes"],
      "alpha_gasket_1_classes.json",
    ),
    scenario(
      "alpha psw oracle classes",
      ["alpha", "--family", "psw", "--n", "4", "--method", "oracle", "--classes"],
      "alpha_psw_4_oracle_classes.json",
    ),
    scenario("count gasket oracle", ["count", "-F", "gasket", "-n", "4", "-m", "oracle"], "count_gasket_4_oracle.json"),
    scenario("count gasket closed", ["count", "-F", "gasket", "-n", "6", "-m", "closed"], "count_gasket_6_closed.json"),
    scenario("count psw dp", ["count", "--family", "psw", "--n", "5"], "count_psw_5_dp.json"),
    scenario("cover psw dp", ["cover", "--family", "psw", "--n", "3"], "cover_psw_3_dp.json"),
    scenario("cover closed", ["cover", "-F", "gasket", "-n", "20", "-m", "closed"], "cover_gasket_20_closed.json"),
    scenario("witness psw dp", ["witness", "--family", "psw", "--n", "2"], "witness_psw_2_dp.json"),
    scenario("witness gasket dp", ["witness", "--family", "gasket", "--n", "2"], "witness_gasket_2_dp.json"),
    scenario("enumerate gasket", ["enumerate", "-F", "gasket", "-n", "3", "-l", "1"], "enumerate_gasket_3.json"),
  ]


def invoke(args):
  return CliRunner().invoke(cli, args)


@pytest.mark.parametrize("scenario", get_test_scenarios(), ids=lambda scenario: scenario["name"])
def test_report_scenarios(scenario):
  result = invoke(scenario["args"])
  assert result.exit_code == 0, f"Command failed for scenario '{scenario['name']}' with output: {result.output}"

  generated = json.loads(result.output)
  elapsed = generated.pop("elapsed_ms")
  assert isinstance(elapsed, int) and elapsed >= 0

  with open(OUTPUTS_DIR / scenario["expected"]) as f:
    expected = json.load(f)

  assert generated == expected, (
    f"Report mismatch for scenario '{scenario['name']}':\nGenerated: {generated}\nExpected: {expected}"
  )


def test_reports_are_deterministic():
  args = ["count", "--family", "gasket", "--n", "5"]
  first, second = json.loads(invoke(args).output), json.loads(invoke(args).output)
  first.pop("elapsed_ms")
  second.pop("elapsed_ms")
  assert first == second


class TestParseArgs:
  def test_alpha(self):
    cmd = parse_args(["alpha", "--family", "psw", "--n", "5"])
    assert (cmd.subcommand, cmd.family, cmd.n, cmd.method) == (Subcommand.ALPHA, Family.SCALE_FREE_WEB, 5, Method.DP)

  def test_count_closed(self):
    cmd = parse_args(["count", "--family", "gasket", "--n", "6", "--method", "closed"])
    assert (cmd.subcommand, cmd.family, cmd.n, cmd.method) == (
      Subcommand.COUNT,
      Family.SIERPINSKI_GASKET,
      6,
      Method.CLOSED,
    )

  def test_missing_family(self):
    with pytest.raises(click.UsageError, match="--family") as info:
      parse_args(["alpha", "--n", "5"])
    assert info.value.exit_code == 2
    assert str(info.value).startswith("Missing option")

  def test_unknown_flag(self):
    with pytest.raises(click.UsageError):
      parse_args(["alpha", "--family", "psw", "--n", "5", "--fast"])

  def test_generation_must_be_positive(self):
    with pytest.raises(click.BadParameter):
      parse_args(["alpha", "--family", "psw", "--n", "0"])

  def test_caps(self):
    cmd = parse_args(["alpha", "--family", "psw", "--n", "5", "--cap-vertices", "200", "--cap-n", "8"])
    assert cmd.limits.oracle_cap == 200
    assert cmd.limits.build_cap == 8

  def test_enumerate_defaults_to_oracle(self):
    assert parse_args(["enumerate", "--family", "psw", "--n", "2"]).method is Method.ORACLE

  def test_verify_defaults(self):
    cmd = parse_args(["verify"])
    assert cmd.subcommand is Subcommand.VERIFY
    assert cmd.max_n == 4


@pytest.mark.parametrize(
  "subcommand", ["generate", "alpha", "count", "enumerate", "witness", "cover", "verify", "bench", "info"]
)
def test_help(subcommand):
  result = invoke([subcommand, "--help"])
  assert result.exit_code == 0
  assert "Usage:" in result.output


class TestExitCodes:
  def test_missing_family(self):
    result = invoke(["alpha", "--n", "5"])
    assert result.exit_code == 2
    assert "--family" in result.output

  def test_oracle_over_cap(self):
    result = invoke(["alpha", "--family", "psw", "--n", "6", "--method", "oracle"])
    assert result.exit_code == 2
    assert "exceeds the cap of 60" in result.output
    assert "--method dp" in result.output

  def test_build_over_cap(self):
    result = invoke(["witness", "--family", "gasket", "--n", "17"])
    assert result.exit_code == 2
    assert "--cap-n" in result.output

  def test_enumerate_needs_oracle(self):
    result = invoke(["enumerate", "--family", "psw", "--n", "2", "--method", "dp"])
    assert result.exit_code == 2
    assert "--method oracle" in result.output

  def test_closed_refuses_gasket_witness(self):
    result = invoke(["witness", "--family", "gasket", "--n", "3", "--method", "closed"])
    assert result.exit_code == 2
    assert "no closed-form" in result.output

  def test_closed_refuses_gasket_triangle(self):
    result = invoke(["alpha", "--family", "gasket", "--n", "1", "--method", "closed"])
    assert result.exit_code == 2
    assert "requires n >= 2" in result.output

  def test_failed_verification_exits_one(self, monkeypatch):
    from fracmis import commands
    from fracmis.verify import CheckResult

    monkeypatch.setattr(commands, "verify_suite", lambda *args, **kwargs: [CheckResult("broken", False, "no")])
    result = invoke(["verify", "--workers", "1"])
    assert result.exit_code == 1
    assert json.loads(result.output)["passed"] is False


class TestGenerate:
  def test_streams_edge_list(self):
    result = invoke(["generate", "--family", "psw", "--n", "1"])
    assert result.exit_code == 0
    assert result.output == "# family=psw n=1 vertices=3 edges=3\n0 1\n0 2\n1 2\n"

  def test_dot(self):
    result = invoke(["generate", "--family", "gasket", "--n", "2", "--format", "dot"])
    assert result.output.startswith("graph gasket_2 {\n")

  def test_writes_file(self):
    runner = CliRunner()
    with runner.isolated_filesystem():
      args = ["generate", "--family", "gasket", "--n", "3", "--format", "json", "--out", "out/s3.json"]
      result = runner.invoke(cli, args)
      assert result.exit_code == 0
      report = json.loads(result.output)
      assert report["path"] == "out/s3.json"
      assert report["num_vertices"] == "15"
      document = json.loads(Path("out/s3.json").read_text())
      assert document["boundary"] == [0, 8, 14]


class TestVerifyAndBench:
  def test_verify_small(self):
    result = invoke(["verify", "--max-n", "2", "--workers", "2"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["passed"] is True
    assert "gasket count n=2 equals 1" in [check["name"] for check in report["checks"]]

  def test_verify_report_to_file(self):
    runner = CliRunner()
    with runner.isolated_filesystem():
      result = runner.invoke(cli, ["verify", "--max-n", "2", "--out", "verify.json"])
      assert result.exit_code == 0
      assert json.loads(Path("verify.json").read_text())["passed"] is True

  def test_bench_within_caps(self):
    result = invoke(["bench", "--family", "psw", "--n", "3"])
    assert result.exit_code == 0
    timings = json.loads(result.output)["timings_ms"]
    assert set(timings) == {"generate", "dp", "oracle"}
    assert all(isinstance(value, int) for value in timings.values())

  def test_bench_without_oracle(self):
    result = invoke(["bench", "--family", "gasket", "--n", "30"])
    report = json.loads(result.output)
    assert set(report["timings_ms"]) == {"dp"}
    assert report["alpha"] == str((3**29 + 3) // 2)


def test_run_returns_report_and_code():
  report, code = run(Command(Subcommand.ALPHA, Family.SCALE_FREE_WEB, 6, Method.CLOSED))
  assert code == 0
  assert report.alpha == "243"


def test_info():
  result = invoke(["info"])
  assert result.exit_code == 0
  assert "fracmis version" in result.output
