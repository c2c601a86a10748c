import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from fracpoly.cli import cli
from fracpoly.scalars import parse_decimal_str
from fracpoly.verify import RunConfig, run_suite


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args, env=None):
    return runner.invoke(cli, list(args), env=env, catch_exceptions=False)


def test_numbers_bernoulli(runner):
    r = invoke(runner, "numbers", "--family", "bernoulli", "--alpha", "1",
               "--lambda", "1", "--max", "4")
    assert r.exit_code == 0
    values = [line.split()[1] for line in r.output.strip().splitlines()[1:]]
    assert values == ["1", "-1/2", "1/6", "0", "-1/30"]


def test_numbers_genocchi(runner):
    r = invoke(runner, "numbers", "--family", "genocchi", "--max", "2")
    values = [line.split()[1] for line in r.output.strip().splitlines()[1:]]
    assert values == ["0", "1", "-1"]


def test_numbers_euler_alpha2(runner):
    r = invoke(runner, "numbers", "--family", "euler", "--alpha", "2", "--max", "0")
    values = [line.split()[1] for line in r.output.strip().splitlines()[1:]]
    assert values == ["1"]


def test_numbers_rejects_bad_params(runner):
    r = runner.invoke(cli, ["numbers", "--family", "euler", "--lambda", "-1", "--max", "2"])
    assert r.exit_code == 2


def test_numbers_json_roundtrip(runner):
    r = invoke(runner, "numbers", "--family", "bernoulli", "--lambda", "2",
               "--max", "6", "--format", "json")
    rows = json.loads(r.output)
    from fracpoly.families import FamilyParams, family_numbers

    want = family_numbers(FamilyParams("bernoulli", 1, 2), 6)
    for row, w in zip(rows, want):
        assert row["domain"] == "rational"
        assert Fraction(row["value"]) == w.value


def test_numbers_json_roundtrip_float(runner):
    # non-integer alpha forces the float domain; printed strings must parse
    # back to the same mpf at the stated precision
    r = invoke(runner, "numbers", "--family", "euler", "--alpha", "1/2",
               "--max", "3", "--format", "json")
    rows = json.loads(r.output)
    from fracpoly.families import FamilyParams, family_numbers

    want = family_numbers(FamilyParams("euler", Fraction(1, 2), 1), 3)
    for row, w in zip(rows, want):
        assert row["domain"] == "float"
        assert row["precision"] == 128
        assert parse_decimal_str(row["value"], 128).value == w.value


def test_output_determinism(runner):
    args = ["verify", "eq5", "appell", "--format", "json"]
    a = invoke(runner, *args).output
    b = invoke(runner, *args).output
    assert a == b
    args = ["numbers", "--family", "euler", "--alpha", "1/2", "--max", "8", "--format", "csv"]
    assert invoke(runner, *args).output == invoke(runner, *args).output


def test_csv_format(runner):
    r = invoke(runner, "numbers", "--family", "bernoulli", "--max", "2", "--format", "csv")
    lines = r.output.strip().splitlines()
    assert lines[0] == "index,value,domain,precision"
    assert lines[1] == "0,1,rational,"
    assert lines[2] == "1,-1/2,rational,"


def test_poly_command(runner):
    r = invoke(runner, "poly", "--family", "bernoulli", "--degree", "2")
    values = [line.split()[1] for line in r.output.strip().splitlines()[1:]]
    assert values == ["1/6", "-1", "1"]


def test_eval_command(runner):
    r = invoke(runner, "eval", "--family", "bernoulli", "--degree", "2", "--at", "1/2")
    assert r.exit_code == 0
    assert "-1/12" in r.output


def test_mleval_basic(runner):
    r = invoke(runner, "mleval", "--alpha", "1", "--beta", "1", "--z", "1")
    assert r.exit_code == 0
    assert "2.71828182845904523536" in r.output


def test_mleval_closed_form(runner):
    r = invoke(runner, "mleval", "--alpha", "1", "--beta", "2", "--z", "1", "--closed-form")
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    assert len(lines) == 3
    assert "1.718281828459045235" in lines[1]
    assert "1.718281828459045235" in lines[2]


def test_mleval_at_zero(runner):
    r = invoke(runner, "mleval", "--alpha", "2", "--beta", "1", "--z", "0")
    assert "1.0" in r.output


def test_mleval_envelope_exit(runner):
    r = runner.invoke(cli, ["mleval", "--alpha", "1", "--beta", "1", "--z", "60"])
    assert r.exit_code == 2


def test_fracderiv_with_oracle(runner):
    r = invoke(runner, "fracderiv", "--family", "bernoulli", "--lambda", "2",
               "--degree", "2", "--order", "0.5", "--at", "1.0")
    assert r.exit_code == 0
    lines = [l for l in r.output.strip().splitlines() if l and not l.startswith(("route", "coefficient"))]
    closed = next(l for l in lines if l.startswith("closed-form"))
    quad = next(l for l in lines if l.startswith("quadrature"))
    a = Fraction(parse_decimal_str(closed.split()[-1], 128).as_fraction())
    b = Fraction(parse_decimal_str(quad.split()[-1], 128).as_fraction())
    assert abs(a - b) <= Fraction(1, 10 ** 10) * max(1, abs(b))


def test_fracderiv_integer_order(runner):
    r = invoke(runner, "fracderiv", "--degree", "1", "--order", "1", "--lambda", "1",
               "--at", "1.0")
    assert r.exit_code == 0
    closed = next(l for l in r.output.splitlines() if l.startswith("closed-form"))
    assert closed.split()[-1] in ("1", "1.0")


def test_fracderiv_degree_below_order(runner):
    # vanishing derivative: empty expansion, value 0, exit 0
    r = invoke(runner, "fracderiv", "--degree", "0", "--order", "0.5", "--at", "1.0")
    assert r.exit_code == 0
    closed = next(l for l in r.output.splitlines() if l.startswith("closed-form"))
    assert closed.split()[-1] in ("0", "0.0")


def test_fracderiv_json_single_document(runner):
    r = invoke(runner, "fracderiv", "--family", "bernoulli", "--h", "2", "--lambda", "2",
               "--degree", "3", "--order", "0.5", "--at", "1.0", "--format", "json")
    assert r.exit_code == 0
    doc = json.loads(r.output)  # must parse as one document
    assert set(doc) == {"terms", "values"}
    a = parse_decimal_str(doc["values"]["closed-form"], 128).as_fraction()
    b = parse_decimal_str(doc["values"]["quadrature"], 128).as_fraction()
    assert abs(a - b) <= Fraction(1, 10 ** 10) * max(1, abs(b))


def test_numbers_higher_order(runner):
    r = invoke(runner, "numbers", "--family", "bernoulli", "--h", "2", "--lambda", "1",
               "--max", "2")
    values = [line.split()[1] for line in r.output.strip().splitlines()[1:]]
    assert values == ["1", "-1", "5/6"]


def test_family_alpha_zero_rejected(runner):
    r = runner.invoke(cli, ["numbers", "--family", "bernoulli", "--alpha", "0", "--max", "2"])
    assert r.exit_code == 2


def test_fracint_examples(runner):
    r = invoke(runner, "fracint", "--family", "bernoulli", "--degree", "0",
               "--order", "1")
    assert r.exit_code == 0
    body = r.output.strip().splitlines()[1]
    assert body.split() == ["1", "1"]  # the integral of 1 is t
    r = invoke(runner, "fracint", "--degree", "1", "--order", "2", "--at", "1.0")
    assert r.exit_code == 0


def test_verify_pass_exit_zero(runner):
    r = invoke(runner, "verify", "appell", "--alpha", "2", "--lambda", "3",
               "--max-degree", "12")
    assert r.exit_code == 0
    assert "pass" in r.output


def test_verify_quadrature_suite(runner):
    r = invoke(runner, "verify", "theorem4", "--lambda", "2", "--order", "0.5",
               "--max-degree", "8")
    assert r.exit_code == 0
    assert "pass" in r.output


def test_verify_literal_known_discrepancy(runner):
    r = invoke(runner, "verify", "theorem3-literal")
    assert r.exit_code == 0
    assert "known-discrepancy" in r.output


def test_verify_all_exit_zero(runner):
    r = invoke(runner, "verify", "all")
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    verdicts = {line.split()[-1] for line in lines[1:]}
    assert verdicts <= {"pass", "known-discrepancy"}
    assert "known-discrepancy" in verdicts  # the two literal suites


def test_verify_unknown_suite(runner):
    r = runner.invoke(cli, ["verify", "nonsense-suite"])
    assert r.exit_code == 2
    assert "valid" in r.output


def test_verify_failure_exit_one(runner):
    # an impossible tolerance flips float suites to fail
    r = runner.invoke(cli, ["verify", "eq5", "--tolerance", "1/10000000000000000000000000000000000000000"])
    assert r.exit_code == 1


def test_verify_json_schema(runner):
    r = invoke(runner, "verify", "eq10", "--format", "json")
    rows = json.loads(r.output)
    assert set(rows[0]) == {
        "identity", "params", "comparisons", "max_abs_err", "max_rel_err",
        "tolerance", "verdict",
    }
    assert rows[0]["identity"] == "eq10"
    assert rows[0]["verdict"] == "pass"


def test_verify_theorem2_alias(runner):
    r = invoke(runner, "verify", "theorem2", "--max-degree", "6")
    assert r.exit_code == 0
    assert "appell" in r.output


def test_precision_env_override(runner):
    r = invoke(runner, "mleval", "--alpha", "1", "--beta", "1", "--z", "1",
               env={"FRACPOLY_PRECISION": "64"})
    assert r.exit_code == 0
    val = r.output.strip().splitlines()[1].split()[-1]
    # 64-bit value is shorter than the 128-bit one, and the default
    # tolerance 2^-(64-24) guarantees about 12 digits
    assert len(val) < 30
    assert val.startswith("2.71828182845")


def test_cross_process_determinism():
    import subprocess
    import sys

    cmd = [sys.executable, "-m", "fracpoly.cli"]
    args = ["numbers", "--family", "euler", "--alpha", "1/2", "--max", "6", "--format", "json"]
    a = subprocess.run(cmd + args, capture_output=True, check=True).stdout
    b = subprocess.run(cmd + args, capture_output=True, check=True).stdout
    assert a == b


def test_run_suite_api_rejects_unknown():
    with pytest.raises(KeyError):
        run_suite("not-a-suite", RunConfig())
