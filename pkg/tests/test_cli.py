import json

import pytest

from sincprod import cli
from sincprod.rational import rat
from sincprod.spline_engine import PiecewisePolynomial
from sincprod import verify as verify_mod


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_breakpoint_plain(capsys):
    code, out, _ = run_cli(capsys, "breakpoint", "--family", "odd-harmonic", "--threshold", "3")
    assert code == 0
    assert out.strip() == "55"


def test_breakpoint_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "breakpoint", "--threshold", "2")
    assert code == 0
    d = json.loads(out)
    assert d["breaking_point"] == 6 and d["mode"] == "exact"


def test_integral_json_fields(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "integral", "--betas", "1")
    d = json.loads(out)
    assert code == 0
    assert d["exact"] == "1/1"
    assert d["decimal"] == "1"
    # exact fields are strings, never floats
    assert isinstance(d["exact"], str) and isinstance(d["support_radius"], str)


def test_deficit_weights_one_means_single_cosine(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "deficit",
        "--family", "odd-harmonic", "--n", "56", "--weights", "1",
    )
    d = json.loads(out)
    assert code == 0
    assert d["decimal"] == "1.484870809e-138"
    assert d["deficit_terms"][0][0] == 3


def test_weighted_integral_cli(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "weighted-integral",
        "--family", "odd-harmonic", "--n", "55", "--weights", "1",
    )
    d = json.loads(out)
    assert code == 0 and d["exact"] == "1/1"


def test_sum_cli_parses_pi_grammar(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "sum",
        "--scales", "5pi/4,1,1", "--one-sided", "--abs-tol", "1e-9",
    )
    d = json.loads(out)
    assert code == 0
    assert abs(float(d["value"]) - 0.9) < 5e-9


def test_lower_bound_cli(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "lower-bound", "--a0", "5pi/4", "--rest", "1,1",
    )
    d = json.loads(out)
    assert code == 0
    assert d["hypothesis_holds"] is False and d["inequality_holds"] is False


def test_spline_dump_round_trips(capsys, tmp_path):
    target = tmp_path / "spline.csv"
    code, out, _ = run_cli(
        capsys, "spline-dump", "--betas", "1,1/3,1/5", "--output", str(target)
    )
    assert code == 0
    parsed = PiecewisePolynomial.from_csv(target.read_text())
    from sincprod.borwein_engine import SincProductSpec, fourier_spline

    assert parsed == fourier_spline(SincProductSpec((rat(1), rat(1, 3), rat(1, 5))))


def test_spline_dump_stdout(capsys):
    code, out, _ = run_cli(capsys, "spline-dump", "--betas", "1,1")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0].split(",")[0] == "-2/1"


def test_usage_errors_exit_two(capsys):
    assert run_cli(capsys, "nonsense")[0] == 2
    assert run_cli(capsys, "integral")[0] == 2                      # no spec
    assert run_cli(capsys, "integral", "--betas", "0")[0] == 2      # invalid scale
    assert run_cli(capsys, "integral", "--betas", "1", "--family", "odd-harmonic")[0] == 2
    assert run_cli(capsys, "weighted-integral", "--betas", "1", "--weights", "0")[0] == 2


def test_infeasible_exact_path_exits_three(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "integral", "--betas",
        ",".join("1/%d" % (k + 2) for k in range(25)),
        "--node-budget", "10000",
    )
    assert code == 3
    d = json.loads(out)
    assert d["error"]["type"] == "ExactPathUnavailableError"


def test_spline_dump_size_guard_exits_three(capsys):
    code, out, _ = run_cli(
        capsys, "spline-dump", "--betas", ",".join("1/%d" % (k + 2) for k in range(25))
    )
    assert code == 3
    assert json.loads(out)["error"]["type"] == "SplineSizeError"


def test_byte_identical_reruns(capsys):
    argv = ["--format", "json", "integral", "--family", "odd-harmonic", "--n", "7"]
    _, out1, _ = run_cli(capsys, *argv)
    _, out2, _ = run_cli(capsys, *argv)
    assert out1 == out2


def test_csv_format(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "integral", "--betas", "1,1/3")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0].startswith("command,")
    assert len(lines) == 2


@pytest.mark.slow
def test_verify_fast_suite_reports_known_state(capsys):
    # the fast suite runs every check; exit code mirrors the printed
    # summary, and the only FAIL line is the criterion-3 anchor check
    # documented in the README
    code, out, _ = run_cli(capsys, "verify", "--suite", "fast")
    lines = [l for l in out.strip().splitlines()]
    fails = [l for l in lines if l.startswith("FAIL")]
    assert "10/11 checks passed" in lines[-1]
    assert len(fails) == 1 and "criterion 3" in fails[0]
    assert code == 1


def test_verify_mutation_detected(monkeypatch):
    # a tampered constant must flip the partial-sum check to FAIL
    monkeypatch.setattr(verify_mod, "odd_harmonic_sum", lambda n: rat(1))
    result = verify_mod.check_partial_sums()
    assert not result.passed


def test_verify_check_results_structure():
    result = verify_mod.check_partial_sums()
    assert result.passed and result.criterion == "2"
