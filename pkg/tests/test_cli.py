"""Command-line surface: schemas, formats, exit codes, determinism."""

import json

import pytest

from ztt.cli import main, parse_range, resolve_weights
from ztt.weights import OnesWeights, ZetaWeights


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_range():
    assert parse_range("3") == [3]
    assert parse_range("2..5") == [2, 3, 4, 5]
    with pytest.raises(ValueError):
        parse_range("5..2")
    with pytest.raises(ValueError):
        parse_range("a..b")
    with pytest.raises(ValueError):
        parse_range("1..2..3")


def test_resolve_weights(tmp_path):
    assert resolve_weights("ones") == OnesWeights()
    assert resolve_weights("zeta:2") == ZetaWeights(2)
    p = tmp_path / "w.json"
    p.write_text('{"kind": "zeta", "m": 3}')
    assert resolve_weights(str(p)) == ZetaWeights(3)


def test_theta_basic(capsys):
    code, out, _ = run(capsys, "theta", "--weights", "ones", "--n", "3",
                       "--k", "2")
    assert code == 0
    assert "[3, 3]" in out
    assert "newton" in out


def test_theta_algo_all(capsys):
    code, out, _ = run(capsys, "theta", "--weights", "zeta:1", "--n", "2",
                       "--k", "2", "--algo", "all")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6  # header + five algorithm rows
    assert all("[1/2, 5/4]" in line for line in lines[1:])
    assert all("yes" in line for line in lines[1:])


def test_theta_csv_schema(capsys):
    code, out, _ = run(capsys, "theta", "--weights", "ones", "--n", "3",
                       "--k", "2..3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,coeff_index,value"
    assert lines[1] == "3,2,0,3"
    assert "3,3,2,3" in lines


def test_theta_csv_rejects_algo_all(capsys):
    code, _, err = run(capsys, "theta", "--weights", "ones", "--n", "3",
                       "--k", "2", "--algo", "all", "--format", "csv")
    assert code == 2
    assert "CSV" in err


def test_theta_t_evaluation(capsys):
    code, out, _ = run(capsys, "theta", "--weights", "zeta:1", "--n", "2",
                       "--k", "2", "--t", "1", "--t", "1/2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,t,value"
    assert lines[1] == "2,2,1,7/4"
    assert lines[2] == "2,2,1/2,9/8"


def test_theta_oracle_algo(capsys):
    code, out, _ = run(capsys, "theta", "--weights", "ones", "--n", "4",
                       "--k", "3", "--algo", "oracle", "--format", "csv")
    assert code == 0
    assert "4,3,0,4" in out


def test_theta_json_schema(capsys):
    code, out, _ = run(capsys, "theta", "--weights", "zeta:2", "--n", "2",
                       "--k", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "theta"
    assert doc["config"]["weights"] == {"kind": "zeta", "m": 2}
    assert doc["rows"] == [{"n": 2, "k": 2, "algo": "newton",
                            "coefficients": ["1/4", "17/16"]}]


def test_custom_weights_range_error(tmp_path, capsys):
    p = tmp_path / "w.json"
    p.write_text('{"kind": "custom", "values": ["1", "2", "3"]}')
    code, _, err = run(capsys, "theta", "--weights", str(p), "--n", "50",
                       "--k", "2")
    assert code == 2
    assert "3 terms" in err


def test_unknown_weights_exit_code(capsys):
    code, _, err = run(capsys, "theta", "--weights", "fancy", "--n", "2",
                       "--k", "2")
    assert code == 2
    assert "error:" in err


def test_bad_flag_exit_code(capsys):
    code, _, _ = run(capsys, "theta", "--weights", "ones", "--n", "2")
    assert code == 2
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "theta" in out


def test_pmf_rows(capsys):
    code, out, _ = run(capsys, "pmf", "--weights", "ones", "--n", "3",
                       "--k", "2", "--precision", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,j,probability,approx"
    assert lines[1] == "3,2,0,1/2,0.500"
    assert lines[2] == "3,2,1,1/2,0.500"


def test_moments_rows(capsys):
    code, out, _ = run(capsys, "moments", "--weights", "ones", "--n", "3",
                       "--k", "2", "--smax", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,mean,variance,fm1,fm2"
    assert lines[1] == "3,2,1/2,1/4,1/2,0"


def test_precision_validation(capsys):
    code, _, err = run(capsys, "pmf", "--weights", "ones", "--n", "3",
                       "--k", "2", "--precision", "0")
    assert code == 2
    assert "precision" in err


def test_partitions_output(capsys):
    code, out, _ = run(capsys, "partitions", "--n", "3", "--limit", "5",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "index,count"
    assert out.splitlines()[-1] == "5,5"


def test_limits_csv_schema(capsys):
    code, out, _ = run(capsys, "limits", "--regime", "dn_zeta1", "--grid",
                       "5,10", "--format", "csv", "--precision", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "regime,param,value,distance"
    assert lines[1].startswith("dn_zeta1,")
    code2, _, err = run(capsys, "limits", "--grid", "5,10")
    assert code2 == 2
    assert "regime" in err


def test_verify_cli(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "sumtheorem")
    assert code == 0
    assert "PASS" in out
    assert "checks passed" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "sumtheorem",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"][0]["result"] == "PASS"


def test_budget_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("ZTT_BUDGET", "5")
    code, _, err = run(capsys, "theta", "--weights", "ones", "--n", "4",
                       "--k", "4", "--algo", "oracle")
    assert code == 2
    assert "budget" in err.lower()
    # the flag wins over the environment
    code2, out, _ = run(capsys, "theta", "--weights", "ones", "--n", "4",
                        "--k", "4", "--algo", "oracle", "--budget", "100")
    assert code2 == 0
    assert "oracle" in out


def test_determinism(capsys):
    args = ("limits", "--regime", "sum_theorem_negbin", "--grid", "8,16",
            "--format", "json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    args = ("theta", "--weights", "zeta:1", "--n", "1..4", "--k", "0..4",
            "--format", "csv")
    _, out3, _ = run(capsys, *args)
    _, out4, _ = run(capsys, *args)
    assert out3 == out4


def test_export_csv(tmp_path, capsys):
    out_path = tmp_path / "table.csv"
    code, out, _ = run(capsys, "export", "--table", "theta", "--weights",
                       "ones", "--n", "2..3", "--k", "2", "--out",
                       str(out_path), "--format", "csv")
    assert code == 0
    assert "wrote" in out
    text = out_path.read_text()
    assert text.splitlines()[0] == "n,k,coeff_index,value"


def test_export_json_round_trip(tmp_path, capsys):
    from fractions import Fraction

    from ztt.exact import Poly, parse_rational
    from ztt.theta import ThetaPoly, theta_newton

    out_path = tmp_path / "table.json"
    code, _, _ = run(capsys, "export", "--table", "theta", "--weights",
                     "zeta:1", "--n", "2..4", "--k", "1..3", "--out",
                     str(out_path), "--format", "json")
    assert code == 0
    doc = json.loads(out_path.read_text())
    seq = ZetaWeights(1)
    assert doc["config"]["weights"] == {"kind": "zeta", "m": 1}
    for row in doc["rows"]:
        coeffs = [parse_rational(c) for c in row["coefficients"]]
        rebuilt = ThetaPoly(row["n"], row["k"], seq, Poly(coeffs))
        assert rebuilt == theta_newton(seq, row["n"], row["k"])


def test_export_limits(tmp_path, capsys):
    out_path = tmp_path / "scan.csv"
    code, _, _ = run(capsys, "export", "--table", "limits", "--regime",
                     "sum_theorem_negbin", "--grid", "8", "--out",
                     str(out_path), "--format", "csv")
    assert code == 0
    assert out_path.read_text().splitlines()[0] == "regime,param,value,distance"


def test_export_io_failure(tmp_path, capsys):
    code, _, err = run(capsys, "export", "--table", "partitions", "--n", "3",
                       "--out", str(tmp_path / "no" / "dir" / "f.csv"),
                       "--format", "csv")
    assert code == 1
    assert "cannot write" in err


def test_export_precision_rendering(tmp_path, capsys):
    out_path = tmp_path / "p.csv"
    code, _, _ = run(capsys, "export", "--table", "pmf", "--weights", "ones",
                     "--n", "3", "--k", "2", "--precision", "3", "--out",
                     str(out_path), "--format", "csv")
    assert code == 0
    assert "0.500" in out_path.read_text()
