"""Command-line surface: argument handling, exit codes, output formats, and
file outputs."""

import json

import pytest

from qident import cli
from qident.series import load_series


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_generate_dump(capsys):
    code, out = run(capsys, "generate", "T:4", "--order", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "qseries order=8"
    assert "2 1" in lines and "4 8" in lines
    assert "6 28" in lines and "8 64" in lines
    s = load_series(out)
    assert s[6] == 28


def test_generate_round_trip_via_file(tmp_path, capsys):
    path = tmp_path / "e4.txt"
    code, _ = run(capsys, "generate", "E4", "--order", "12",
                  "--out", str(path))
    assert code == 0
    s = load_series(path.read_text())
    assert s[1] == 240


def test_generate_plot(tmp_path, capsys):
    png = tmp_path / "series.png"
    code, _ = run(capsys, "generate", "phi", "--order", "30",
                  "--plot", str(png))
    assert code == 0
    assert png.stat().st_size > 1000


def test_generate_unknown_key(capsys):
    code, _ = run(capsys, "generate", "zeta", "--order", "8")
    assert code == 2


def test_count(capsys):
    code, out = run(capsys, "count", "--kind", "squares", "--s", "2",
                    "--n", "3", "--method", "divisor")
    assert code == 0 and out.strip() == "0"
    code, out = run(capsys, "count", "--kind", "triangular", "--s", "16",
                    "--n", "2", "--method", "oracle")
    assert code == 0 and out.strip() == "120"
    code, _ = run(capsys, "count", "--kind", "squares", "--s", "6",
                  "--n", "3", "--method", "divisor")
    assert code == 2  # no divisor closed form wired for six squares


def test_verify_pass_and_json(capsys):
    code, out = run(capsys, "verify", "--identity", "psi24", "--order", "80")
    assert code == 0 and "pass" in out
    code, out = run(capsys, "verify", "--identity", "jacobi6", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass" and data["task"] == "jacobi6"


def test_verify_eq32_exits_zero_with_recorded_mismatch(capsys):
    code, out = run(capsys, "verify", "--identity", "eq32", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "mismatch-recorded"
    assert data["first_mismatch"]["exponent"] == 8


def test_verify_with_explicit_s(capsys):
    code, _ = run(capsys, "verify", "--identity", "milne-4s2", "--s", "3",
                  "--order", "60")
    assert code == 0


def test_kw(capsys):
    code, out = run(capsys, "kw", "--variant", "4s2", "--s", "2", "--n", "5")
    assert code == 0 and "match" in out
    code, out = run(capsys, "kw", "--variant", "cc", "--s", "2", "--n", "1")
    assert code == 0 and "16" in out


def test_chan_chua_json(capsys):
    code, out = run(capsys, "chan-chua", "--s", "3", "--order", "40",
                    "--json")
    assert code == 0
    data = json.loads(out)
    assert data["values"] == ["1/72", "-1/72"]


def test_hankel_and_cf(capsys):
    code, out = run(capsys, "hankel", "--n", "2")
    assert code == 0 and "12*kappa^2" in out
    code, _ = run(capsys, "hankel", "--n", "3", "--trials", "10")
    assert code == 0
    code, _ = run(capsys, "cf", "--depth", "9", "--torder", "16")
    assert code == 0
    code, _ = run(capsys, "cf", "--depth", "9", "--torder", "15")
    assert code == 2  # odd t-order has no matching moment list


def test_numeric(capsys):
    code, out = run(capsys, "numeric", "--identity", "ts", "--tau", "2i",
                    "--eps", "1e-9")
    assert code == 0 and "ok" in out
    code, _ = run(capsys, "numeric", "--identity", "8t", "--tau", "0.3+0.8i",
                  "--eps", "1e-9")
    assert code == 0
    code, _ = run(capsys, "numeric", "--identity", "ts", "--tau", "0.3-0.8i",
                  "--eps", "1e-9")
    assert code == 2
    code, _ = run(capsys, "numeric", "--identity", "ts", "--tau", "2i",
                  "--eps", "1e-30")
    assert code == 1  # unattainable tolerance reports a violation, not usage


def test_tau_parsing():
    assert cli._parse_tau("0.3+0.8i") == 0.3 + 0.8j
    assert cli._parse_tau("2i") == 2j
    import argparse
    with pytest.raises(argparse.ArgumentTypeError):
        cli._parse_tau("east")


def test_selftest_report_dir(tmp_path, capsys):
    rep = tmp_path / "rep"
    code, out = run(capsys, "selftest", "--jobs", "2",
                    "--report-dir", str(rep))
    assert code == 0
    assert "12/12 criteria passed" in out
    assert (rep / "selftest.csv").exists()
    assert (rep / "selftest.png").stat().st_size > 1000
    header = (rep / "selftest.csv").read_text().splitlines()[0]
    assert header == "criterion,name,status,runtime_ms,detail"
