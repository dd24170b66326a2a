import json
import subprocess
import sys
from fractions import Fraction

import pytest

from discrete_hilbert import chsh, cli, sweep
from discrete_hilbert.chsh import Cell, CellKind


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_niven_classify(capsys):
    assert run(["niven", "classify", "--turns", "1/6"], capsys)[:2] == (0, "rational 1/2\n")
    code, out, _ = run(["niven", "classify", "--turns", "1/17"], capsys)
    assert code == 0 and out.startswith("irrational")


def test_triangle_check(capsys):
    code, out, _ = run(["triangle", "check", "--cos-ac", "9/17", "--cos-bc", "1/3", "--turns", "3/17", "--p", "17"], capsys)
    assert code == 0 and out.startswith("provably-irrational")
    code, out, _ = run(["triangle", "check", "--cos-ac", "9/17", "--cos-bc", "1/3", "--turns", "1/4", "--p", "17"], capsys)
    assert code == 0 and out.startswith("exception-possible")


def test_mz_commands(capsys):
    code, out, _ = run(["mz", "admissible", "--turns", "3/17"], capsys)
    assert code == 0 and "which-way" in out
    code, out, _ = run(["mz", "si-check", "--cos", "1/3", "--config", "interferometric"], capsys)
    assert code == 0 and "1" in out


def test_chsh_svalue(capsys):
    code, out, _ = run(["chsh", "svalue", "--p", "10007", "--angles", "optimal"], capsys)
    assert code == 0
    assert "28308/10007" in out
    assert "true" in out.lower() or "pass" in out.lower()


def test_chsh_table_blank_per_column(capsys):
    code, out, _ = run(["chsh", "table", "--p", "17", "--trials", "10", "--seed", "2"], capsys)
    assert code == 0
    # cells sit at every other character after the bar; blank means undefined
    rows = [line.split("|", 1)[1][1::2] for line in out.splitlines() if "|" in line]
    assert len(rows) == 4 and all(len(r) == 10 for r in rows)
    for col in zip(*rows):
        assert sum(c == " " for c in col) == 1


def test_sweep_csv_and_roundtrip(capsys, tmp_path):
    argv = ["sweep", "--p-list", "17,101,1009,10007", "--trials", "1000", "--seed", "1", "--format", "csv"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    rows = sweep.from_csv(out)
    assert [r.p for r in rows] == [17, 101, 1009, 10007]
    assert all(r.undefined_cell_fraction == Fraction(1, 4) for r in rows)
    errs = [r.s_error for r in rows]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert sweep.to_csv(rows) == out
    # byte-identical rerun
    assert run(argv, capsys)[1] == out


def test_sweep_json_and_figure(capsys, tmp_path):
    fig = tmp_path / "sweep.png"
    out_file = tmp_path / "sweep.json"
    argv = ["sweep", "--p-list", "17,101", "--trials", "50", "--format", "json", "--figure", str(fig), "--out", str(out_file)]
    code, out, _ = run(argv, capsys)
    assert code == 0 and out == ""
    text = out_file.read_text()
    assert len(json.loads(text)) == 2
    rows = sweep.from_json(text)
    assert sweep.to_json(rows) == text
    assert fig.stat().st_size > 1000
    first = fig.read_bytes()
    run(argv, capsys)
    assert fig.read_bytes() == first


@pytest.mark.parametrize(
    "argv",
    [
        ["chsh", "scan", "--p", "17", "--trials", "20", "--seed", "4"],
        ["padic", "demo", "--p", "1009", "--seed", "7"],
        ["uncertainty", "scan", "--p", "13"],
        ["ensemble", "stats", "--p", "17", "--m", "13", "--n", "5"],
    ],
)
def test_reruns_are_byte_identical(argv, capsys):
    code, first, _ = run(argv, capsys)
    assert code == 0 and first
    assert run(argv, capsys)[1] == first


def test_ensemble_stats(capsys):
    out = run(["ensemble", "stats", "--p", "17", "--m", "13"], capsys)[1]
    assert "9/17" in out and "208/289" in out


def test_padic_dist(capsys):
    code, out, _ = run(["padic", "dist", "--p", "17", "--a", "1,2,3", "--b", "1,2,0"], capsys)
    assert code == 0 and "1/4913" in out


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["chsh", "svalue", "--bogus"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize("p", ["15", "11", "1"])
def test_invalid_p_exit_3(p, capsys):
    code, _, err = run(["chsh", "svalue", "--p", p], capsys)
    assert code == 3 and err


def test_invariant_breach_exit_4(capsys, monkeypatch):
    def broken(g, chosen, a, b):
        return (Cell(CellKind.UNDEFINED),) * 4

    monkeypatch.setattr(chsh, "fill_column", broken)
    code, _, err = run(["chsh", "scan", "--p", "17", "--trials", "5"], capsys)
    assert code == 4 and "undefined" in err


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "discrete_hilbert", "niven", "classify", "--turns", "1/4"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "rational 0/1\n"
