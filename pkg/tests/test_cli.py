import csv
import json

import pytest

from h2vqe.cli import main, read_curve
from h2vqe.molecule import TableError


def data_rows(path):
    lines = [l for l in path.read_text().splitlines() if not l.startswith("#")]
    return list(csv.DictReader(lines))


@pytest.fixture(scope="module")
def exact_curve(tmp_path_factory):
    out = tmp_path_factory.mktemp("curve") / "one.csv"
    code = main(["curve", "--formulation", "one-qubit", "--mode", "exact", "--out", str(out)])
    return code, out


def test_curve_exact(exact_curve):
    code, out = exact_curve
    assert code == 0
    rows = data_rows(out)
    assert len(rows) == 64
    assert all(float(r["abs_error"]) < 1e-6 for r in rows)
    assert out.read_text().startswith("# manifest: one.manifest.json\n")
    manifest = json.loads(out.with_name("one.manifest.json").read_text())
    assert manifest["command"] == "curve" and manifest["mode"] == "exact"
    assert len(manifest["results"]) == 64
    assert manifest["table"]["sha256"]
    assert manifest["optimizer"]["max_evaluations"] == 500


def test_curve_byte_identical(tmp_path, monkeypatch):
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "1700000000")
    outs = []
    for name in ("a", "b"):
        d = tmp_path / name
        d.mkdir()
        out = d / "c.csv"
        assert main(["curve", "--mode", "shots", "--shots", "256", "--seed", "5", "--out", str(out)]) == 0
        outs.append((out.read_bytes(), out.with_name("c.manifest.json").read_bytes()))
    assert outs[0] == outs[1]
    rows = data_rows(tmp_path / "a" / "c.csv")
    assert "energy_stderr" in rows[0] and rows[0]["shots"] == "256"


def test_point(capsys):
    assert main(["point", "--R", "0.70", "--block", "A", "--level", "0"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["R"] == 0.70 and rec["level"] == 0
    assert abs(rec["energy"] - rec["oracle_energy"]) < 1e-6


def test_point_off_grid(capsys):
    assert main(["point", "--R", "0.75"]) == 2
    err = capsys.readouterr().err
    assert "0.70" in err and "0.80" in err


def test_point_malformed_R(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["point", "--R", "seven"])
    assert exc.value.code == 1


def test_oracle(tmp_path, capsys):
    out = tmp_path / "oracle.csv"
    assert main(["oracle", "--out", str(out)]) == 0
    assert len(data_rows(out)) == 16
    printed = capsys.readouterr().out.splitlines()
    assert sum("block-union PASS" in l for l in printed) == 16


def test_oracle_empty_table(tmp_path, capsys):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    assert main(["oracle", "--table", str(empty)]) == 2
    assert "empty" in capsys.readouterr().err


def test_custom_table(tmp_path, capsys):
    t = tmp_path / "t.csv"
    t.write_text("R,a0,a1,a2,a3,a4\n0.5,-1.0,0.2,-0.2,0.01,0.1\n")
    assert main(["point", "--table", str(t), "--R", "0.5", "--block", "B", "--level", "1",
                 "--formulation", "one-qubit"]) == 0
    assert json.loads(capsys.readouterr().out)["manifest"]["table"]["path"] == str(t)


def test_beta_below_gap_is_data_error(capsys):
    assert main(["point", "--R", "0.30", "--level", "1", "--beta", "3.0"]) == 2
    assert "spread" in capsys.readouterr().err
    assert main(["point", "--R", "0.30", "--level", "1"]) == 0


def test_plot_exact(exact_curve, tmp_path):
    _, curve = exact_curve
    out = tmp_path / "fig.gp"
    assert main(["plot", str(curve), "--out", str(out)]) == 0
    script = out.read_text()
    assert script.count("with linespoints") == 4
    assert "yerrorbars" not in script
    assert "# manifest: one.manifest.json" in script
    assert (tmp_path / "fig.dat").read_text().count("# ") == 4


def test_plot_shots(tmp_path):
    curve = tmp_path / "s.csv"
    assert main(["curve", "--mode", "shots", "--shots", "128", "--out", str(curve)]) == 0
    out = tmp_path / "s.gp"
    assert main(["plot", str(curve), "--out", str(out)]) == 0
    script = out.read_text()
    assert script.count("yerrorbars") == 4 and script.count("with lines ") == 4


def test_plot_missing_file(tmp_path):
    assert main(["plot", str(tmp_path / "nope.csv"), "--out", str(tmp_path / "x.gp")]) == 2


def test_malformed_curve_reports_line(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("# manifest: m.json\nR,block,level,energy,theta_opt,evaluations,oracle_energy,abs_error\n"
                   "0.30,A,0,-2.0,0.1,10,-2.0,0\n0.40,A,0,oops,0.1,10,-2.0,0\n")
    with pytest.raises(TableError) as exc:
        read_curve(bad)
    assert exc.value.line == 4
    assert main(["plot", str(bad), "--out", str(tmp_path / "x.gp")]) == 2


def test_unwritable_output(tmp_path):
    assert main(["curve", "--out", str(tmp_path / "missing" / "c.csv")]) == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["curve"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
