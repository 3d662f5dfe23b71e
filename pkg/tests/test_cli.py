import json
import subprocess
import sys

import pytest

from hrsurgery.cli import main
from hrsurgery.codes import load_code


@pytest.fixture
def hgp58(tmp_path):
    out = tmp_path / "hgp58.json"
    assert main(["build", "hgp", "--b", "hamming3", "--d", "hamming3T", "--out", str(out)]) == 0
    return out


def test_build_families(tmp_path, hgp58):
    c = load_code(hgp58)
    assert (c.n, c.k) == (58, 16)
    assert main(["build", "bb", "--out", str(tmp_path / "g.json")]) == 0
    assert load_code(tmp_path / "g.json").k == 12
    assert main(["--seed", "0", "build", "sc", "--rc", "3", "--nc", "6", "--L", "5",
                 "--out", str(tmp_path / "sc.json")]) == 0
    assert load_code(tmp_path / "sc.json").n == 1125


def test_bad_inputs_exit_2(tmp_path):
    assert main(["build", "hgp", "--b", "nonsense", "--out", str(tmp_path / "x.json")]) == 2
    assert main(["verify", str(tmp_path / "missing.json")]) == 2
    assert main(["frobnicate"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"data": {}}))
    assert main(["verify", str(bad)]) == 2


def test_surger_verify_and_corruption(tmp_path, hgp58, capsys):
    out = tmp_path / "run"
    rc = main(["--seed", "3", "surger", str(hgp58), "--targets", "random:2", "--out-dir", str(out)])
    assert rc == 0
    for f in ("diagram.json", "merged.json", "report.json", "report.time.json", "ancilla.json"):
        assert (out / f).exists()
    assert main(["verify", str(out / "diagram.json")]) == 0
    obj = json.loads((out / "diagram.json").read_text())
    g0 = obj["gamma0"]
    row = next(i for i, r in enumerate(g0["rows"]) if r)
    g0["rows"][row] = g0["rows"][row][1:]
    bad = tmp_path / "bad_gamma0.json"
    bad.write_text(json.dumps(obj))
    capsys.readouterr()
    assert main(["verify", str(bad)]) == 1
    assert "gamma0 d1 != hz gamma1" in capsys.readouterr().out


def test_surger_rows_and_hom_modes(tmp_path, hgp58):
    assert main(["surger", str(hgp58), "--targets", "rows:0,5", "--out-dir", str(tmp_path / "r")]) == 0
    rep = json.loads((tmp_path / "r" / "report.json").read_text())
    assert rep["final"]["measured_logical_dim"] == 2
    assert main(["surger", str(hgp58), "--mode", "hom", "--columns", "2",
                 "--out-dir", str(tmp_path / "h")]) == 0
    rep = json.loads((tmp_path / "h" / "report.json").read_text())
    assert rep["final"]["measured_logical_dim"] == 8
    assert main(["surger", str(hgp58), "--targets", "rows:99", "--out-dir", str(tmp_path / "e")]) == 2


def test_surger_config_file_and_failure(tmp_path, hgp58):
    cfg = tmp_path / "c.toml"
    cfg.write_text("[surger]\ndegree_limit = 3\n")
    assert main(["surger", str(hgp58), "--config", str(cfg), "--out-dir", str(tmp_path / "f")]) == 1
    cfg.write_text("[surger]\nbogus = 1\n")
    assert main(["surger", str(hgp58), "--config", str(cfg), "--out-dir", str(tmp_path / "g")]) == 2


def test_surger_byte_identical(tmp_path, hgp58):
    outs = []
    for name in ("a", "b"):
        d = tmp_path / name
        assert main(["surger", str(hgp58), "--targets", "random:3", "--seed", "9", "--out-dir", str(d)]) == 0
        outs.append({f: (d / f).read_bytes() for f in ("diagram.json", "merged.json", "report.json", "ancilla.json")})
    assert outs[0] == outs[1]


def test_report_outputs(tmp_path, capsys):
    csv_p, json_p = tmp_path / "o.csv", tmp_path / "o.json"
    assert main(["report", "--code-params", "144,12,12", "--sweep", "--csv", str(csv_p),
                 "--json", str(json_p)]) == 0
    lines = csv_p.read_text().splitlines()
    assert lines[0] == "scheme,n,k,d,t,space,cycles,alpha,ratio" and len(lines) == 1 + 48
    assert len(json.loads(json_p.read_text())) == 48
    assert main(["report"]) == 2


def test_console_script_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "hrsurgery.cli", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip()
