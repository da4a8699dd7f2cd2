import json
import subprocess
import sys

import pytest

from inducedseq.cli import run


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_check(files, capsys):
    seq = files("d.txt", "1 1 1 1\n")
    sub = files("s.txt", "1 2\n")
    assert run(["check", seq, "--subset", sub, "--delta", "0.1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["graphical"] is True
    assert out["condition"]["holds"] is False
    assert set(out["condition"]) == {"holds", "lhs", "rhs", "slack", "co", "gammaOk"}
    assert out["manifest"]["config"]["delta"] == 0.1


def test_check_not_graphical(files, capsys):
    assert run(["check", files("d.txt", "3 3 1 1")]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["graphical"] is False and out["korenWitness"] is not None


@pytest.mark.parametrize("argv", [
    ["check", "/nonexistent/file"],
    ["bogus"],
    [],
    ["model-a", "--seq", "X", "--p", "1.5"],
])
def test_usage_errors(argv, files):
    argv = [files("d.txt", "1 1") if a == "X" else a for a in argv]
    assert run(argv) == 2


def test_malformed_sequence(files):
    assert run(["check", files("d.txt", "1 a 2")]) == 2


def test_enumerate(files, tmp_path, capsys):
    out = tmp_path / "enum"
    assert run(["enumerate", "--seq", files("d.txt", "1 1 1 1"), "--out", str(out)]) == 0
    assert json.loads(capsys.readouterr().out) == {"count": 3}
    assert len(list(out.glob("graph_*.txt"))) == 3
    assert json.loads((out / "manifest.json").read_text())["count"] == 3


def test_sample(files, tmp_path):
    out = tmp_path / "s"
    assert run(["sample", "--seq", files("d.txt", "3 " * 20), "--count", "3", "--seed", "4",
                "--out", str(out)]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert len(manifest["samples"]) == 3
    assert all("seed" in r for r in manifest["samples"])
    lines = (out / "graph_0000.txt").read_text().split("\n")
    assert len([l for l in lines if l]) == 30


def test_sample_not_graphical(files, tmp_path):
    assert run(["sample", "--seq", files("d.txt", "3 3 1 1"), "--out", str(tmp_path / "x")]) == 2


def test_model_commands(files, tmp_path, capsys):
    seq = files("d.txt", "1 1 1 1")
    assert run(["model-h", "--seq", seq, "--subset", files("s.txt", "1 2")]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["hist"] == {"0": 1, "1": 1} and out["length"] == 2
    csv = tmp_path / "a.csv"
    assert run(["model-a", "--seq", files("e.txt", "1 1"), "--p", "0.5", "--csv", str(csv)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["hist"] == {"0": 1}
    assert csv.read_text().startswith("k,n_k,wtilde_k")


def test_giant(files, capsys):
    assert run(["giant", "--seq", files("d.txt", "3 " * 1000), "--p", "0.8"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert {"jd", "R", "MJ", "ratio", "hasGiant", "eps"} <= set(out)
    assert out["hasGiant"] is True


def test_percolate(files, tmp_path):
    out = tmp_path / "p.jsonl"
    assert run(["percolate", "--seq", files("d.txt", "3 " * 100), "--p", "0.5", "--trials", "3",
                "--out", str(out)]) == 0
    lines = [json.loads(l) for l in out.read_text().splitlines()]
    assert len(lines) == 4
    assert "aggregate" in lines[-1]


def _verify(files, tmp_path, name, cfg):
    suite = cfg.pop("_suite")
    conf = files(name + ".json", json.dumps(cfg))
    report = tmp_path / (name + ".report.json")
    code = run(["verify", "--suite", suite, "--config", conf, "--out", str(report)])
    return code, report


def test_verify_pass_and_byte_identical(files, tmp_path):
    cfg = {"sequence": {"entries": [1, 1, 1, 1]}, "subset": {"indices": [1, 2]}}
    code, r1 = _verify(files, tmp_path, "a", {**cfg, "_suite": "switching"})
    assert code == 0
    code, r2 = _verify(files, tmp_path, "b", {**cfg, "_suite": "switching"})
    assert r1.read_bytes() == r2.read_bytes()
    assert json.loads(r1.with_suffix(".manifest.json").read_text())["passed"] is True


def test_verify_gate_failure(files, tmp_path):
    cfg = {"sequence": {"entries": [1, 1, 1, 1]}, "subset": {"indices": [1, 2]}, "factorGate": 1.5,
           "_suite": "switching"}
    code, _ = _verify(files, tmp_path, "f", cfg)
    assert code == 1


def test_verify_bad_config(files, tmp_path):
    conf = files("bad.json", "{nope")
    assert run(["verify", "--suite", "thm25", "--config", conf, "--out", str(tmp_path / "r.json")]) == 2
    conf = files("bad2.json", json.dumps({"sequence": {"entries": [1, 1]}, "unknown": 1}))
    assert run(["verify", "--suite", "thm25", "--config", conf, "--out", str(tmp_path / "r.json")]) == 2


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "inducedseq", "check", files("d.txt", "2 2 2")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["graphical"] is True
