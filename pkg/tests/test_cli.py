import json
import subprocess
import sys
from pathlib import Path

import pytest

from dsmfuse.cli import main

SAMPLES = Path(__file__).parent.parent / "samples"


def run(*args):
    return subprocess.run([sys.executable, "-m", "dsmfuse", *args], capture_output=True, text=True)


def test_fuse_sample():
    proc = run("fuse", "--input", str(SAMPLES / "two_experts.json"))
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["masses"] == {"A": "95/168", "B": "191/504", "A|B": "1/18"}


def test_rule_override_and_alpha(capsys):
    assert main(["fuse", "--input", str(SAMPLES / "three_experts.json"), "--rule", "dpcr", "--alpha", "global"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["alpha"] == "global"
    assert report["rule"] == "dpcr"


def test_dissimilarity_flag(capsys):
    assert main(["fuse", "--input", str(SAMPLES / "hybrid.json"), "--dissimilarity", "delta"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["dissimilarity"] == "delta_min"
    assert report["masses"]["A&B"] == "3/100"


def test_figure(tmp_path):
    out = tmp_path / "masses.png"
    proc = run("fuse", "--input", str(SAMPLES / "labels.json"), "--figure", str(out))
    assert proc.returncode == 0, proc.stderr
    assert out.stat().st_size > 0


def test_invalid_document_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"frame": ["A", "B", "C"], "model": {"type": "hybrid", "empty": ["A&C"]},'
                   ' "sources": {"m1": {"A&C": 1}}}')
    proc = run("fuse", "--input", str(bad), "--rule", "pcr6")
    assert proc.returncode == 2
    assert proc.stderr.startswith("error[")


def test_malformed_json_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"frame": [\n')
    proc = run("fuse", "--input", str(bad), "--rule", "pcr6")
    assert proc.returncode == 2
    assert "line 2" in proc.stderr


def test_total_conflict_exits_3(tmp_path):
    doc = tmp_path / "clash.json"
    doc.write_text(json.dumps({"frame": ["A", "B"], "sources": {"m1": {"A": 1}, "m2": {"B": 1}}}))
    proc = run("fuse", "--input", str(doc), "--rule", "dempster")
    assert proc.returncode == 3
    assert "conflict" in proc.stderr


def test_missing_rule_exits_2(tmp_path):
    doc = tmp_path / "norule.json"
    doc.write_text(json.dumps({"frame": ["A"], "sources": {"m1": {"A": 1}, "m2": {"A": 1}}}))
    assert run("fuse", "--input", str(doc)).returncode == 2


def test_verify_filter():
    proc = run("verify", "--filter", "example=6")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert all(" example 6 " in line for line in lines[:-1])
    assert lines[-1].endswith("0 failures")


def test_verify_bad_filter_exits_2():
    assert run("verify", "--filter", "colour=red").returncode == 2


def test_verify_failure_exits_4(monkeypatch, capsys):
    monkeypatch.setattr("dsmfuse.verify.run", lambda **kw: 1)
    assert main(["verify"]) == 4


def test_inspect(capsys):
    assert main(["inspect", "--input", str(SAMPLES / "hybrid.json")]) == 0
    out = capsys.readouterr().out
    assert "A&C" in out and "forbidden" in out
    assert "A|B                  cardinality 3" in out


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["fuse"])
    assert info.value.code == 2
