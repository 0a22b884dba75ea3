import json
import subprocess
import sys

import pytest

from hopfheap.cli import main


def run(*args):
    return main([str(a) for a in args])


@pytest.fixture
def c3(tmp_path):
    p = tmp_path / "c3.json"
    assert run("generate", "heap", "--group", "C3", "-o", p) == 0
    return p


def test_check_heap_pass_and_report(c3, tmp_path, capsys):
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert run("check-heap", c3, "--report", r1) == 0
    assert run("check-heap", c3, "--report", r2) == 0
    assert r1.read_bytes() == r2.read_bytes()
    assert json.loads(r1.read_text())["ok"] is True
    assert "PASS" in capsys.readouterr().out


def test_check_heap_perturbed(c3, tmp_path, capsys):
    rec = json.loads(c3.read_text())
    rec["heap"][0][-1] = "2"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(rec))
    report = tmp_path / "r.json"
    assert run("check-heap", bad, "--report", report) == 1
    data = json.loads(report.read_text())
    assert data["ok"] is False and data["axiom"] and data["witness"] is not None
    assert data["axiom"] in capsys.readouterr().out


def test_malformed_scalar_exit_2(c3, tmp_path):
    rec = json.loads(c3.read_text())
    rec["heap"][0][-1] = "1/0"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(rec))
    assert run("check-heap", bad) == 2
    assert run("check-heap", tmp_path / "nope.json") == 2


def test_wrong_file_kind_exit_2(c3):
    assert run("check-hopf", c3) == 2


@pytest.mark.parametrize("group,dim", [("C2", 2), ("S3", 6), ("C1", 1)])
def test_translations(tmp_path, capsys, group, dim):
    p = tmp_path / "h.json"
    run("generate", "heap", "--group", group, "-o", p)
    out = tmp_path / "t.json"
    assert run("translations", p, "--side", "left", "-o", out) == 0
    assert f"dim Tn^l C = {dim}" in capsys.readouterr().out
    assert json.loads(out.read_text())["dim"] == dim
    assert json.loads((tmp_path / "t.json.action.json").read_text())["side"] == "left"
    assert run("check-hopf", out) == 0


def test_grunspan_sweedler(tmp_path, capsys):
    p = tmp_path / "sw.json"
    run("generate", "sweedler", "--heap", "-o", p)
    assert run("grunspan", p, "-o", tmp_path / "g.json") == 0
    out = capsys.readouterr().out
    assert "ϑ ≠ id" in out and "ϑ(x) = -x" in out
    assert run("check-heap", tmp_path / "g.json") == 0


def test_grunspan_group_is_identity(c3, capsys):
    assert run("grunspan", c3) == 0
    assert "ϑ = id" in capsys.readouterr().out


def test_roundtrip_and_ehresmann(c3, tmp_path, capsys):
    assert run("roundtrip", c3) == 0
    e = tmp_path / "e.json"
    assert run("ehresmann", c3, "-o", e) == 0
    rec = json.loads(e.read_text())
    assert rec["dim"] == 3 and "quotient_of" in rec
    assert run("check-hopf", e) == 0


def test_generate_sweedler_reparses(tmp_path):
    p = tmp_path / "sw.json"
    assert run("generate", "sweedler", "--field", "Q", "-o", p) == 0
    assert json.loads(p.read_text())["dim"] == 4
    assert run("check-hopf", p) == 0
    assert run("generate", "sweedler", "--field", "Fp:2") == 2


def test_galois_files(tmp_path):
    p = tmp_path / "g.json"
    assert run("generate", "galois", "--group", "Sweedler", "--field", "Fp:5", "-o", p) == 0
    assert run("check-galois", p) == 0
    assert run("ehresmann", p) == 0
    rec = json.loads(p.read_text())
    rec["action"] = [e for e in rec["action"] if e[1] != 0]
    p.write_text(json.dumps(rec))
    assert run("check-galois", p) == 1


def test_group_algebra_generation(tmp_path):
    p = tmp_path / "s3.json"
    assert run("generate", "group-algebra", "--group", "S3", "--field", "Fp:7", "-o", p) == 0
    assert run("check-hopf", p) == 0
    assert run("generate", "group-algebra", "--group", "S3", "--heap", "-o", p) == 0
    assert run("check-heap", p) == 0


def test_module_entry_point(c3):
    proc = subprocess.run([sys.executable, "-m", "hopfheap", "check-heap", str(c3)], capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout
