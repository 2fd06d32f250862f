import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from aomkit import fixtures
from aomkit.cli import main
from aomkit.io import parse_svs

DATA = Path(__file__).resolve().parent.parent / "data"
THREE = str(DATA / "three_lines.svs")
BROKEN = str(DATA / "three_lines_broken.svs")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def listing(out):
    return [line for line in out.splitlines()[1:]]


def test_check_aom(capsys):
    code, out, _ = run(capsys, "check", THREE)
    assert code == 0 and out.strip().endswith("aom: yes")


def test_check_broken(capsys):
    code, out, _ = run(capsys, "check", BROKEN, "--strategy", "axioms")
    assert code == 1
    assert "A2   FAIL" in out and "[++0, -+0] e=a" in out


def test_check_json_matches_text(capsys):
    code, out, _ = run(capsys, "check", BROKEN, "--json")
    d = json.loads(out)
    assert code == 1 and d["result"] is False
    assert d["axioms"]["A2"]["verdict"] == "fail"
    assert d["dagger"]["O4"]["verdict"] == "fail"


def test_check_modes(capsys, tmp_path):
    f = tmp_path / "pm.svs"
    f.write_text("elements: a\n+\n-\n")
    code, out, _ = run(capsys, "check", str(f), "--mode", "om")
    assert code == 1 and "O1   FAIL" in out
    code, _, _ = run(capsys, "check", THREE, "--mode", "com")
    assert code == 0
    code, out, _ = run(capsys, "check", THREE, "--axioms", "A1,A3'")
    assert code == 0 and "A3'" in out


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.svs"
    bad.write_text("elements: a b c\n+-00\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "check", str(tmp_path / "missing.svs"))[0] == 2
    assert run(capsys, "check", THREE, "--axioms", "Z9")[0] == 2
    assert run(capsys, "derive", THREE, "dagger", "--label", "a")[0] == 2
    assert run(capsys, "restrict", THREE, "--label", "z")[0] == 2
    assert run(capsys, "flaw-demo", THREE, "--n1", "+00")[0] == 2


def test_derive(capsys):
    code, out, _ = run(capsys, "derive", THREE, "P")
    assert code == 0 and listing(out) == ["+00", "-00", "000"]
    _, out, _ = run(capsys, "derive", THREE, "N")
    assert len(listing(out)) == 9
    _, out, _ = run(capsys, "derive", THREE, "dagger", "--json")
    d = json.loads(out)
    assert d["elements"] == ["a", "b", "c", "g"] and len(d["vectors"]) == 39


def test_derive_empty_sym(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("elements: a b\n"))
    code, out, _ = run(capsys, "derive", "-", "sym")
    assert code == 0 and out == "elements: a b\n"


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", str(DATA / "three_lines.arr"))
    assert parse_svs(out) == fixtures.three_lines_system()
    _, out, _ = run(capsys, "enumerate", str(DATA / "five_lines.arr"))
    assert len(listing(out)) == 41


def test_lift_restrict_round_trip(capsys, tmp_path):
    _, lifted, _ = run(capsys, "lift", THREE)
    f = tmp_path / "o.svs"
    f.write_text(lifted)
    _, out, _ = run(capsys, "restrict", str(f))
    assert parse_svs(out) == fixtures.three_lines_system()


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--count", "2", "--max-n", "3")
    assert code == 0 and "instances" in out


def test_verify_empty_corpus(capsys):
    code, out, _ = run(capsys, "--json", "verify", "--count", "0", "--no-fixtures")
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["instances"] == 0


def test_verify_injected_broken(capsys):
    code, out, _ = run(capsys, "verify", "--count", "0", "--no-fixtures", "--inject-broken", "--json")
    d = json.loads(out)
    assert code == 0 and d["ok"]


def test_verify_extra(capsys):
    code, _, _ = run(capsys, "verify", "--count", "0", "--no-fixtures", "--extra", BROKEN)
    assert code == 0


def test_flaw_demo(capsys):
    code, out, _ = run(capsys, "flaw-demo", THREE, "--n1", "+00", "--n2", "-00", "--json")
    d = json.loads(out)
    assert code == 0 and d["found"]
    assert (d["U"], d["U'"], d["V"], d["witness"]) == ("++0", "-+0", "++0", "0+0")


def test_flaw_demo_no_pair(capsys, tmp_path):
    f = tmp_path / "z.svs"
    f.write_text("elements: a\n0\n")
    code, out, _ = run(capsys, "flaw-demo", str(f))
    assert code == 0 and "no qualifying pair" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "aomkit", "derive", THREE, "P"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.splitlines()[1:] == ["+00", "-00", "000"]


def test_pure_python_fallback():
    env = dict(os.environ, AOMKIT_PURE_PYTHON="1")
    code = "from aomkit import kernels; print(kernels.BACKEND)"
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert r.stdout.strip() == "python"
    r = subprocess.run(
        [sys.executable, "-m", "aomkit", "verify", "--count", "2", "--max-n", "4"],
        capture_output=True, text=True, env=env,
    )
    assert r.returncode == 0, r.stdout
