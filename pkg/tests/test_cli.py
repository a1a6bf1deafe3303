import json
import subprocess
import sys

import pytest

from intervalk.cli import bench, main

from conftest import FIXTURES, GOLDEN


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_recognize_reject(capsys):
    code, out, _ = run(capsys, "recognize", FIXTURES / "fig5.graph")
    assert code == 1
    assert json.loads(out)["evidence"]["kind"] == "stage1_both_fail"


def test_recognize_accept_with_oracle(capsys):
    code, out, _ = run(capsys, "recognize", "--oracle", FIXTURES / "p4.graph")
    doc = json.loads(out)
    assert code == 0 and doc["oracle"] == "accept"
    assert len(doc["ordering"]) == 4 and len(doc["intervals"]) == 4


def test_recognize_plain_and_trace(capsys):
    code, out, err = run(capsys, "recognize", "--plain", "--trace", FIXTURES / "c6.graph")
    assert code == 1
    assert out.splitlines()[:2] == ["REJECT", "evidence self_coupled"]
    assert err.startswith("COMPONENT")


def test_recognize_audit(capsys):
    code, out, _ = run(capsys, "recognize", "--audit", FIXTURES / "k22.graph")
    assert json.loads(out)["audit"] == {"other_rules_verdict": "accept", "differs": False}


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "recognize", tmp_path / "missing.graph")[0] == 2
    bad = tmp_path / "bad.graph"
    bad.write_text("v 0 0\nv 1 0\ne 0 1\n")
    code, _, err = run(capsys, "recognize", bad)
    assert code == 2 and "line 3" in err
    assert run(capsys, "oracle", FIXTURES / "fig6.graph")[0] == 2
    assert run(capsys, "recognize", "--oracle", FIXTURES / "fig6.graph")[0] == 2
    assert run(capsys, "gen", 4, 1, 0.5, 0)[0] == 2


def test_intervals(capsys):
    code, out, _ = run(capsys, "intervals", FIXTURES / "p4.graph")
    assert code == 0
    assert out.splitlines() == ["0 1 1", "1 1 2", "2 2 3", "3 3 4"]
    code, out, err = run(capsys, "intervals", FIXTURES / "c6.graph")
    assert code == 1 and out == "" and "self_coupled" in err


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", FIXTURES / "p4.graph", FIXTURES / "p4.order")
    assert (code, out) == (0, "OK\n")
    code, out, _ = run(capsys, "verify", FIXTURES / "p4.graph", FIXTURES / "p4_bad.order")
    assert (code, out) == (1, "VIOLATION 2 0 3 same-color-ab\n")
    short = tmp_path / "short.order"
    short.write_text("0 1\n")
    assert run(capsys, "verify", FIXTURES / "p4.graph", short)[0] == 2
    assert run(capsys, "verify", FIXTURES / "p4.graph", tmp_path / "none")[0] == 2


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", FIXTURES / "k3.graph")
    assert code == 0 and out.startswith("ACCEPT ")
    assert run(capsys, "oracle", FIXTURES / "c6.graph")[:2] == (1, "REJECT\n")


def test_gen_golden(capsys):
    code, out, _ = run(capsys, "gen", 8, 3, 0.4, 7)
    assert code == 0
    assert out == (GOLDEN / "gen_8_3_0.4_7.graph").read_text()
    assert run(capsys, "gen", 8, 3, 0.4, 7)[1] == out


def test_dump(capsys):
    code, out, _ = run(capsys, "dump-gplus", FIXTURES / "k22.graph")
    assert code == 0
    assert run(capsys, "dump-gplus", FIXTURES / "k22.graph")[1] == out
    assert all("->" in l or l.startswith("S") for l in out.splitlines())


def test_bench_empty(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "")
    assert (code, out) == (0, "n,m,nm,seconds,verdict\n")


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "20,40", "--repeats", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4 and lines[-1].startswith("# exponent ")
    rows, exponent = bench([], 4.0)
    assert rows == [] and exponent is None


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "intervalk", "recognize", str(FIXTURES / "k3.graph")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "accept"
