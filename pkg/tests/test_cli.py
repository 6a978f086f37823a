import json
import subprocess
import sys

import pytest

from rainbowidx.cli import run


def gen(tmp_path, *args, name="g.json"):
    out = tmp_path / name
    assert run(["gen", *args, "--out", str(out)]) == 0
    return out


def test_gen_rose_tail(tmp_path):
    out = gen(tmp_path, "--family", "rose-tail", "--n", "10", "--l", "6")
    data = json.loads(out.read_text())
    assert len(data["graph"]["edges"]) == 13
    assert data["palette"] == 6


def test_gen_is_byte_deterministic(tmp_path):
    a = gen(tmp_path, "--family", "cocycle-apex", "--n", "8", name="a.json")
    b = gen(tmp_path, "--family", "cocycle-apex", "--n", "8", name="b.json")
    assert a.read_bytes() == b.read_bytes()


def test_gen_basic_and_dot(tmp_path):
    dot = tmp_path / "w.dot"
    out = gen(tmp_path, "--family", "wheel", "--n", "5", "--dot", str(dot))
    data = json.loads(out.read_text())
    assert data["colors"] is None and len(data["graph"]["edges"]) == 10
    assert dot.read_text().startswith("graph G {")


def test_gen_wheel_pendant(tmp_path, capsys):
    out = gen(tmp_path, "--family", "wheel-pendant", "--n", "7")
    assert run(["verify", "--graph", str(out), "--colors", str(out), "--k", "3"]) == 0


def test_verify_ok(tmp_path, capsys):
    out = gen(tmp_path, "--family", "rose-tail", "--n", "10", "--l", "6")
    capsys.readouterr()
    assert run(["verify", "--graph", str(out), "--colors", str(out), "--k", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"ok": True, "checked": 120, "first_failure": None}


def test_verify_catches_corrupted_color(tmp_path, capsys):
    out = gen(tmp_path, "--family", "apex-bipartite", "--n", "7")
    data = json.loads(out.read_text())
    data["colors"] = [1] * len(data["colors"])
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    capsys.readouterr()
    assert run(["verify", "--graph", str(out), "--colors", str(bad), "--k", "3"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert not report["ok"] and report["first_failure"] is not None


def test_verify_single_corrupted_entry(tmp_path, capsys):
    out = gen(tmp_path, "--family", "k2-bipartite", "--n", "6")
    data = json.loads(out.read_text())
    data["colors"][0] = data["colors"][1]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    capsys.readouterr()
    assert run(["verify", "--graph", str(out), "--colors", str(bad), "--k", "5"]) == 1
    assert json.loads(capsys.readouterr().out)["first_failure"] is not None


def test_verify_with_witnesses(tmp_path, capsys):
    out = gen(tmp_path, "--family", "balanced-bipartite", "--r", "3")
    capsys.readouterr()
    assert run(["verify", "--graph", str(out), "--colors", str(out), "--k", "3", "--witnesses"]) == 0
    assert len(json.loads(capsys.readouterr().out)["witnesses"]) == 20


def test_rx_and_at_most(tmp_path, capsys):
    g = tmp_path / "c6.json"
    g.write_text(json.dumps({"n": 6, "edges": [[i, (i + 1) % 6] for i in range(6)]}))
    assert run(["rx", "--graph", str(g), "--k", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 4
    assert run(["rx", "--graph", str(g), "--k", "3", "--at-most", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["present"] is False


def test_tmin(capsys):
    assert run(["tmin", "--n", "5", "--k", "3", "--l", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 5


def test_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["rx", "--graph", str(bad), "--k", "3"]) == 2
    dup = tmp_path / "dup.json"
    dup.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 0]]}))
    assert run(["rx", "--graph", str(dup), "--k", "3"]) == 2
    colors = tmp_path / "colors.json"
    colors.write_text(json.dumps([1]))
    assert run(["verify", "--graph", str(dup.with_name("x.json")), "--colors", str(colors), "--k", "3"]) == 2
    assert "error" in capsys.readouterr().err
    assert run(["repro", "--claims", "no-such-claim"]) == 2


def test_repro_subset_is_byte_stable(tmp_path):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    ids = "t-432,bundle-formula-audit-16-7,rx3-wheel-17+"
    assert run(["repro", "--claims", ids, "--tsv", str(a), "--no-timing"]) == 0
    assert run(["repro", "--claims", ids, "--tsv", str(b), "--no-timing"]) == 0
    assert a.read_bytes() == b.read_bytes()
    rows = [line.split("\t") for line in a.read_text().splitlines()]
    assert rows[0][:6] == ["claim_id", "tag", "params", "expected", "computed", "status"]
    status = {r[0]: r[5] for r in rows[1:]}
    assert status == {
        "t-432": "confirmed",
        "bundle-formula-audit-16-7": "discrepancy-noted",
        "rx3-wheel-17+": "skipped-out-of-scale",
    }


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rainbowidx", "tmin", "--n", "4", "--k", "3", "--l", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 3
