import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from topoarith.cli import count, main


def run(*argv):
    buf = io.StringIO()
    rc = main(list(argv), stdout=buf)
    return rc, buf.getvalue()


@pytest.mark.parametrize("text, want", [("4096", 4096), ("2^12", 4096), ("2**12", 4096), (" 10 ", 10)])
def test_count(text, want):
    assert count(text) == want


def test_render_text():
    rc, out = run("render", "--order", "fd", "--depth", "2")
    assert rc == 0 and "# sequence: 2 0 1 3" in out


def test_render_svg_to_file(tmp_path):
    path = tmp_path / "tree.svg"
    rc, out = run("render", "--order", "variant", "--depth", "3", "--format", "svg", "--out", str(path))
    assert rc == 0 and out == ""
    ET.parse(path)


@pytest.mark.parametrize(
    "argv",
    [
        ["render", "--depth", "0"],
        ["render", "--order", "nope"],
        ["render", "--format", "png"],
        ["verify", "--suite", "bogus"],
        ["verify", "--max", "lots"],
        ["probe"],
        ["probe", "--claim", "signed-add-continuity", "--bound", "17"],
        [],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_verify_records_and_exit_status():
    rc, out = run("verify", "--suite", "numerals", "--max", "2^6", "--seed", "3")
    assert rc == 0
    lines = out.splitlines()
    recs = [json.loads(line) for line in lines]
    assert recs and all(r["status"] == "pass" for r in recs)
    assert list(recs[0]) == ["suite", "case", "params", "status", "counterexample", "duration"]
    assert all(r["duration"] is None for r in recs)
    keys = [(r["suite"], r["case"], json.dumps(r["params"], sort_keys=True)) for r in recs]
    assert keys == sorted(keys)


def test_verify_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for p in (a, b):
        assert run("verify", "--suite", "orders", "--max", "2^6", "--seed", "2", "--out", str(p))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_timings_fill_durations():
    _, out = run("verify", "--suite", "numerals", "--max", "16", "--timings")
    assert all(isinstance(json.loads(line)["duration"], float) for line in out.splitlines())


def test_verify_exit_1_on_failure(monkeypatch):
    from topoarith import verify

    def broken(max_, seed, out):
        out.check("always-fails", {}, lambda: [1, 2])

    monkeypatch.setitem(verify.SUITES, "numerals", (broken,))
    rc, out = run("verify", "--suite", "numerals", "--max", "8")
    rec = json.loads(out)
    assert rc == 1 and rec["status"] == "fail" and rec["counterexample"] == [1, 2]


def test_embed_log_and_table():
    rc, out = run("embed", "--steps", "5")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rc == 0 and rows[3] == {"step": 4, "direction": "back", "n": 5, "e": "1/2"}
    rc, out = run("embed", "--steps", "5", "--table")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["n"] for r in rows] == [0, 1, 2, 3, 5]


def test_probe_never_fails():
    rc, out = run("probe", "--claim", "signed-add-continuity", "--bound", "6", "--seed", "1")
    recs = [json.loads(line) for line in out.splitlines()]
    assert rc == 0 and recs
    assert {r["status"] for r in recs} == {"inconclusive"}
    assert all("evidence" in r for r in recs)


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "topoarith", "render", "--depth", "1"], capture_output=True, text=True
    )
    assert out.returncode == 0 and out.stdout.splitlines()[-1] == "# sequence: 0 1"
    bad = subprocess.run([sys.executable, "-m", "topoarith", "verify", "--max", "x"], capture_output=True, text=True)
    assert bad.returncode == 2
