import json
import subprocess
import sys

import pytest

from ecbound.cli import main

TABLE_CURVES = ("4976a1", "9865b1", "4279c1")


def _fields(out):
    return dict(l.split(None, 1) for l in out.splitlines() if l.startswith(("bound_raw", "certified")))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bound_389a1_certified(capsys):
    code, out, err = run(capsys, "bound", "389a1", "-p", "5", "-n", "1", "-r", "2")
    assert code == 0
    assert _fields(out) == {"bound_raw": "2", "certified": "true"}


def test_bound_rank_from_corpus(capsys):
    code, out, _ = run(capsys, "bound", "389a1", "-p", "5", "-n", "2", "--json")
    d = json.loads(out)
    assert code == 0 and d["rank"] == 2 and d["bound_raw"] == 4 and d["certified"]


def test_bound_p2_refused(capsys):
    code, out, _ = run(capsys, "bound", "389a1", "-p", "2", "-n", "1", "-r", "2")
    assert code == 1
    assert ["certified", "false"] in [l.split() for l in out.splitlines()]
    assert "warning:" in out


def test_scan_4976a1(capsys):
    code, out, _ = run(capsys, "scan", "4976a1", "--pmin", "11", "--pmax", "100")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1 and lines[0].startswith("p=11 verdict=fails")


def test_scan_jobs_same_output(capsys):
    a = run(capsys, "scan", "4976a1", "--pmin", "3", "--pmax", "1500")
    b = run(capsys, "scan", "4976a1", "--pmin", "3", "--pmax", "1500", "--jobs", "3")
    assert a == b


def test_reduction(capsys):
    code, out, _ = run(capsys, "reduction", "389a1")
    assert code == 0
    assert out.strip() == "l=389 type=split-mult kodaira=I1 c=1 ordDelta=1"
    code, out, _ = run(capsys, "reduction", "[0,0,0,0,5]", "-l", "5", "--json")
    assert json.loads(out)["local"][0]["kodaira"] == "II"


def test_image_and_tor(capsys):
    code, out, _ = run(capsys, "image", "389a1", "-p", "7")
    assert code == 0 and out.startswith("full(p=7): proven")
    code, out, _ = run(capsys, "tor", "[0,-1,1,0,0]", "-p", "5")
    assert code == 0 and out.startswith("p=5 verdict=fails provenance=lift-test")


@pytest.mark.parametrize("argv", [
    [],
    ["bound", "389a1", "-p", "6", "-n", "1", "-r", "2"],
    ["bound", "389a1", "-p", "5", "-n", "0", "-r", "2"],
    ["bound", "[0,1,1,-2,0]", "-p", "5", "-n", "1"],
    ["tor", "389b1", "-p", "5"],
    ["tor", "[0,0,0,0,0]", "-p", "5"],
    ["scan", "389a1", "--pmin", "100", "--pmax", "10"],
    ["frobnicate", "389a1"],
    ["image", "389a1", "-p", "3"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.strip() and not out


def test_corpus_jobs_independent(capsys, tmp_path):
    from ecbound.corpus import bundled_corpus, write_corpus
    path = tmp_path / "c.jsonl"
    write_corpus([r for r in bundled_corpus() if r.label in ("389a1", *TABLE_CURVES)], path)
    a = run(capsys, "corpus", str(path), "tor", "-p", "11")
    b = run(capsys, "corpus", str(path), "--jobs", "2", "tor", "-p", "11")
    c = run(capsys, "corpus", "--jobs", "3", str(path), "tor", "-p", "11")
    assert a == b == c
    assert a[0] == 0
    assert a[1].count("# ") == 4
    assert "# 4976a1 [0,1,0,-24,52]\np=11 verdict=fails" in a[1]


def test_corpus_bound_exit_is_max(capsys, tmp_path):
    from ecbound.corpus import bundled_corpus, write_corpus
    path = tmp_path / "c.jsonl"
    write_corpus([r for r in bundled_corpus() if r.label in ("389a1", "4976a1")], path)
    code, out, _ = run(capsys, "corpus", str(path), "bound", "-p", "11", "-n", "1")
    assert code == 1
    assert [l.split() for l in out.splitlines() if l.startswith("certified")] == \
        [["certified", "true"], ["certified", "false"]]


def test_corpus_missing_subcommand(capsys, tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"label":"a","a":[0,1,1,-2,0]}\n')
    assert run(capsys, "corpus", str(path))[0] == 2
    assert run(capsys, "corpus", str(tmp_path / "nope.jsonl"), "tor", "-p", "5")[0] == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "ecbound", "bound", "389a1", "-p", "5", "-n", "1",
                        "-r", "2"], capture_output=True, text=True)
    assert r.returncode == 0 and "certified" in r.stdout
