import io
import json
import subprocess
import sys

import pytest

from cfpo import io as pio
from cfpo.cli import run
from cfpo.fixtures import NAMED


def _doc(name):
    return pio.dumps(pio.poset_to_doc(NAMED[name]()))


def _run(*argv, name=None, text=None):
    stdin = io.StringIO(text if text is not None else _doc(name))
    return run([*argv, "-"], stdin)


def test_check_reports_two_paths():
    code, out = _run("check", name="DIAMOND")
    assert code == 1
    err = json.loads(out)
    assert err["error"] == "NotACFPO"
    first, second = err["details"]["paths"]
    assert first[0] == second[0] and first[-1] == second[-1]


def test_check_ok():
    code, out = _run("check", name="BIP22")
    assert code == 0
    assert json.loads(out) == {"cfpo": True, "components": 1, "class": 3}


def test_classify():
    code, out = _run("classify", name="ALT_5")
    assert code == 0 and json.loads(out)["n"] == 5


def test_verify():
    code, out = _run("verify", name="BOWTIE")
    doc = json.loads(out)
    assert code == 0 and doc["aut_preserved"] is True and doc["roundtrip"] is True


def test_aut_orbits_fixed_complete():
    assert json.loads(_run("aut", name="BOWTIE")[1])["order"] == 4
    assert len(json.loads(_run("aut", name="BOWTIE")[1])["elements"]) == 4
    assert len(json.loads(_run("orbits", "--k", "2", name="CHAIN_2")[1])["orbits"]) == 4
    assert json.loads(_run("fixed", name="ALT_5")[1]) == {"fixed_points": ["a2"]}
    doc = json.loads(_run("complete", name="BIP22")[1])
    assert len(doc["elements"]) == 5 and len(doc["virtual"]) == 1


def test_treeify_and_interpret():
    code, out = _run("treeify", "--dot", name="BOWTIE")
    doc = json.loads(out)
    assert code == 0 and doc["provenance"] == "fixed_point" and doc["u"] == ["x", "c1", "c2"]
    assert "digraph" in doc["dot"]
    code, back = run(["interpret", "-"], io.StringIO(out))
    assert code == 0 and pio.loads(back) == NAMED["BOWTIE"]()


def test_interpret_disconnected_drops_root():
    _, out = _run("treeify", name="ANTI_2")
    _, back = run(["interpret", "-"], io.StringIO(out))
    assert pio.loads(back) == NAMED["ANTI_2"]()


def test_treeify_bad_root():
    code, out = _run("treeify", "--route", "fixed", "--root", "a0", name="ALT_5")
    assert code == 1 and json.loads(out)["error"] == "NotAFixedPoint"


def test_dot_completed():
    code, out = _run("dot", "--completed", name="BIP22")
    nodes = [l for l in out.splitlines() if l.strip().endswith(";") and "->" not in l
             and l.strip().startswith('"')]
    assert code == 0 and len(nodes) == 5
    assert sum("dashed" in l for l in nodes) == 1


def test_dot_plain():
    code, out = _run("dot", name="CHAIN_2")
    assert code == 0 and out.count("->") == 1


def test_enumerate():
    code, out = run(["enumerate", "--max-n", "4"])
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and len(lines) == 1 + 1 + 3 + 9
    assert all(l["aut_preserved"] and l["roundtrip"] for l in lines)


@pytest.mark.parametrize("argv,text", [
    (["check", "-"], "{"),
    (["check", "-"], '{"elements": ["a", "a"]}'),
    (["check", "-"], '{"elements": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]}'),
    (["check", "/nonexistent/file.json"], ""),
    (["bogus"], ""),
    (["orbits", "--k", "x", "-"], "{}"),
])
def test_malformed_input_exits_2(argv, text):
    code, out = run(argv, io.StringIO(text))
    assert code == 2
    assert "error" in json.loads(out)


def test_repeated_runs_are_identical():
    outs = {_run("treeify", "--dot", name="HBAR")[1] for _ in range(3)}
    assert len(outs) == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cfpo.cli", "classify", "-"],
                          input=_doc("ALT_5"), capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["n"] == 5
