import io
import json
import subprocess
import sys

import pytest

from twotrees.cli import run
from twotrees.graphs import SimpleGraph


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_check():
    code, text = call("check", "6,2^6")
    (rec,) = records(text)
    assert code == 0 and rec["graphic"] and rec["sigma"] == 18 and rec["erdos_gallai_t"] is None
    _, text = call("check", "3,3,1,1")
    assert records(text)[0]["erdos_gallai_t"] == 2


def test_layoff():
    code, text = call("layoff", "4,3,3,2,2,2", "3")
    assert code == 0 and records(text)[0]["residual"] == [3, 2, 2, 2, 1]


def test_enumerate_counts():
    code, text = call("enumerate", "7")
    assert code == 0 and len(records(text)) == 12
    assert all(len(r["edges"]) == 11 for r in records(text))


def test_hosts():
    _, text = call("hosts", "7")
    rec = records(text)[0]
    assert rec["family"] == "G7" and rec["graph"]["n"] == 7
    _, dot = call("hosts", "6", "--dot")
    assert dot.startswith("graph G {") and dot.count("--") == 12


def test_pipeline_and_dot(tmp_path):
    code, text = call("pipeline", "3^6,2^4", "3")
    rec = records(text)[0]
    assert code == 0 and rec["on_top"] and rec["host_embedding"] is not None
    g = SimpleGraph.from_json(rec["realization"])
    assert g.degrees() == [3] * 6 + [2] * 4
    path = tmp_path / "g.json"
    path.write_text(text)
    code, dot = call("dot", str(path))
    assert code == 0 and dot.count("--") == g.m


def test_verify_exhaustive():
    code, text = call("verify", "4", "7", "--exhaustive")
    summary = records(text)[-1]["summary"]
    assert code == 0 and summary["falsifications"] == 0 and summary["checked"] == 207


def test_verify_sampled_is_byte_identical():
    a = call("verify", "6", "78", "--samples", "4", "--seed", "5")
    b = call("verify", "6", "78", "--samples", "4", "--seed", "5")
    assert a == b and a[0] == 0


def test_extremal():
    code, text = call("extremal", "4", "7")
    rec = records(text)[0]
    assert code == 0 and rec["sequence"] == [6, 2, 2, 2, 2, 2, 2]
    assert rec["refutation"]["strong"] is False and rec["refutation"]["weak"] is False
    assert len(rec["refutation"]["missing"]) == 1


@pytest.mark.parametrize("argv", [[], ["bogus"], ["check"], ["check", "1,x"], ["layoff", "2,2,2"],
                                  ["verify", "3", "6", "--exhaustive", "--samples", "3"]])
def test_usage_errors(argv, capsys):
    code, _ = call(*argv)
    assert code == 2


def test_bad_input_exit_code(tmp_path):
    assert call("pipeline", "1,1,1,1", "3")[0] == 2
    assert call("layoff", "2,2,2", "9")[0] == 2
    assert call("dot", str(tmp_path / "missing.json"))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twotrees", "check", "2,2,2"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["graphic"]


def test_falsification_exit_code(monkeypatch):
    import twotrees.cli as cli
    from twotrees.potential import Falsification

    def boom(*args, **kwargs):
        raise Falsification("forced")

    monkeypatch.setattr(cli, "build_construction", boom)
    assert call("pipeline", "3^6,2^4", "3")[0] == 1
