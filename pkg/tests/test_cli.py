import io
import json
import shutil
import subprocess
import sys

import pytest

from distpres.cli import main, named_graph
from distpres.codecs import emit_edgelist, emit_graph6
from distpres.errors import ParseError
from distpres.families import cycle, path
from distpres.sweeps import verify_report


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_named(capsys):
    code, out, _ = run(["analyze", "--named", "C5"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["ddp"] == [1, 2, 3, 5] and not rep["is_dp"]
    assert verify_report(rep) == []


def test_analyze_file_graph6(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text(emit_graph6(path(4)) + "\n")
    code, out, _ = run(["analyze", str(f), "--format", "graph6"], capsys)
    assert code == 0 and json.loads(out)["cut_vertices"] == [1, 2]


def test_analyze_stdin(capsys, monkeypatch):
    code, out, _ = run(["analyze"], capsys, stdin=emit_edgelist(cycle(6)), monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["ddp"] == [1, 2, 3, 4, 6]


def test_disconnected_exit(capsys, monkeypatch):
    code, _, err = run(["analyze", "-"], capsys, stdin="4 1\n0 1\n", monkeypatch=monkeypatch)
    assert code == 3 and "3 components" in err


def test_parse_exit(capsys, monkeypatch):
    code, _, err = run(["analyze", "--format", "graph6"], capsys, stdin="Dh", monkeypatch=monkeypatch)
    assert code == 2 and "truncated" in err


def test_too_large_exit(capsys):
    assert run(["analyze", "--named", "P21"], capsys)[0] == 4
    assert run(["analyze", "--named", "P8", "--max-n", "7"], capsys)[0] == 4
    assert run(["analyze", "--named", "P22", "--skip-dp"], capsys)[0] == 0


def test_unknown_suite_exit(capsys):
    assert run(["theorems", "nope"], capsys)[0] == 5
    assert run(["conjectures", "nope"], capsys)[0] == 5


def test_theorem_sweep_json(capsys):
    code, out, _ = run(["theorems", "lemma-w4s", "--max-n", "5", "--json"], capsys)
    res = json.loads(out)
    assert code == 0 and res["ok"] and res["checked"] == 31 and res["schema"] == 1


def test_theorem_sweep_text(capsys):
    code, out, _ = run(["theorems", "thm-decomp", "--max-n", "5"], capsys)
    assert code == 0 and "violations: 0" in out


def test_conjecture_text(capsys):
    code, out, _ = run(["conjectures", "min-degree-half", "--max-n", "6"], capsys)
    assert code == 0 and "min-degree-half" in out


def test_catalog_file(tmp_path, capsys):
    f = tmp_path / "c.g6"
    f.write_text("\n".join(emit_graph6(g) for g in (cycle(5), cycle(6), path(5))) + "\n")
    code, out, _ = run(["theorems", "prop-sdp", "--catalog", str(f), "--json"], capsys)
    assert code == 0 and json.loads(out)["counts"] == {"dp_sdp": 1, "dp_not_sdp": 0, "not_dp": 2}


def test_family_ckl(capsys):
    code, out, _ = run(["family", "ckl", "--k", "9", "--l", "1", "--enumerate", "--limit", "3"], capsys)
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 3
    assert lines[0]["attachments"] == [{"start": 0, "joins": [0]}]
    assert lines[0]["added"] == [9]


def test_family_sample_is_seeded(capsys):
    a = run(["family", "ckl", "--k", "11", "--l", "2", "--seed", "4"], capsys)[1]
    b = run(["family", "ckl", "--k", "11", "--l", "2", "--seed", "4"], capsys)[1]
    assert a == b


def test_decompose_check(capsys, monkeypatch):
    text = "5 6\n0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n"
    code, out, _ = run(["decompose", "--check"], capsys, stdin=text, monkeypatch=monkeypatch)
    rep = json.loads(out)
    assert code == 0 and rep["agree"] and rep["ddp_decomposition"] == [1, 2, 3, 4, 5]
    assert rep["splits"] == [{"x": 2, "left": [0, 1, 2], "right": [2, 3, 4]}]


def test_named_graph_errors():
    with pytest.raises(ParseError):
        named_graph("Q4")
    with pytest.raises(ParseError):
        named_graph("K99")


@pytest.mark.skipif(shutil.which("dp") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["dp", "analyze", "--named", "figure1"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["is_sdp"]
