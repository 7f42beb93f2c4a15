import json
import subprocess
import sys

import pytest

from graphthrottle.cli import dispatch
from graphthrottle.families import gnsm, path
from graphthrottle.graph import encode_graph6, parse_graph6


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_path(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "pd", "--variant", "prodstar", "--graph6", encode_graph6(path(9)))
    assert code == 0
    data = json.loads(out)
    assert data["value"] == 3
    assert list(data) == ["kind", "variant", "omega", "value", "k", "witness", "curve"]


def test_compute_table_and_csv(capsys):
    code, out, _ = run(capsys, "compute", "--family", "h11", "--kind", "cops", "--variant", "prodx", "--out", "table")
    assert code == 0 and "value    4" in out
    code, out, _ = run(capsys, "compute", "--family", "path", "--params", "6", "--kind", "pd",
                       "--variant", "prodstar", "--out", "csv")
    assert out.splitlines()[0] == "k,pt,objective"


def test_compute_fixed_k(capsys, tmp_path):
    dump = tmp_path / "game.csv"
    code, out, _ = run(capsys, "compute", "--family", "path", "--params", "7", "--kind", "cops", "--k", "1",
                       "--dump-game", str(dump))
    assert code == 0
    assert json.loads(out) == {"kind": "cops", "k": 1, "pt": 3, "witness": [3]}
    assert dump.read_text().startswith("cops,robber,turn,value")


def test_omega_and_threads_flags(capsys):
    _, one, _ = run(capsys, "compute", "--family", "grid", "--params", "3,3", "--kind", "zf", "--variant", "prodx",
                    "--omega", "3", "--threads", "1")
    _, two, _ = run(capsys, "compute", "--family", "grid", "--params", "3,3", "--kind", "zf", "--variant", "prodx",
                    "--omega", "3", "--threads", "2")
    assert one == two
    assert json.loads(one)["omega"] == 3


def test_curve(capsys):
    code, out, _ = run(capsys, "curve", "--family", "path", "--params", "6", "--kind", "pd", "--variant", "prodstar")
    assert code == 0
    assert out.splitlines() == ["k,pt,objective", "1,3,3", "2,1,2"]


def test_family_gnsm(capsys):
    code, out, _ = run(capsys, "family", "--name", "gnsm", "--params", "3,3,4", "--out", "graph6")
    assert code == 0
    g = parse_graph6(out.strip())
    assert g.n == 30 and g == gnsm(3, 3, 4)


def test_family_corona_and_json(capsys):
    code, out, _ = run(capsys, "family", "--name", "corona", "--params", "path,3", "--out", "json")
    assert code == 0 and json.loads(out)["n"] == 6


def test_gallery(capsys):
    code, out, _ = run(capsys, "gallery", "--name", "H11")
    assert code == 0 and parse_graph6(out.strip()).n == 11
    code, _, err = run(capsys, "gallery", "--name", "nope")
    assert code == 1 and "unknown gallery" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-n", "4")
    assert code == 0 and len(out.split()) == 1 + 1 + 2 + 6
    _, out, _ = run(capsys, "enumerate", "--min-n", "4", "--max-n", "4", "--all")
    assert len(out.split()) == 11


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--id", "zf-star-n-minus-1", "--max-n", "6")
    assert code == 0
    data = json.loads(out)
    assert data["id"] == "zf-star-n-minus-1" and data["pass"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from graphthrottle import cli
    from graphthrottle.verify import TheoremCheck

    monkeypatch.setattr(cli, "verify_theorem", lambda cid, n, c: TheoremCheck(cid, "n in [1, 1]", False, "@", 0))
    code, out, _ = run(capsys, "verify", "--id", "zf-x-trivial")
    assert code == 3 and json.loads(out)["counterexample"] == "@"


def test_convert_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("Bg\nCl\n"))
    code, out, _ = run(capsys, "convert", "--file", "-")
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert [d["n"] for d in lines] == [3, 4]


def test_multi_graph_file(capsys, tmp_path):
    f = tmp_path / "graphs.g6"
    f.write_text("Bg\nCl\n")
    code, out, _ = run(capsys, "compute", "--file", str(f), "--kind", "zf", "--variant", "sum")
    assert code == 0 and len(out.splitlines()) == 2


def test_input_precedence(capsys):
    _, out, _ = run(capsys, "convert", "--graph6", "Bg", "--family", "path", "--params", "5", "--out", "graph6")
    assert out.strip() == "Bg"


def test_usage_errors(capsys):
    assert run(capsys, "compute")[0] == 1
    assert run(capsys, "compute", "--graph6", "A?", "--variant", "prodstar")[0] == 1
    assert run(capsys, "compute", "--graph6", "AO")[0] == 1
    assert run(capsys, "family", "--name", "nope")[0] == 1
    with pytest.raises(SystemExit) as exc:
        dispatch(["bogus"])
    assert exc.value.code == 1


def test_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("THROTTLE_BUDGET", "10")
    code, _, err = run(capsys, "compute", "--family", "cycle", "--params", "8", "--kind", "cops", "--k", "2")
    assert code == 2 and "budget" in err


def test_help_mentions_objectives(capsys):
    with pytest.raises(SystemExit):
        dispatch(["compute", "--help"])
    out = capsys.readouterr().out
    assert "prodstar" in out and "k pt" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphthrottle", "gallery", "--name", "bowtie"],
                          capture_output=True, text=True, check=True)
    assert parse_graph6(proc.stdout.strip()).n == 5
