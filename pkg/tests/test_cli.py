import json

from graphperiod import catalog
from graphperiod.cli import main, render_text


def test_analyze_builtin_json(capsys):
    code = main(["analyze", "--builtin", "k5", "--json"])
    out = capsys.readouterr()
    assert code == 0
    doc = json.loads(out.out)
    assert doc["period"] == {"lower": 5, "upper": 5, "resolved": True}
    assert doc["index"]["upper"] == 5
    assert out.err == ""


def test_analyze_text_and_json_agree(capsys):
    main(["analyze", "--builtin", "doubled-k4", "--json"])
    doc = json.loads(capsys.readouterr().out)
    main(["analyze", "--builtin", "doubled-k4"])
    text = capsys.readouterr().out
    assert f"period: lower {doc['period']['lower']}  upper {doc['period']['upper']}" in text
    assert f"index: lower {doc['index']['lower']}  upper {doc['index']['upper']}" in text


def test_analyze_missing_file(capsys):
    code = main(["analyze", "missing.json"])
    err = capsys.readouterr().err
    assert code == 1
    assert "missing.json" in err


def test_analyze_invalid_graph(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "name": "path",
        "vertices": ["a", "b"],
        "edges": [{"id": "e", "ends": ["a", "b"]}],
    }))
    code = main(["analyze", str(path)])
    assert code == 1
    assert "invalid input" in capsys.readouterr().err


def test_analyze_needs_exactly_one_source(capsys):
    assert main(["analyze"]) == 1
    assert main(["analyze", "x.json", "--builtin", "k5"]) == 1
    capsys.readouterr()


def test_examples_list(capsys):
    code = main(["examples", "list"])
    out = capsys.readouterr().out
    assert code == 0
    lines = [l for l in out.strip().splitlines() if l.strip()]
    assert len(lines) == 6
    assert any("soccer-doubled" in l and "30..60" in l for l in lines)


def test_examples_emit_and_analyze(tmp_path, capsys):
    path = tmp_path / "k34.json"
    assert main(["examples", "emit", "k34", str(path)]) == 0
    capsys.readouterr()
    code = main(["analyze", str(path), "--json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["period"] == {"lower": 1, "upper": 1, "resolved": True}
    assert doc["index"]["resolved"]


def test_examples_emit_unknown(tmp_path, capsys):
    code = main(["examples", "emit", "nope", str(tmp_path / "x.json")])
    assert code == 1
    assert "unknown builtin" in capsys.readouterr().err


def test_seed_flag_deterministic(capsys):
    main(["analyze", "--builtin", "doubled-k4", "--json", "--seed", "5"])
    first = capsys.readouterr().out
    main(["analyze", "--builtin", "doubled-k4", "--json", "--seed", "5"])
    second = capsys.readouterr().out
    assert first == second


def test_render_text_contains_certificates():
    from graphperiod.bounds import analyze
    from graphperiod.config import Config

    report = analyze(catalog.builtin("k5"), Config())
    text = render_text(report)
    assert "LoopSummand" in text
    assert "graph: k5" in text
