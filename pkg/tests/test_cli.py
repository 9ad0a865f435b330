import json

import pytest

from configlab.catalog import ceva, fano
from configlab.cli import json_safe, main
from configlab.incidence import IncidenceStructure
from configlab.symmetry import canonical_form


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_build_and_analyze(capsys, monkeypatch):
    code, out, _ = run(["build", "fano"], capsys)
    assert code == 0
    code, report, _ = run(["analyze", "-"], capsys, stdin=out, monkeypatch=monkeypatch)
    r = json.loads(report)
    assert r["params"] == {"v": 7, "k": 3, "b": 7, "r": 3, "distinct": True}
    assert r["design"]["lambda"] == 1
    assert r["full_order"] == 336 and r["proper_order"] == 168
    assert r["has_polarity"] is True and r["s_regularity"] == 4
    assert r["schema"] == 1


def test_kummer_analyze_hadamard(capsys, monkeypatch):
    _, out, _ = run(["build", "kummer", "--g", "2"], capsys)
    _, report, _ = run(["analyze"], capsys, stdin=out, monkeypatch=monkeypatch)
    r = json.loads(report)
    assert r["design"]["lambda"] == 2 and r["hadamard"] is True


def test_analyze_text(capsys, monkeypatch):
    _, out, _ = run(["build", "golden", "--which", "third93"], capsys)
    _, text, _ = run(["analyze", "--text"], capsys, stdin=out, monkeypatch=monkeypatch)
    assert "s-classes   [3, 6]" in text
    assert "regular     False" in text


def test_iso(tmp_path, capsys):
    a, b, c = tmp_path / "a.json", tmp_path / "b.json", tmp_path / "c.json"
    assert main(["build", "ceva", "--n", "3", "-o", str(a)]) == 0
    assert main(["build", "golden", "--which", "brianchon", "-o", str(b)]) == 0
    assert main(["build", "golden", "--which", "cyclic93", "-o", str(c)]) == 0
    capsys.readouterr()
    assert main(["iso", str(a), str(b)]) == 0
    assert json.loads(capsys.readouterr().out)["isomorphic"] is True
    assert main(["iso", str(a), str(c)]) == 1


def test_roundtrip_certificate(tmp_path, capsys):
    p = tmp_path / "x.json"
    main(["build", "ceva", "--n", "4", "-o", str(p)])
    main(["export", str(p), "--format", "json"])
    out = capsys.readouterr().out
    assert canonical_form(IncidenceStructure.from_json(out)) == canonical_form(ceva(4))


def test_export_formats(tmp_path, capsys):
    p = tmp_path / "f.json"
    p.write_text(fano().to_json())
    main(["export", str(p), "--format", "dot"])
    dot = capsys.readouterr().out
    assert dot.startswith("graph") and "fillcolor=white" in dot
    main(["export", str(p), "--format", "csv"])
    assert IncidenceStructure.from_csv(capsys.readouterr().out) == fano()


def test_errors_are_json(capsys):
    code = main(["build", "ceva", "--n", "5", "--q", "7", "--realize"])
    err = json.loads(capsys.readouterr().err)
    assert code == 2 and err["error"] == "RootsUnavailable"
    code = main(["build", "modular", "--n", "20"])
    assert code == 2 and json.loads(capsys.readouterr().err)["error"] == "NOutOfRange"
    code = main(["iso", "/nonexistent/a.json", "/nonexistent/b.json"])
    assert code == 2


def test_realize_cli(tmp_path, capsys):
    p = tmp_path / "f.json"
    p.write_text(fano().to_json())
    assert main(["realize", "--input", str(p)]) == 0
    r = json.loads(capsys.readouterr().out)
    assert r["matches"] and len(r["hyperplanes"]) == 7
    assert r["points"]["points"][1] == [1, 2, 4, 8]


def test_desargues_realize_cli(capsys):
    assert main(["build", "desargues", "--realize"]) == 0
    r = json.loads(capsys.readouterr().out)
    assert r["isomorphic"] and r["plane"] == [1, 2, 4, 8]
    assert IncidenceStructure.from_dict(r["structure"]).v == 10


def test_enumerate_cli(capsys):
    assert main(["enumerate", "--v", "9", "--lineal"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 3


def test_catalog_cli(capsys):
    main(["catalog"])
    rows = json.loads(capsys.readouterr().out)
    assert {"name": "fano", "v": 7, "k": 3, "b": 7, "r": 3} in rows
    main(["catalog", "--text"])
    assert "reye" in capsys.readouterr().out


def test_designcheck_and_hadamard(capsys):
    main(["designcheck", "--v", "22", "--k", "7", "--lam", "2"])
    assert json.loads(capsys.readouterr().out)["bcr"]["pass"] is False
    main(["hadamard", "--paley", "7", "--design"])
    assert json.loads(capsys.readouterr().out)["lambda"] == 1
    main(["hadamard", "--sylvester", "2", "--format", "csv"])
    assert capsys.readouterr().out.splitlines()[1] == "1,-1,1,-1"
    assert main(["hadamard"]) == 2


def test_census_planes(capsys):
    main(["census", "planes"])
    c = json.loads(capsys.readouterr().out)
    assert c["total"] == 35 and c["triangle_planes"] == 20


def test_big_integers_become_strings():
    assert json_safe({"a": 2 ** 60, "b": [1, 2 ** 53 + 1], "c": True}) == {
        "a": str(2 ** 60), "b": [1, str(2 ** 53 + 1)], "c": True}


def test_analyze_is_deterministic(capsys):
    outs = []
    for workers in ("1", "4"):
        main(["--workers", workers, "build", "desargues", "-o", "/dev/null"])
    for _ in range(2):
        from configlab.cli import analyze, dumps
        outs.append(dumps(analyze(fano())))
    assert outs[0] == outs[1]


def test_analyze_not_tactical(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"v": 3, "b": 2, "blocks": [[0, 1], [0]]}))
    main(["analyze", str(p)])
    r = json.loads(capsys.readouterr().out)
    assert r["tactical"] is False and r["error"]["error"] == "NotTactical"


@pytest.mark.parametrize("name", ["pg", "mukai", "cremona-richmond", "isotropic-anisotropic",
                                  "modular", "reye", "hesse-salmon", "complete"])
def test_every_builder_runs(name, capsys):
    assert main(["build", name]) == 0
    assert IncidenceStructure.from_json(capsys.readouterr().out).v > 0
