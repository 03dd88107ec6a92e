import json

import pytest

from cpgraph.cli import main, parse_range


def test_parse_range():
    assert parse_range("3..7") == [3, 4, 5, 6, 7]
    assert parse_range("4") == [4]


def test_report(capsys):
    assert main(["report", "--n", "4", "--kind", "ag"]) == 0
    out = capsys.readouterr().out
    assert "chromatic" in out and " 6 " in out


def test_report_two_points_gamma(capsys):
    assert main(["report", "--n", "2", "--kind", "gamma"]) == 0
    assert "gamma" in capsys.readouterr().out


def test_report_invalid_space(capsys):
    assert main(["report", "--n", "30", "--kind", "ag"]) == 2


def test_bad_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["export", "--n", "3", "--format", "svg"])
    assert exc.value.code == 2


def test_color_verify_and_export(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["color", "--n", "5", "--verify", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "palette=10" in text and "certificate=(10,10)" in text
    dot = tmp_path / "g.dot"
    assert main(["export", "--n", "5", "--kind", "ag", "--format", "dot",
                 "--coloring", str(out), "--out", str(dot)]) == 0
    assert "fillcolor" in dot.read_text()


def test_color_chain_method(capsys):
    assert main(["color", "--n", "6", "--method", "chain", "--verify"]) == 0
    assert "palette=20" in capsys.readouterr().out


def test_verify_ranges(capsys):
    assert main(["verify", "--n", "2..2"]) == 0
    assert main(["verify", "--n", "3..3", "--kind", "wgamma", "-v"]) == 0
    assert "subgraph:ag<=wgamma" in capsys.readouterr().out


def test_verify_json(tmp_path):
    path = tmp_path / "r.json"
    assert main(["verify", "--n", "3..4", "--m", "2,3", "--json", str(path)]) == 0
    rows = json.loads(path.read_text())
    assert rows and all(r["passed"] for r in rows)


def test_export_json_stdout(capsys):
    assert main(["export", "--n", "2", "--kind", "ag", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["vertices"] == [1, 2] and data["edges"] == [[1, 2]]


def test_export_deterministic(capsys):
    main(["export", "--n", "4", "--kind", "wgamma", "--format", "dot"])
    a = capsys.readouterr().out
    main(["export", "--n", "4", "--kind", "wgamma", "--format", "dot"])
    assert capsys.readouterr().out == a


def test_iso_modes(capsys):
    assert main(["iso", "--n", "3", "--n2", "4"]) == 0
    assert main(["iso", "--n", "4", "--mode", "permute", "--seed", "5", "--trials", "5"]) == 0
    assert main(["iso", "--n", "3", "--mode", "roundtrip", "--m", "3", "--trials", "5"]) == 0


def test_config_file_sets_defaults(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"m": 3, "trials": 2}))
    assert main(["iso", "--n", "3", "--mode", "roundtrip", "--config", str(cfg)]) == 0
    assert "m=3: 2/2" in capsys.readouterr().out
    # an explicit flag wins over the file
    assert main(["iso", "--n", "3", "--mode", "roundtrip", "--config", str(cfg), "--m", "2"]) == 0
    assert "m=2" in capsys.readouterr().out


def test_missing_config_is_usage_error(tmp_path):
    assert main(["report", "--n", "3", "--config", str(tmp_path / "nope.json")]) == 2


def test_color_failure_exit_code(monkeypatch, capsys):
    from cpgraph import cli
    from cpgraph.errors import ColoringFailure
    from cpgraph.model import PointSet

    def stuck(n):
        raise ColoringFailure(1, PointSet.of(n, 1), [PointSet.of(n, 1, 2)])

    monkeypatch.setattr(cli, "level_color", stuck)
    assert main(["color", "--n", "4"]) == 3
    assert "level=1" in capsys.readouterr().err


def test_color_method_alias(capsys):
    assert main(["color", "--n", "4", "--method", "paper"]) == 0
    assert "palette=6" in capsys.readouterr().out
