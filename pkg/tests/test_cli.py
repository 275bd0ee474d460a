# test_cli.py
import json

from cli import EXIT_OK, EXIT_USAGE, main


def test_unknown_suite_is_a_usage_error():
    assert main(["verify", "nope"]) == EXIT_USAGE


def test_invalid_sweep_options():
    assert main(["atlas", "--max-rank", "0"]) == EXIT_USAGE
    assert main(["atlas", "--types", "X9", "--max-rank", "1"]) == EXIT_USAGE
    assert main(["classify", "--jobs", "0", "--max-rank", "1"]) == EXIT_USAGE


def test_atlas_rank_one(tmp_path):
    out = tmp_path / "atlas.json"
    dot = tmp_path / "atlas.dot"
    assert main(["atlas", "--max-rank", "1", "--json", str(out), "--dot", str(dot)]) == EXIT_OK
    records = json.loads(out.read_text())
    assert [r["grading"]["name"] for r in records] == ["A1^(1)"]
    assert records[0]["iab_size"] == 3
    assert dot.read_text().strip()


def test_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "hermitian-ranks", "--max-rank", "3", "--json", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["ok"]
    assert "hermitian-ranks" in capsys.readouterr().out


def test_hermitian_single_pair(tmp_path):
    out = tmp_path / "c3.json"
    assert main(["hermitian", "--type", "C3", "--node", "3", "--json", str(out)]) == EXIT_OK
    rows = json.loads(out.read_text())
    assert rows[0]["rank"] == 3
    assert rows[0]["tube_type"]


def test_hermitian_type_needs_node():
    assert main(["hermitian", "--type", "A3"]) == EXIT_USAGE


def test_orbits_command(capsys):
    assert main(["orbits", "A3", "1,0,1,0", "--subalgebra", "0"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["subalgebras"][0]["id"] == "0"
    assert main(["orbits", "A3", "1,0,1,0", "--subalgebra", "999"]) == EXIT_USAGE


def test_orbits_rejects_bad_marks():
    assert main(["orbits", "A3", "2,0,2,0"]) == EXIT_USAGE


def test_dot_command(capsys):
    assert main(["dot", "B2"]) == EXIT_OK
    assert "1->2" in capsys.readouterr().out
    assert main(["dot", "D4", "--twist", "1", "--marks", "0,0,1,0,0"]) == EXIT_OK
    assert "xlabel" in capsys.readouterr().out
    assert main(["dot", "Q7"]) == EXIT_USAGE
