import json
from pathlib import Path

import pytest

from convex_census.cli import maxsearch, run

DATA = Path(__file__).parent / "data"
TRI17 = str(DATA / "tri17.json")


def _json_out(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out


def test_count_golden(capsys):
    code, out = _json_out(capsys, ["count", "--input", TRI17])
    assert code == 0
    # pinned from the DP, confirmed by the subset oracle
    assert json.loads(out) == {"count": "750"}


def test_count_by_length(capsys):
    code, out = _json_out(capsys, ["count", "-i", TRI17, "--by-length"])
    doc = json.loads(out)
    assert sum(int(v) for v in doc["by_length"].values()) == 750


def test_paths_and_oracle_agree(capsys):
    _, out = _json_out(capsys, ["paths", "-i", TRI17, "--from", "16", "--to", "0"])
    assert json.loads(out)["count"] == "677"
    _, out = _json_out(capsys, ["oracle", "-i", TRI17, "--from", "16", "--to", "0"])
    assert json.loads(out)["count"] == "677"
    _, out = _json_out(capsys, ["oracle", "-i", TRI17])
    assert json.loads(out)["count"] == "750"


def test_enumerate_ndjson(capsys):
    code, out = _json_out(capsys, ["enumerate", "-i", TRI17])
    lines = out.splitlines()
    assert code == 0 and len(lines) == 750
    assert all(isinstance(json.loads(line), list) for line in lines)


def test_tables(capsys):
    _, out = _json_out(capsys, ["tables", "--name", "P", "--max", "18"])
    assert json.loads(out) == [str(v) for v in
                               (1, 2, 3, 5, 7, 11, 16, 26, 36, 56, 81, 131, 183, 287, 417, 677, 937)]
    _, out = _json_out(capsys, ["lambda", "--max", "4"])
    assert json.loads(out) == ["1", "2", "5", "26", "677"]
    _, out = _json_out(capsys, ["argmax-split", "--n", "7"])
    assert json.loads(out) == [[3, 5]]


def test_certify_all(capsys):
    code, out = _json_out(capsys, ["certify", "--all"])
    verdicts = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert len(verdicts) == 6 and all(v["status"] == "PROVED" for v in verdicts)


def test_validate_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": [[0, 0], [4, 4], [0, 4], [4, 0]],
                               "edges": [[0, 1], [2, 3]]}))
    code, out = _json_out(capsys, ["validate", "-i", str(bad)])
    assert code == 1 and len(json.loads(out)["crossing_pairs"]) == 1
    assert run(["validate", "-i", TRI17]) == 0


def test_errors_exit_nonzero(tmp_path, caplog):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": [[0, 0], [1, 0], [0, 1]], "edges": [[0, 7]]}))
    assert run(["count", "-i", str(bad)]) == 1
    assert "edges[0]" in caplog.text
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["count", "--bogus"])
    assert exc.value.code == 2


def test_generators_and_convexify(tmp_path, capsys):
    out_file = tmp_path / "t.json"
    assert run(["gen-concat", "--k", "1", "--m", "2", "-o", str(out_file)]) == 0
    code, out = _json_out(capsys, ["convexify", "-i", str(out_file), "--face", "0"])
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == 5 and "map" in doc


def test_output_is_deterministic(capsys):
    _, a = _json_out(capsys, ["enumerate", "-i", TRI17])
    _, b = _json_out(capsys, ["enumerate", "-i", TRI17])
    assert a == b


@pytest.mark.parametrize("n, best", [(3, 1), (4, 3), (5, 6), (6, 11)])
def test_maxsearch_small(n, best):
    assert maxsearch(n)[0] == best


def test_maxsearch_range():
    with pytest.raises(ValueError):
        maxsearch(13)
