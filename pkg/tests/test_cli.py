import json

import pytest

from qpart.cli import SCHEMA, decode_label, encode_label, run
from qpart.codes import full_code, mrd_field_embedding, zero_code
from qpart.kraw import KINDS, all_labels


def call(*args):
    import io
    out, err = io.StringIO(), io.StringIO()
    code = run(list(args), out, err)
    return code, out.getvalue(), err.getvalue()


def test_rankdist_text():
    code, out, _ = call("ferrers", "rankdist", "--board", "1,2", "--r", "1", "--format", "text")
    assert code == 0 and out == "2q^2 - q - 1\n"
    code, out, _ = call("ferrers", "rankdist", "--board", "1,2", "--r", "1")
    doc = json.loads(out)
    assert doc["schema"] == SCHEMA
    assert doc["polynomials"] == [{"r": 1, "coefficients": {"2": 2, "1": -1, "0": -1}, "text": "2q^2 - q - 1"}]


def test_kraw_rank_table():
    code, out, _ = call("kraw", "--partition", "rank", "--q", "2", "--n", "2", "--m", "2")
    doc = json.loads(out)
    assert code == 0
    assert doc["table"] == [[1, 1, 1], [9, 1, -3], [6, -2, 2]]
    code, out, _ = call("kraw", "--partition", "rank", "--q", "2", "--n", "2", "--m", "2", "--format", "csv")
    assert out.splitlines()[:2] == ["row,0,1,2", "0,1,1,1"]


def test_code_analyze_zero_code(tmp_path, F2):
    path = tmp_path / "c.code"
    path.write_text(zero_code(F2, 2, 3).to_text())
    code, out, _ = call("code", "analyze", "--file", str(path), "--dist", "rowspace")
    doc = json.loads(out)
    assert code == 0 and doc["distribution"] == [[[], 1]]


def test_code_commands(tmp_path, F2):
    path = tmp_path / "mrd.code"
    path.write_text(mrd_field_embedding(F2, 2, 3).to_text())
    code, out, _ = call("code", "analyze", "--file", str(path))
    doc = json.loads(out)
    assert doc["mrd"] and doc["min_distance"] == 2 and doc["k"] == 3
    code, out, _ = call("code", "dual", "--file", str(path), "--format", "text")
    assert code == 0 and out.splitlines()[0] == "3 2 2 3"
    code, out, _ = call("code", "extremal", "--file", str(path), "--subspace", "1,0")
    assert json.loads(out)["extremal"] is True
    code, out, _ = call("code", "extremal", "--file", str(path), "--pivots", "2")
    assert json.loads(out)["extremal"] is True
    code, _, err = call("code", "extremal", "--file", str(path))
    assert code == 2 and "--subspace" in err


def test_macwilliams_command(tmp_path, F2):
    path = tmp_path / "c.code"
    path.write_text(full_code(F2, 2, 2).to_text())
    code, out, _ = call("macwilliams", "--file", str(path), "--partition", "pivot")
    doc = json.loads(out)
    assert code == 0 and doc["agrees"] and doc["transformed"] == [[[], 1]]


def test_dualpartition_command():
    code, out, _ = call("dualpartition", "--partition", "pivot", "--q", "2", "--n", "2", "--m", "2")
    doc = json.loads(out)
    assert doc["dual_is"] == ["rpivot"] and doc["reflexive"] and not doc["self_dual"]


def test_preserver_commands():
    code, out, _ = call("preservers", "classify", "--kind", "pivot", "--q", "2", "--n", "2", "--m", "2")
    doc = json.loads(out)
    assert (doc["preservers"], doc["equal"]) == (12, True)
    code, out, _ = call("preservers", "extend", "--example", "notext1")
    doc = json.loads(out)
    assert doc["extension"] is None and doc["candidates"] == 1008


def test_stirling_and_rook():
    code, out, _ = call("ferrers", "stirling", "--m", "4", "--r", "2", "--format", "text")
    assert out == "q^3 + 3q^2 + 3q\n"
    code, out, _ = call("ferrers", "rook", "--board", "1,2", "--format", "csv")
    assert out.splitlines()[0] == "r,exponent,coefficient"


def test_exit_codes(tmp_path):
    assert call("kraw", "--partition", "rank", "--q", "6", "--n", "2", "--m", "2")[0] == 2
    code, _, err = call("ferrers", "rankdist", "--board", "2,1")
    assert code == 2 and "--board" in err
    assert call("code", "analyze", "--file", str(tmp_path / "missing"))[0] == 2
    assert call("preservers", "classify", "--kind", "rank", "--q", "2", "--n", "3", "--m", "3")[0] == 3
    assert call("dualpartition", "--partition", "rank", "--q", "5", "--n", "2", "--m", "3", "--budget", "10")[0] == 3
    with pytest.raises(SystemExit):
        raise SystemExit(call("nonsense")[0])


def test_usage_error_names_flag():
    code, _, err = call("kraw", "--partition", "rank", "--q", "2", "--n", "0", "--m", "2")
    assert code == 2 and "--n" in err


@pytest.mark.parametrize("kind", KINDS)
def test_label_round_trip(F3, kind):
    for lab in all_labels(kind, F3, 2, 3):
        assert decode_label(json.loads(json.dumps(encode_label(lab))), kind, 3, 3) == lab


def test_kraw_json_labels_round_trip(F2):
    code, out, _ = call("kraw", "--partition", "rowspace", "--q", "2", "--n", "2", "--m", "2")
    doc = json.loads(out)
    rows = [decode_label(v, "rowspace", 2, 2) for v in doc["rows"]]
    assert rows == all_labels("rowspace", F2, 2, 2)
