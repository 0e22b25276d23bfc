import json

import pytest

from cubichecke.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_semisimple(capsys):
    code, out = run(capsys, "classify", "--lambda", "2,3,5")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["semisimple"] is True


def test_classify_ideal_exit_code(capsys):
    code, out = run(capsys, "classify", "--ideal", "l1+theta*l2")
    assert code == 10
    payload = json.loads(out)
    assert payload["result"]["vanishing"] == ["l1+theta*l2"]


def test_classify_invalid(capsys):
    code = main(["classify", "--lambda", "1,1,2"])
    assert code == 2


def test_rep_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "rep.json"
    code = main(["rep", "build", "--module", "l1^2*l2", "--out", str(out_file)])
    assert code == 0
    code, out = run(capsys, "rep", "verify", "--out", str(out_file))
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["all_passed"] is True


def test_rep_verify_corrupted(tmp_path, capsys):
    out_file = tmp_path / "rep.json"
    main(["rep", "build", "--module", "l1*l2", "--out", str(out_file)])
    data = json.loads(out_file.read_text())
    entry = data["result"]["matrices"]["2"]["entries"][0][0]
    entry["num"] = [[[0, 0, 0], ["5", "0", "0", "0"]]]
    bad = tmp_path / "corrupted.json"
    bad.write_text(json.dumps(data))
    code, out = run(capsys, "rep", "verify", "--out", str(bad))
    assert code == 20
    payload = json.loads(out)
    failed = [c for c in payload["result"]["checks"] if not c[1]]
    assert failed and failed[0][2] is not None


def test_structure_census_checksum(capsys):
    code, out = run(capsys, "structure", "census")
    assert code == 0
    payload = json.loads(out)
    census = payload["result"]["censuses"][0]
    assert census["sum_dim_sq"] == 648
    assert len(census["entries"]) == 24


def test_structure_blocks(capsys):
    code, out = run(capsys, "structure", "blocks", "--ideal", "l1^2-theta*l2*l3")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["classes"] == [
        ["l1", "l1^4*l2^2*l3^2", "l1^3*l2^3*l3^3:theta", "l2*l3"]
    ]


def test_structure_series(capsys):
    code, out = run(
        capsys, "structure", "series", "--module", "l1^3*l2^2*l3", "--ideal", "l2+l3"
    )
    assert code == 0
    payload = json.loads(out)
    dims = sorted(f["dim"] for f in payload["result"]["factors"])
    assert dims == [2, 4]


def test_structure_census_pair(capsys):
    code, out = run(
        capsys,
        "structure", "census", "--ideal", "l1+theta*l2", "--ideal", "l2+theta*l3",
    )
    assert code == 0
    payload = json.loads(out)
    names = {e["label"] for e in payload["result"]["censuses"][0]["entries"]}
    assert {"l1^2*l3", "l1*l2^2", "l2*l3^2"} <= names


def test_structure_census_incompatible(capsys):
    code = main(
        ["structure", "census", "--ideal", "l1^2-theta*l2*l3", "--ideal", "l2^2-theta*l1*l3"]
    )
    assert code == 2


def test_catalog_dump_deterministic(capsys):
    code, out1 = run(capsys, "catalog")
    assert code == 0
    _code, out2 = run(capsys, "catalog")
    assert out1 == out2
    payload = json.loads(out1)
    assert len(payload["result"]["level4"]) == 24
    assert len(payload["result"]["ideals"]) == 33


def test_markdown_format(capsys):
    code, out = run(capsys, "classify", "--lambda", "2,3,5", "--format", "markdown")
    assert code == 0
    assert out.startswith("| input |")
