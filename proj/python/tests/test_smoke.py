import json
import os

import pytest

import fusionkit

DATA = os.environ["FUSIONKIT_DATA_DIR"]


def path(name):
    return os.path.join(DATA, name)


def test_load_and_validate():
    bundle = fusionkit.load_bundle(path("ising_graded.json"))
    assert bundle.is_valid()
    assert bundle.name == "ising_graded"
    assert bundle.D.grading_order == 2
    assert all(c["pass"] for c in bundle.validate())


def test_parse_error():
    with pytest.raises(fusionkit.ParseError):
        fusionkit.parse_bundle("{ not json")
    with pytest.raises(fusionkit.ParseError):
        fusionkit.load_bundle(path("missing.json"))


def test_character_table_fibonacci():
    bundle = fusionkit.load_bundle(path("fibonacci.json"))
    table = fusionkit.character_table(bundle)
    assert len(table) == 2
    codegrees = {row["codegree"] for row in table}
    assert codegrees == {"3+E(5)^2+E(5)^3", "2-E(5)^2-E(5)^3"}
    assert all(row["exact"] for row in table)


def test_twisted_and_multiplicities_ising():
    bundle = fusionkit.load_bundle(path("ising_graded.json"))
    twisted = fusionkit.twisted_characters(bundle)
    assert len(twisted) == 1
    assert twisted[0]["lambda"] == "2"

    mult = fusionkit.multiplicities(bundle)
    assert mult["entries"] == [[1], [1]]

    assert all(c["pass"] for c in fusionkit.verify(bundle))

    st = fusionkit.crossed_s(bundle)
    assert st["entries"][0] == ["E(8)-E(8)^3", "E(8)-E(8)^3"]


def test_round_trip():
    bundle = fusionkit.load_bundle(path("rep_s3.json"))
    again = fusionkit.parse_bundle(bundle.to_json())
    assert again.is_valid()
    assert json.loads(again.to_json())["name"] == "rep_s3"


def test_cli_entry_point():
    code, out, err = fusionkit.run_cli(["report", path("vec_z2.json")])
    assert code == 0
    assert "PASS" in out and "FAIL" not in out
    code, _, err = fusionkit.run_cli(["validate", "missing.json"])
    assert code == 2
    assert err
