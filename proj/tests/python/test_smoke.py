import json
import os
from pathlib import Path

import pytest

import dctpy

GALLERY = Path(os.environ.get("DCT_GALLERY_DIR", Path(__file__).resolve().parents[2] / "gallery"))


def read(name: str) -> str:
    return (GALLERY / name).read_text()


@pytest.fixture(scope="module")
def semidirect():
    return dctpy.parse(read("semidirect-z2-z3.dct"))


def test_parse_and_validate(semidirect):
    assert "Z3" in semidirect.monoids
    assert "OmegaZ2" in semidirect.categories
    assert "B2OmegaZ3" in semidirect.twocats
    assert dctpy.validate(semidirect) == []


def test_roundtrip(semidirect):
    text = dctpy.serialize(semidirect)
    assert dctpy.parse(text) == semidirect
    assert dctpy.serialize(dctpy.parse(text)) == text


def test_pi2_fiber(semidirect):
    fiber = dctpy.pi2_fiber(semidirect, "B2OmegaZ3", "pt")
    assert sorted(fiber["elements"]) == ["1", "2", "id_id_pt"]
    assert fiber["unit"] == "id_id_pt"


def test_indexings(semidirect):
    assert dctpy.count_indexings(semidirect, "D") == 2
    tables = dctpy.enumerate_indexings(semidirect, "D")
    actions = {frozenset(t["action"]["g"].items()) for t in tables}
    assert frozenset({"id_id_pt": "id_id_pt", "1": "2", "2": "1"}.items()) in actions


def test_no_indexing_instance():
    ws = dctpy.parse(read("no-indexing.dct"))
    assert dctpy.count_indexings(ws, "DNoIdx") == 0
    assert dctpy.count_indexings(ws, "DNoIdx", variance="op") == 0


def test_build_axioms_length(semidirect):
    model = dctpy.build_model(semidirect, "Neg")
    assert dctpy.check_axioms(model) == []
    assert dctpy.model_length(model) == 1
    parsed = json.loads(model)
    assert len(parsed["squares"]) == 6
    report = dctpy.marking_report(model)
    assert report["length"] == 1
    assert report["globularly_generated"] is True


def test_min_factorization():
    ws = dctpy.parse(read("free-length4.dct"))
    assert dctpy.min_factorization(ws, "DChain", ["m0", "U_al", "m1", "U_be"], budget=6) == 4
    assert dctpy.min_factorization(ws, "DChain", ["U_al"], budget=6) == 1
    with pytest.raises(dctpy.DctError):
        dctpy.min_factorization(ws, "DChain", ["m0", "U_al", "m1", "U_be"], budget=2)


def test_run_example():
    for name in dctpy.gallery_names():
        result = dctpy.run_example(name)
        assert result["ok"] is True, result
    with pytest.raises(dctpy.DctError):
        dctpy.run_example("nope")


def test_errors_carry_codes(semidirect):
    with pytest.raises(dctpy.DctError):
        dctpy.pi2_fiber(semidirect, "missing", "pt")
    with pytest.raises(dctpy.DctError):
        dctpy.parse("monoid M {")
