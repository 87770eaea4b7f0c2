import json

import pytest

from roughmatroid import InvalidCircuitFamily, InvalidIndependenceFamily
from roughmatroid.formats import (
    FormatError,
    load_matroid,
    load_relation,
    matroid_from_dict,
    matroid_to_dict,
    relation_from_dict,
    relation_to_dict,
)

from .conftest import DATA


def write(tmp_path, obj, name="x.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return p


def test_load_example4():
    rel = load_relation(DATA / "ex4.json")
    assert len(rel) == 4 and rel.universe.elements == ("a", "b", "c")


def test_empty_relation_file(tmp_path):
    rel = load_relation(write(tmp_path, {"universe": ["a"], "pairs": []}))
    assert len(rel) == 0


def test_duplicate_pairs_tolerated(tmp_path):
    rel = load_relation(write(tmp_path, {"universe": ["a", "b"], "pairs": [["a", "b"], ["a", "b"]]}))
    assert len(rel) == 1


def test_relation_round_trip(sec4):
    assert relation_from_dict(relation_to_dict(sec4)) == sec4


@pytest.mark.parametrize(
    "content, fragment",
    [
        ("{not json", "line 1"),
        ("[]", "top level"),
        ({"pairs": []}, "'universe'"),
        ({"universe": ["a"], "pairs": [["a"]]}, "pairs[0]"),
        ({"universe": ["a"], "pairs": [["a", "z"]]}, "unknown label 'z'"),
        ({"universe": ["a", "a"], "pairs": []}, "distinct"),
        ({"universe": ["a"]}, "'pairs'"),
    ],
)
def test_relation_file_errors(tmp_path, content, fragment):
    with pytest.raises(FormatError) as exc:
        load_relation(write(tmp_path, content))
    assert fragment in str(exc.value)


def test_missing_file(tmp_path):
    with pytest.raises(FormatError):
        load_relation(tmp_path / "nope.json")


def test_matroid_files():
    m = load_matroid(DATA / "ex1_i1.json")
    assert m.kind == "explicit" and len(m.independents) == 6
    with pytest.raises(InvalidCircuitFamily) as exc:
        load_matroid(DATA / "bad_circuits.json")
    assert "C3" in str(exc.value)


def test_matroid_dict_round_trip(ex1):
    for m in ex1:
        assert matroid_from_dict(matroid_to_dict(m)) == m


def test_matroid_invalid_independents():
    with pytest.raises(InvalidIndependenceFamily) as exc:
        matroid_from_dict({"universe": ["a", "b", "c"], "independents": [[], ["a"], ["b"], ["c"], ["b", "c"]]})
    assert "I3" in str(exc.value)


def test_matroid_needs_exactly_one_kind():
    with pytest.raises(FormatError):
        matroid_from_dict({"universe": ["a"], "circuits": [], "independents": [[]]})
    with pytest.raises(FormatError):
        matroid_from_dict({"universe": ["a"]})
