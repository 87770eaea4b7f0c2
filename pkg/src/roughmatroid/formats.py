"""JSON file formats for relations and matroids.

Relation::

    {"universe": ["a", "b"], "pairs": [["a", "b"], ["b", "a"]]}

Matroid, by circuits or by independent sets::

    {"universe": [...], "circuits": [["a", "b"], ...]}
    {"universe": [...], "independents": [[], ["a"], ...]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import RoughMatroidError
from .matroid import (
    Matroid,
    SetFamily,
    check_circuit_axioms,
    check_independence_axioms,
    matroid_from_circuits,
    matroid_from_independents,
)
from .relation import Relation, Universe, make_relation


class FormatError(RoughMatroidError, ValueError):
    pass


def relation_to_dict(rel: Relation) -> dict:
    return {
        "universe": list(rel.universe.elements),
        "pairs": [list(p) for p in rel.sorted_pairs()],
    }


def family_to_list(fam: SetFamily) -> list:
    return [list(s) for s in fam.as_labels()]


def matroid_to_dict(m: Matroid) -> dict:
    if m.circuits is not None:
        return {"universe": list(m.universe.elements), "circuits": family_to_list(m.circuits)}
    return {"universe": list(m.universe.elements), "independents": family_to_list(m.independents)}


def _read_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise FormatError(f"{path}: top level must be an object")
    return data


def _universe(data: dict, where: str) -> Universe:
    labels = data.get("universe")
    if not isinstance(labels, list):
        raise FormatError(f"{where}: field 'universe' must be a list of labels")
    try:
        return Universe(tuple(labels))
    except ValueError as exc:
        raise FormatError(f"{where}: field 'universe': {exc}") from None


def _label_lists(value, field: str, where: str, size=None) -> list:
    if not isinstance(value, list):
        raise FormatError(f"{where}: field '{field}' must be a list")
    for k, item in enumerate(value):
        if not isinstance(item, list) or (size is not None and len(item) != size):
            shape = f"a list of {size} labels" if size else "a list of labels"
            raise FormatError(f"{where}: {field}[{k}] must be {shape}")
    return value


def relation_from_dict(data: dict, where: str = "<relation>") -> Relation:
    u = _universe(data, where)
    pairs = _label_lists(data.get("pairs"), "pairs", where, size=2)
    try:
        return make_relation(u, [tuple(p) for p in pairs])
    except KeyError as exc:
        raise FormatError(f"{where}: field 'pairs': {exc}") from None


def raw_family_from_dict(data: dict, where: str = "<matroid>") -> tuple:
    """``(kind, SetFamily)`` without any axiom check; kind is 'circuits' or 'independents'."""
    u = _universe(data, where)
    kinds = [k for k in ("circuits", "independents") if k in data]
    if len(kinds) != 1:
        raise FormatError(f"{where}: exactly one of 'circuits' or 'independents' is required")
    kind = kinds[0]
    sets = _label_lists(data[kind], kind, where)
    try:
        return kind, SetFamily.from_labels(u, sets)
    except KeyError as exc:
        raise FormatError(f"{where}: field '{kind}': {exc}") from None


def matroid_from_dict(data: dict, where: str = "<matroid>") -> Matroid:
    kind, fam = raw_family_from_dict(data, where)
    if kind == "circuits":
        return matroid_from_circuits(fam.universe, fam)
    return matroid_from_independents(fam)


def check_family(kind: str, fam: SetFamily):
    if kind == "circuits":
        return check_circuit_axioms(fam)
    return check_independence_axioms(fam)


def load_relation(path) -> Relation:
    return relation_from_dict(_read_json(path), str(path))


def load_raw_family(path) -> tuple:
    return raw_family_from_dict(_read_json(path), str(path))


def load_matroid(path) -> Matroid:
    """Load a matroid file; the matching axiom check runs and failures raise InvalidFamily."""
    return matroid_from_dict(_read_json(path), str(path))
