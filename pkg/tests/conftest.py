from pathlib import Path

import pytest

from roughmatroid import SetFamily, Universe, make_relation, matroid_from_independents
from roughmatroid.formats import load_relation

DATA = Path(__file__).parent / "data"


def rel_file(name):
    return load_relation(DATA / f"{name}.json")


@pytest.fixture
def sec4():
    return rel_file("sec4")


@pytest.fixture
def ex4():
    return rel_file("ex4")


@pytest.fixture
def ex6():
    return rel_file("ex6_r1"), rel_file("ex6_r2")


@pytest.fixture
def ex7():
    return rel_file("ex7_r1"), rel_file("ex7_r2")


@pytest.fixture
def abc():
    return Universe(("a", "b", "c"))


@pytest.fixture
def ex1(abc):
    i1 = SetFamily.from_labels(abc, [[], "a", "b", "c", "ac", "bc"])
    i2 = SetFamily.from_labels(abc, [[], "a", "b", "c", "ab", "bc"])
    return matroid_from_independents(i1), matroid_from_independents(i2)


@pytest.fixture
def triangle(abc):
    return make_relation(abc, [(x, y) for x in "abc" for y in "abc"])


def fs(s):
    """frozenset of one-character labels: fs('abd') == {'a', 'b', 'd'}."""
    return frozenset(s)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL result for an acceptance criterion."""
    entry = {"name": request.node.name, "note": ""}
    yield entry
    ACCEPTANCE_LINES.append(entry)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and "criterion" in item.fixturenames:
        item.funcargs["criterion"]["passed"] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for e in ACCEPTANCE_LINES:
        status = "PASS" if e.get("passed") else "FAIL"
        terminalreporter.write_line(f"{status}  {e['name']}  {e['note']}")
