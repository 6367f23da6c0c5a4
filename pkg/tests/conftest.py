from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from knotpairs.words import Word

_criteria: dict[int, list[bool]] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None or (report.when != "call" and report.passed):
        return
    _criteria.setdefault(marker, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep.criterion = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        ok = all(_criteria[number])
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}")


GENS = ("a", "b", "c")


def words(generators=GENS, max_size: int = 12):
    letter = st.tuples(st.sampled_from(generators), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_size).map(lambda ls: Word(tuple(ls)))


@pytest.fixture
def rng():
    return random.Random(20261016)
