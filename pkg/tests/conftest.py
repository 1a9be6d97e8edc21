import random

import pytest
from hypothesis import strategies as st

from finitary.field import GF, QQ
from finitary.poset import Poset, antichain, chain, diamond, disjoint_union, point
from finitary.series import Series

SMALL_POSETS = {
    "point": point(),
    "chain2": chain(2),
    "chain3": chain(3),
    "antichain2": antichain(2),
    "diamond": diamond(),
    "vee": Poset("abc", [("a", "b"), ("a", "c")]),
    "chain2+point": disjoint_union(Poset("ab", [("a", "b")]), point("c")),
    "N": Poset("abcd", [("a", "c"), ("b", "c"), ("b", "d")]),
}


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def chain2():
    return Poset("ab", [("a", "b")])


@pytest.fixture
def chain3():
    return Poset("abc", [("a", "b"), ("b", "c")])


@pytest.fixture
def dia():
    return diamond()


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def series_on(draw, poset, field=QQ, invertible=False):
    entries = {}
    for s in poset.segments():
        if invertible and s.lo == s.hi:
            v = draw(rationals.filter(bool)) if field == QQ else draw(st.integers(1, field.p - 1))
        else:
            v = draw(rationals) if field == QQ else draw(st.integers(0, field.p - 1))
        entries[tuple(s)] = v
    return Series(poset, entries, field)


posets = st.sampled_from(sorted(SMALL_POSETS)).map(SMALL_POSETS.get)
fields = st.sampled_from([QQ, GF(2), GF(7)])


# -- acceptance report ---------------------------------------------------

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    key = (n, title)
    failed = rep.failed
    if rep.when == "call" or failed:
        prev = _acceptance.get(key, True)
        _acceptance[key] = prev and not failed


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (n, title), ok in sorted(_acceptance.items()):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
