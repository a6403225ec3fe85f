import functools
import itertools

import pytest

from boolnl.bfcore import TruthTable, tt_from_anf
from boolnl.formats import parse_anf
from boolnl.rng import random_functions

EX3_ANF = "x1*x2+x1*x3+x2+1"
EX3_CLOSEST = {(1, 1, 1, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1)}
EX5_ANF = "x1*x3*x4*x5+x1*x2*x4+x1*x4*x5+x2*x3*x4+x2*x4*x5+x3*x4*x5+x4*x5"

SUITE_SEED = 0x5EED
SUITE_SIZE = 1000


def tt_of(bits: str) -> TruthTable:
    return TruthTable.from_bits([int(c) for c in bits])


def all_functions(n: int):
    size = 1 << n
    for value in range(1 << size):
        yield TruthTable.from_int(value, n)


@functools.lru_cache(maxsize=None)
def random_suite(n: int, count: int = SUITE_SIZE) -> tuple[TruthTable, ...]:
    return tuple(random_functions(n, count, SUITE_SEED + n))


@pytest.fixture
def ex3():
    return tt_from_anf(parse_anf(EX3_ANF, 3))


@pytest.fixture
def ex5():
    return tt_from_anf(parse_anf(EX5_ANF, 5))


# -- acceptance reporting ---------------------------------------------------

_criteria: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label, text = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria[label] = ("PASS" if report.passed else "FAIL", text)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.lstrip("C"))):
        status, text = _criteria[label]
        terminalreporter.write_line(f"[{status}] {label}: {text}")
