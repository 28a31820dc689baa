import csv
import pathlib
import sys

import pytest

HERE = pathlib.Path(__file__).parent
sys.path.insert(0, str(HERE))

DATA = HERE / "data"


def load_golden(k):
    with open(DATA / f"table{k}.tsv") as fh:
        return [{key: int(v) for key, v in row.items()} for row in csv.DictReader(fh, delimiter="\t")]


@pytest.fixture(scope="session")
def golden():
    return {k: load_golden(k) for k in (1, 2, 3, 4)}


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    return request.node.get_closest_marker("criterion").args[0]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and rep.when == "call":
        ACCEPTANCE[mark.args[0]] = "PASS" if rep.passed else "FAIL"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{ACCEPTANCE[name]}  {name}")
