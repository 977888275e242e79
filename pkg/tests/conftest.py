import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_finish(session):
    for item in session.items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _criteria[item.nodeid] = [mark.args[0], mark.args[1], "NOT RUN", 0.0]


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_logreport(report):
    row = _criteria.get(report.nodeid)
    if row is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        row[2] = "PASS" if report.passed else "FAIL"
        row[3] = report.duration


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, secs in sorted(_criteria.values()):
        terminalreporter.write_line(f"{status:7} criterion {number:2}: {title} ({secs:.2f}s)")
