import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from mobtax import stream_from_pairs  # noqa: E402

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        status = "PASS" if rep.passed else "SKIP" if rep.skipped else "FAIL"
        details = "; ".join(f"{k}={v}" for k, v in item.user_properties)
        _CRITERIA.append((marker.args[0], marker.args[1], status, details))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, details in sorted(_CRITERIA, key=lambda c: int(c[0])):
        line = f"{status:4}  #{number:<2} {title}"
        if details:
            line += f"  [{details}]"
        terminalreporter.write_line(line)


WORKED_EXAMPLE = [
    ("a", "b", 1),
    ("a", "c", 2),
    ("b", "c", 3),
    ("a", "d", 4),
    ("d", "e", 5),
    ("b", "e", 6),
]


@pytest.fixture
def worked_stream():
    return stream_from_pairs(WORKED_EXAMPLE)


@pytest.fixture
def star_stream():
    """Hub ``h`` gains one leaf per time step."""
    return stream_from_pairs([("h", f"x{i}", i) for i in range(1, 11)])
