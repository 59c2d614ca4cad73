import os
import sys

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")

_criteria = {}


@pytest.fixture
def data_dir():
    return DATA


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or "::test_criterion_" not in report.nodeid:
        return
    num = int(report.nodeid.split("::test_criterion_")[1].split("_")[0])
    if report.when == "call" or report.failed:
        prev = _criteria.get(num, True)
        _criteria[num] = prev and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if _criteria[num] else 'FAIL'}")
    sys.stdout.flush()
