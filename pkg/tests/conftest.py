import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

# exact arithmetic and sympy oracles are slow per example, never flaky
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call" and rep.passed:
        return
    number, title = marker.args
    failed = _ACCEPTANCE.get(number, (title, False))[1] or rep.failed
    _ACCEPTANCE[number] = (title, failed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, failed = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'FAIL' if failed else 'PASS'}  {title}")
