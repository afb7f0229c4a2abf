import pytest

from fuzzyprod.model import DEFAULT_PARAMS

_acceptance = {}


@pytest.fixture
def params():
    return DEFAULT_PARAMS


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            item.user_properties.append(("criterion", m.args[0]))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or report.failed:
        key = (props["criterion"], report.nodeid.split("::")[-1])
        if _acceptance.get(key) != "failed":
            _acceptance[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (criterion, name), outcome in sorted(_acceptance.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {criterion:>2}  {name}")
