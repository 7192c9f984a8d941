import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): an acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    mark = _criteria.get(report.nodeid)
    if mark is not None:
        mark["outcome"] = report.outcome


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criteria[item.nodeid] = {"number": m.args[0], "text": m.args[1], "outcome": None}


def pytest_terminal_summary(terminalreporter):
    ran = [c for c in _criteria.values() if c["outcome"] is not None]
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(ran, key=lambda c: c["number"]):
        status = "PASS" if c["outcome"] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {c['number']}: {status}  {c['text']}")
