import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_results: dict[str, list[bool]] = {}
_titles: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(key, title): acceptance criterion this test pins")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            key, title = mark.args
            _titles.setdefault(key, title)
            _results.setdefault(key, [])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if not mark:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results[mark.args[0]].append(report.outcome == "passed")


def _sort_key(key):
    num = "".join(ch for ch in key if ch.isdigit())
    return int(num or 0), key


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results, key=_sort_key):
        runs = _results[key]
        status = "PASS" if runs and all(runs) else ("NOT RUN" if not runs else "FAIL")
        terminalreporter.write_line(f"criterion {key:<3} {status:<7} {_titles[key]}")
