import re

_results: dict = {}
_PATTERN = re.compile(r"test_acceptance\.py::test_c(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.failed:
        prev = _results.get(key, True)
        _results[key] = prev and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), ok in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {num:2d} {name}: {'PASS' if ok else 'FAIL'}")
