import re

_CRITERIA: dict[str, str] = {}
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)$")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    key = f"criterion {int(m.group(1)):2d} ({m.group(2)})"
    if report.when == "call" or report.failed:
        _CRITERIA[key] = "PASS" if report.passed and _CRITERIA.get(key) != "FAIL" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        terminalreporter.write_line(f"{_CRITERIA[key]}  {key}")
