import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_results: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        _results[name] = _results.get(name, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_results):
        num, _, rest = name[len("test_criterion_"):].partition("_")
        verdict = "PASS" if _results[name] else "FAIL"
        terminalreporter.write_line(f"criterion {int(num):2d} {verdict}  {rest.replace('_', ' ')}")
