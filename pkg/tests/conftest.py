import re

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        _acceptance[report.nodeid] = report


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for nodeid, report in _acceptance.items():
        name = nodeid.split("::")[-1]
        m = re.match(r"test_ac(\d+)_(.*)", name)
        label = f"AC{m.group(1)} {m.group(2).replace('_', ' ')}" if m else name
        status = "PASS" if report.passed else "FAIL"
        terminalreporter.write_line(f"{status}  {label}  ({report.duration:.2f}s)")
