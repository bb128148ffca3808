from .helpers import ACCEPTANCE_REPORT


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_REPORT:
        terminalreporter.write_line(line)
