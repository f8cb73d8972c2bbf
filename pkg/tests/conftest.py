import sys


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in range(1, 12):
        line = module.RESULTS.get(number, f"[----] criterion {number:>2}: not run or did not finish")
        terminalreporter.write_line(line)
