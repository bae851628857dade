import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, ()):
            match = _CRITERION.search(report.nodeid)
            if match:
                number = int(match.group(1))
                verdict = "PASS" if outcome == "passed" else "FAIL"
                verdicts[number] = verdict
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for number in sorted(verdicts):
            terminalreporter.write_line(f"CRITERION {number}: {verdicts[number]}")
