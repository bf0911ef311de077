"""Pytest wiring: print one visible line per acceptance criterion."""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            match = _CRITERION.search(nodeid)
            if not match:
                continue
            num = int(match.group(1))
            title = match.group(2).replace("_", " ")
            status = "PASS" if outcome == "passed" else "FAIL"
            rows.append((num, f"criterion {num:02d} {title}: {status}"))
    if rows:
        terminalreporter.write_sep("=", "acceptance criteria")
        for _, line in sorted(rows):
            terminalreporter.write_line(line)
