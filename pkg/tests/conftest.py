"""Shared test configuration: the acceptance summary block.

Every test in test_acceptance.py is one acceptance criterion; after the run
a PASS/FAIL line per criterion is appended to the terminal summary, labeled
by the test's first docstring line.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

_ACCEPTANCE: dict[str, list[str]] = {}


def pytest_collection_modifyitems(config, items):
    for item in items:
        if item.module.__name__ == "test_acceptance":
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _ACCEPTANCE[item.nodeid] = [doc, "not run"]


def pytest_runtest_logreport(report):
    entry = _ACCEPTANCE.get(report.nodeid)
    if entry is None:
        return
    if report.when == "call":
        entry[1] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        entry[1] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    tags = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP", "not run": "----"}
    for label, outcome in _ACCEPTANCE.values():
        terminalreporter.write_line(f"[{tags.get(outcome, outcome.upper())}] {label}")
