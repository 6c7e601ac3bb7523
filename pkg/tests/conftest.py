"""Shared helpers for the test suite."""

import re
from fractions import Fraction

from nashblowup.parser import parse_polynomial


def P(text, ring):
    """Shorthand: parse a polynomial over the given variable names."""
    return parse_polynomial(text, tuple(ring))


def F(x):
    return Fraction(x)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, ()):
            nodeid = getattr(rep, "nodeid", "")
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)\w*", nodeid)
            if m and getattr(rep, "when", "call") == "call":
                verdict = "PASS" if outcome == "passed" else "FAIL"
                rows.append((int(m.group(1)), verdict, nodeid.split("::")[1]))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for num, verdict, name in sorted(rows):
            terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {name}")
