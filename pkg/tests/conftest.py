import os
import sys
import time

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> (verdict, description), filled by test_acceptance
ACCEPTANCE = {}
SESSION_START = time.time()
SUITE_BUDGET = 120


def pytest_sessionstart(session):
    global SESSION_START
    SESSION_START = time.time()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    elapsed = time.time() - SESSION_START
    if 10 in ACCEPTANCE and elapsed >= SUITE_BUDGET:
        ACCEPTANCE[10] = ("FAIL", f"suite took {elapsed:.0f} s")
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        verdict, text = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {verdict}  {text}")
