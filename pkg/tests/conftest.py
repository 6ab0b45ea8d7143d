"""Suite-wide configuration: the acceptance scoreboard.

test_acceptance.py registers one entry per criterion in RESULTS; the
terminal-summary hook prints them as a compact pass/fail table after the
normal pytest output.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> (passed: bool, detail: str)
RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        passed, detail = RESULTS[num]
        verdict = "PASS" if passed else "FAIL"
        line = "CRITERION %2d: %s" % (num, verdict)
        if detail:
            line += " (%s)" % detail
        terminalreporter.write_line(line)
