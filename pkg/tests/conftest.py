import os
import sys
import tempfile

# searched base cycles go to a throwaway cache, never the user's
os.environ.setdefault("EQUICYCLE_CACHE_DIR", tempfile.mkdtemp(prefix="equicycle-test-"))
sys.path.insert(0, os.path.dirname(__file__))

# acceptance criteria append (number, title, passed, seconds, limit) here
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, seconds, limit in sorted(ACCEPTANCE_RESULTS):
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {mark}  {title}  ({seconds:.2f} s, limit {limit} s)")
