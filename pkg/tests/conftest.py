import sys
import time
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SUITE_LIMIT_SECONDS = 300.0
_START = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.REPORT):
        terminalreporter.write_line(module.REPORT[number])
    elapsed = time.perf_counter() - _START
    status = "PASS" if elapsed < SUITE_LIMIT_SECONDS else "FAIL"
    terminalreporter.write_line(
        f"{status}  suite wall time {elapsed:.1f} s (limit {SUITE_LIMIT_SECONDS:.0f} s)")
