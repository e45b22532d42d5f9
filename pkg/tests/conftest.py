import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

import time

SUITE_LIMIT = 300.0
_start = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _start
    reporter = session.config.pluginmanager.get_plugin("terminalreporter")
    status = "PASS" if elapsed < SUITE_LIMIT else "FAIL"
    if reporter is not None:
        reporter.write_line(f"[acceptance] suite wall clock {status}: {elapsed:.1f} s (limit {SUITE_LIMIT:.0f} s)")
    if elapsed >= SUITE_LIMIT and session.exitstatus == 0:
        session.exitstatus = 1
