import time
from contextlib import contextmanager

import pytest


def pytest_configure(config):
    config._acceptance = []


@pytest.fixture
def criterion(request):
    log = request.config._acceptance

    @contextmanager
    def check(label, limit):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f"{label}: took {elapsed:.1f}s, limit {limit}s"
            ok = True
        finally:
            log.append((label, ok, time.perf_counter() - start, limit))

    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = getattr(config, "_acceptance", [])
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, elapsed, limit in log:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  ({elapsed:.2f}s / {limit:g}s)")
