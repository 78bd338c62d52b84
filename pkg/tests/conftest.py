"""Fixtures plus the per-criterion summary printed after the run."""

from __future__ import annotations

import re

import pytest

from helpers import petersen_graph

# criterion number -> one summary line, filled in as the acceptance tests run
ACCEPTANCE_LINES: dict[int, str] = {}

_CRITERION = re.compile(r"test_criterion_(\d+)")


def record_criterion(number: int, text: str) -> None:
    """Called by a passing acceptance test to annotate its summary line."""
    ACCEPTANCE_LINES[number] = f"criterion {number:2d}: PASS  {text}"


@pytest.fixture(scope="session")
def warm_kernels():
    """Force JIT compilation before anything is timed."""
    from spectough import cycle, is_one_over_b_tough, toughness_exact

    toughness_exact(cycle(5))
    is_one_over_b_tough(cycle(5), 1)


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = _CRITERION.search(item.name)
    if m and rep.when == "call":
        k = int(m.group(1))
        if rep.passed:
            ACCEPTANCE_LINES.setdefault(k, f"criterion {k:2d}: PASS")
        elif rep.failed:
            ACCEPTANCE_LINES[k] = f"criterion {k:2d}: FAIL  ({item.name})"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
