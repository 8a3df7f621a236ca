"""Shared fixtures and the acceptance-criteria reporter.

Acceptance tests record one line per criterion through the `criterion`
fixture; a terminal-summary hook repeats all recorded lines at the end of
the run so they are visible under default output capture.
"""

from __future__ import annotations

import pytest

from rayleigh_sums import SigmaTable, bessel_zeros, derive_sigma

_acceptance_lines: list[tuple[int, str]] = []


@pytest.fixture
def criterion():
    """Recorder for acceptance tests: criterion(num, description, ok, extra)."""

    def record(num: int, desc: str, ok: bool, extra: str = "") -> bool:
        tail = f" [{extra}]" if extra else ""
        line = f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {desc}{tail}"
        _acceptance_lines.append((num, line))
        print(line, flush=True)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_acceptance_lines):
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def table15() -> SigmaTable:
    t = SigmaTable()
    derive_sigma(t, 15)
    return t


@pytest.fixture(scope="session")
def zero_cache():
    """Memoized zero sets for the module tests (acceptance tests build their
    own so their runtime measurements stay self-contained)."""
    cache: dict[tuple[float, int], object] = {}

    def get(nu: float, count: int):
        key = (nu, count)
        if key not in cache:
            cache[key] = bessel_zeros(nu, count)
        return cache[key]

    return get
