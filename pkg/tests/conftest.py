import os

import pytest

from hypothesis import HealthCheck, settings, strategies as st

from classical_pieri.partitions import Partition

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def partitions(draw, max_size=8, max_length=None):
    """A random partition of size <= max_size (and length <= max_length)."""
    size = draw(st.integers(0, max_size))
    parts = []
    remaining = size
    cap = size
    while remaining:
        if max_length is not None and len(parts) == max_length:
            break
        p = draw(st.integers(1, min(cap, remaining)))
        parts.append(p)
        remaining -= p
        cap = p
    return Partition(parts)


ACCEPTANCE_LINES = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_LINES] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_LINES, {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(lines):
        terminalreporter.write_line(lines[number])
