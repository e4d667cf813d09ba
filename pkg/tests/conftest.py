from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from lcdcodes import classify

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# the eight LCD [6,3] codes (I_3 | M_i), their weight enumerators and groups
M6 = [
    ["001", "001", "110"],
    ["001", "001", "011"],
    ["001", "110", "111"],
    ["000", "000", "000"],
    ["001", "001", "000"],
    ["001", "111", "000"],
    ["110", "000", "000"],
    ["001", "011", "000"],
]
W6 = [
    [1, 0, 3, 1, 0, 3, 0],
    [1, 0, 3, 3, 0, 1, 0],
    [1, 0, 1, 3, 2, 1, 0],
    [1, 3, 3, 1, 0, 0, 0],
    [1, 1, 3, 3, 0, 0, 0],
    [1, 1, 1, 1, 2, 2, 0],
    [1, 2, 1, 1, 2, 1, 0],
    [1, 1, 1, 3, 2, 0, 0],
]
AUT6 = [36, 12, 4, 36, 12, 12, 12, 4]

# binary [12,6,3] code with trivial group, ternary [8,4,3] code with |Aut| = 2
M12 = ["101011", "010110", "110100", "110001", "001101", "000011"]
M8 = ["2001", "2212", "1100", "1012"]


def standard_rows(k: int, a_rows: list[str]) -> list[str]:
    """Rows of (I_k | A) as digit strings."""
    return ["".join("1" if j == i else "0" for j in range(k)) + a for i, a in enumerate(a_rows)]


_CACHE: dict = {}


@pytest.fixture(scope="session")
def classified():
    """Memoized classify(q, n, k) shared by the whole session."""

    def get(q: int, n: int, k: int):
        return classify(q, n, k, cache=_CACHE)

    return get


# one line per acceptance criterion, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
