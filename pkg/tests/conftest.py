from __future__ import annotations

import math

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from treepack.geometry import is_general_position, points

HEXAGON = [(4, 0), (2, 3), (-2, 3), (-4, 0), (-2, -3), (2, -3)]
SEVEN = [(0, 0), (5, 1), (6, -1), (-4, 4), (-6, 3), (-1, -5), (1, -6)]
TRIANGLE = [(0, 0), (4, 0), (0, 3)]


def zero_dim_set(k: int):
    """3k + 1 points whose center is the origin: k points in each of three narrow cones."""
    pts = [(0, 0)]
    for c, base in enumerate((90, 210, 330)):
        for j in range(k):
            ang = math.radians(base - 15 + 30 * j / max(k - 1, 1))
            r = 1000 + 97 * j + 31 * c
            pts.append((round(r * math.cos(ang)), round(r * math.sin(ang))))
    return points(pts)


@pytest.fixture
def hexagon():
    return points(HEXAGON)


@pytest.fixture
def seven():
    return points(SEVEN)


@pytest.fixture
def triangle():
    return points(TRIANGLE)


coord = st.integers(min_value=-40, max_value=40)


@st.composite
def general_position_sets(draw, min_size=3, max_size=10):
    raw = draw(st.lists(st.tuples(coord, coord), min_size=min_size, max_size=max_size,
                        unique=True))
    pts = points(raw)
    assume(is_general_position(pts))
    return pts


ACCEPTANCE_LINES: list[str] = []


def report_criterion(name: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
