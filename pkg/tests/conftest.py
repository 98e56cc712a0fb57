from fractions import Fraction

import pytest
from hypothesis import strategies as st

from lawcos.exact_geom import Point, signed_area

# the four desk triangles, as (A, B, C)
T1 = (Point(0, 1), Point(0, 0), Point(1, 0))
T2 = (Point(1, 3), Point(0, 0), Point(5, 0))
T3 = (Point(1, 0), Point(Fraction(1, 2), 2), Point(0, 0))
T4 = (Point(2, 1), Point(0, 0), Point(1, 0))
DESK = {"T1": T1, "T2": T2, "T3": T3, "T4": T4}


@pytest.fixture(params=sorted(DESK))
def desk(request):
    return request.param, DESK[request.param]


coords = st.integers(min_value=-100, max_value=100)
points = st.builds(Point, coords, coords)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
rational_points = st.builds(Point, rationals, rationals)


def _nondegenerate(tri):
    return signed_area(*tri) != 0


triangles = st.tuples(points, points, points).filter(_nondegenerate)
rational_triangles = st.tuples(rational_points, rational_points, rational_points).filter(_nondegenerate)


# filled by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
