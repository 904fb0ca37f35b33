import math

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from oriented.geometry import convex_hull

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

coord = st.floats(-100, 100, allow_nan=False, allow_infinity=False)
point_sets = st.lists(st.tuples(coord, coord), min_size=1, max_size=30)


def rigid(theta: float, s: float, tx: float, ty: float):
    c, sn = math.cos(theta), math.sin(theta)
    return lambda p: (s * (c * p[0] - sn * p[1]) + tx, s * (sn * p[0] + c * p[1]) + ty)


@pytest.fixture
def triangle():
    return convex_hull([(-1, 0), (1, 0), (0, 1)])


@pytest.fixture
def square():
    return convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def rectangle():
    return convex_hull([(0, 0), (2, 0), (2, 1), (0, 1)])


def regular_polygon(n: int, r: float = 1.0, phase: float = 0.0):
    return convex_hull([(r * math.cos(phase + 2 * math.pi * k / n),
                         r * math.sin(phase + 2 * math.pi * k / n)) for k in range(n)])
