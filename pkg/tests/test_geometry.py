import math
import random

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import point_sets, regular_polygon, rigid
from oriented.errors import DegeneratePoint, EmptyInput, InvalidInput
from oriented.geometry import (Hull, Point, convex_hull, edge_frames, farthest_vertex,
                               min_enclosing_circle, signed_edge_distances)
from oriented.oracle import brute_force_circle, random_hull


def test_interior_point_removed():
    h = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1), (0.5, 0.5)])
    assert set(h.vertices) == {(0, 0), (1, 0), (1, 1), (0, 1)}
    assert h.n == 4


def test_triangle_kept_ccw():
    h = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert h.vertices == ((0, 0), (1, 0), (0, 1))


def test_collinear_input_gives_two_vertices():
    assert convex_hull([(0, 0), (1, 0), (2, 0)]).vertices == ((0, 0), (2, 0))


def test_collinear_boundary_points_dropped():
    h = convex_hull([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])
    assert (1, 0) not in h.vertices and h.n == 4


def test_single_point_and_duplicates():
    assert convex_hull([(3, 4), (3, 4)]).vertices == ((3, 4),)


def test_empty_raises():
    with pytest.raises(EmptyInput):
        convex_hull([])


@pytest.mark.parametrize("bad", [[(0, float("nan"))], [(float("inf"), 1)], [("a", 1)], [(1,)]])
def test_bad_coordinates(bad):
    with pytest.raises(InvalidInput):
        convex_hull(bad)


def test_square_frames(square):
    frames = edge_frames(square)
    assert len(frames) == 4
    c = square.centroid
    for f in frames:
        assert f.length == pytest.approx(1.0)
        to_c = (c.x - f.origin.x, c.y - f.origin.y)
        assert to_c[0] * f.inward_normal.x + to_c[1] * f.inward_normal.y > 0


def test_segment_frames():
    frames = edge_frames(convex_hull([(0, 0), (2, 0)]))
    assert [f.length for f in frames] == [2.0, 2.0]
    assert {tuple(f.inward_normal) for f in frames} == {(0.0, 1.0), (0.0, -1.0)}


def test_hypotenuse_normal():
    h = convex_hull([(0, 0), (2, 0), (0, 2)])
    hyp = [f for f in edge_frames(h) if {f.origin, f.end} == {Point(2, 0), Point(0, 2)}][0]
    assert hyp.inward_normal.x == pytest.approx(-1 / math.sqrt(2))
    assert hyp.inward_normal.y == pytest.approx(-1 / math.sqrt(2))


def test_point_has_no_frames():
    with pytest.raises(DegeneratePoint):
        edge_frames(convex_hull([(1, 1)]))


def test_frame_round_trip(square):
    f = edge_frames(square)[2]
    u, t = f.local(np.array([[0.3, 0.7]]))
    p = f.to_world(u[0], t[0])
    assert p.x == pytest.approx(0.3) and p.y == pytest.approx(0.7)


def test_mec_equilateral():
    h = convex_hull([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)])
    c = min_enclosing_circle(h)
    assert c.radius == pytest.approx(1 / math.sqrt(3), abs=1e-12)
    assert c.center.x == pytest.approx(0.5) and c.center.y == pytest.approx(math.sqrt(3) / 6)


def test_mec_two_points():
    c = min_enclosing_circle(convex_hull([(0, 0), (2, 0)]))
    assert (c.center, c.radius) == (Point(1, 0), 1.0)


def test_mec_single_point():
    c = min_enclosing_circle(convex_hull([(2, 3)]))
    assert c.radius == 0.0


def test_mec_seed_42_matches_brute_force():
    rng = np.random.default_rng(42)
    pts = rng.uniform(-1, 1, (10, 2)).tolist()
    c = min_enclosing_circle(convex_hull(pts))
    b = brute_force_circle(pts)
    assert c.radius == pytest.approx(b.radius, rel=1e-12)
    assert math.dist(c.center, b.center) <= 1e-9


def test_farthest_vertex_ties(square, triangle):
    assert farthest_vertex(square, (0.5, 0)) == (2, pytest.approx(math.sqrt(1.25)))
    assert farthest_vertex(triangle, (0, 0)) == (0, 1.0)


def test_farthest_vertex_matches_scan():
    rng = random.Random(5)
    for k in range(20):
        h = random_hull(k, 15)
        p = (rng.uniform(-3, 3), rng.uniform(-3, 3))
        i, d = farthest_vertex(h, p)
        assert d == max(math.dist(v, p) for v in h.vertices)
        assert math.dist(h.vertices[i], p) == d


def test_diameter_matches_pairs():
    for k in range(20):
        h = random_hull(k, 30)
        brute = max(math.dist(a, b) for a in h.vertices for b in h.vertices)
        assert h.diameter == pytest.approx(brute, rel=1e-12)


def test_regular_hexagon_centroid():
    c = regular_polygon(6, 2.0).centroid
    assert abs(c.x) < 1e-12 and abs(c.y) < 1e-12


@given(point_sets)
def test_hull_idempotent(pts):
    h = convex_hull(pts)
    assert convex_hull(h.vertices) == h


@given(point_sets)
def test_hull_contains_inputs(pts):
    h = convex_hull(pts)
    if h.n < 3:
        return
    d = signed_edge_distances(h, (0, 0))  # exercise the helper
    assert d.shape == (h.n,)
    tol = 1e-9 * h.diameter
    for p in pts:
        assert h.clearance(p) >= -tol


@given(point_sets)
def test_hull_strictly_convex_ccw(pts):
    h = convex_hull(pts)
    v = h.vertices
    for i in range(h.n if h.n >= 3 else 0):
        a, b, c = v[i], v[(i + 1) % h.n], v[(i + 2) % h.n]
        assert (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0


@given(st.lists(st.tuples(st.floats(-10, 10), st.floats(-10, 10)), min_size=1, max_size=10))
def test_mec_matches_brute_force(pts):
    h = convex_hull(pts)
    c = min_enclosing_circle(h)
    b = brute_force_circle(h.vertices)
    scale = max(h.diameter, 1e-12)
    assert c.radius == pytest.approx(b.radius, rel=1e-9, abs=1e-12 * scale)
    for p in pts:
        assert math.dist(p, c.center) <= c.radius * (1 + 1e-9) + 1e-12 * scale


@given(point_sets, st.floats(0, 2 * math.pi), st.floats(-50, 50), st.floats(-50, 50))
def test_rigid_motion_equivariance(pts, theta, tx, ty):
    h = convex_hull(pts)
    move = rigid(theta, 1.0, tx, ty)
    g = convex_hull([move(p) for p in pts])
    scale = max(h.diameter, 1.0)
    c, d = min_enclosing_circle(h), min_enclosing_circle(g)
    assert d.radius == pytest.approx(c.radius, abs=1e-9 * scale)
    assert math.dist(move(c.center), d.center) <= 1e-7 * scale
    # near-collinear triples may flip under rounding; compare vertices only when they agree
    assume(g.n == h.n)
    for v in h.vertices:
        assert min(math.dist(move(v), q) for q in g.vertices) <= 1e-9 * scale


def test_hull_is_hashable_value(square):
    assert square == Hull(square.vertices)
    assert hash(square) == hash(Hull(square.vertices))
