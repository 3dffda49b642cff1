from fractions import Fraction

import pytest
from hypothesis import given, settings

from treepack.center import (
    CenterRegion,
    classify_dimension,
    compute_center_region,
    depth_threshold,
    enumerate_center_halfplanes,
    on_pair_line,
    select_centerpoint,
)
from treepack.errors import DimensionError, GeneralPositionError
from treepack.geometry import (
    Point2,
    canonical_polygon,
    convex_hull,
    orientation,
    point,
    points,
    polygon_area2,
)
from treepack.oracle import oracle_center_membership, oracle_region_agreement
from treepack.verification import check_lemma1, min_halfplane_count

from .conftest import general_position_sets, zero_dim_set


def naive_qualifying(pts):
    """Ordered pairs whose open right side holds <= alpha - 1 points, by direct counting."""
    alpha = depth_threshold(len(pts))
    out = []
    for a in range(len(pts)):
        for b in range(len(pts)):
            if a == b:
                continue
            right = sum(1 for q in pts if orientation(pts[a], pts[b], q) < 0)
            if right <= alpha - 1:
                out.append((pts[a], pts[b]))
    return out


def as_pairs(halfplanes):
    return [(h.boundary.anchor, h.boundary.target) for h in halfplanes]


def test_depth_threshold():
    assert [depth_threshold(n) for n in (3, 4, 5, 6, 7, 9, 10)] == [1, 2, 2, 2, 3, 3, 4]


def test_triangle_halfplanes(triangle):
    hs = enumerate_center_halfplanes(triangle)
    assert len(hs) <= 6
    assert as_pairs(hs) == naive_qualifying(triangle)
    assert len(hs) == 3                     # the three hull edges, ccw


def test_hexagon_halfplanes(hexagon):
    hs = enumerate_center_halfplanes(hexagon)
    assert as_pairs(hs) == naive_qualifying(hexagon)
    # 6 hull edges and 6 short diagonals cutting off a single vertex
    assert len(hs) == 12


@settings(max_examples=60, deadline=None)
@given(general_position_sets(max_size=12))
def test_halfplanes_match_naive_count(pts):
    assert as_pairs(enumerate_center_halfplanes(pts)) == naive_qualifying(pts)


def test_halfplanes_require_general_position():
    with pytest.raises(GeneralPositionError) as err:
        enumerate_center_halfplanes(points([(0, 0), (1, 1), (2, 2), (0, 1)]))
    assert err.value.witness == (0, 1, 2)


def test_hexagon_region(hexagon):
    region = compute_center_region(hexagon)
    assert region.kind == "polygon"
    # intersections of the lines through every second hull vertex
    assert region.vertices == canonical_polygon(
        points([(-2, -1), (0, -2), (2, -1), (2, 1), (0, 2), (-2, 1)]))
    assert oracle_center_membership(point(0, 0), hexagon)
    for far in [(4, 4), (-3, 0), (0, 2 + Fraction(1, 100))]:
        assert not oracle_center_membership(point(*far), hexagon)


def test_seven_point_region(seven):
    region = compute_center_region(seven)
    assert region.kind == "point"
    assert region.vertices == (point(0, 0),)
    assert min_halfplane_count(point(0, 0), seven) == 3


def test_triangle_region(triangle):
    region = compute_center_region(triangle)
    assert region.vertices == canonical_polygon(triangle)
    centroid = Point2(Fraction(4, 3), Fraction(1))
    for q in list(triangle) + [centroid]:
        assert oracle_center_membership(q, triangle)
    for q in [point(-1, 0), point(3, 3), point(5, 0)]:
        assert not oracle_center_membership(q, triangle)


def test_classify_hexagon(hexagon):
    region = compute_center_region(hexagon)
    report = classify_dimension(region, hexagon)
    assert report.dimension == 2 and report.dimension_rule_checked
    assert polygon_area2(region.vertices) > 0


def test_classify_point_center(seven):
    report = classify_dimension(compute_center_region(seven), seven)
    assert report.dimension == 0
    assert report.point_in_P and report.point_index == 0
    assert report.n_mod_3 == 1


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_cluster_sets_have_point_centers(k):
    pts = zero_dim_set(k)
    report = classify_dimension(compute_center_region(pts), pts)
    assert (report.dimension, report.point_index, report.n_mod_3) == (0, 0, 1)


@settings(max_examples=40, deadline=None)
@given(general_position_sets(min_size=6, max_size=6))
def test_six_points_always_have_polygon_center(pts):
    assert classify_dimension(compute_center_region(pts), pts).dimension == 2


def test_small_sets_skip_dimension_rule():
    convex4 = points([(0, 0), (4, 0), (5, 3), (1, 4)])
    region = compute_center_region(convex4)
    report = classify_dimension(region, convex4)
    assert report.dimension == 0 and not report.point_in_P and not report.dimension_rule_checked
    # the diagonals' intersection
    assert orientation(convex4[0], convex4[2], region.vertices[0]) == 0
    assert orientation(convex4[1], convex4[3], region.vertices[0]) == 0

    nested = points([(0, 0), (6, 0), (0, 6), (1, 2)])
    report = classify_dimension(compute_center_region(nested), nested)
    assert report.dimension == 0 and report.point_index == 3


def test_classify_rejects_segment_center_for_general_position(hexagon):
    fake = CenterRegion((point(0, 0), point(1, 0)), alpha=2)
    with pytest.raises(DimensionError):
        classify_dimension(fake, hexagon)
    off_p = CenterRegion((point(0, 0),), alpha=2)
    with pytest.raises(DimensionError):
        classify_dimension(off_p, hexagon)


def test_select_point_center(seven):
    cp = select_centerpoint(compute_center_region(seven), seven)
    assert cp.c == point(0, 0) and cp.in_P and cp.index == 0


def brute_on_pair_line(c, pts):
    if c in pts:
        return True
    return any(orientation(pts[a], pts[b], c) == 0
               for a in range(len(pts)) for b in range(a + 1, len(pts)))


def test_select_in_hexagon_takes_retry_path(hexagon):
    region = compute_center_region(hexagon)
    # the vertex average (0, 0) lies on the line through (4,0) and (-4,0)
    assert region.vertex_average() == point(0, 0)
    assert brute_on_pair_line(point(0, 0), hexagon)
    cp = select_centerpoint(region, hexagon, seed=0)
    assert cp.c != point(0, 0) and not cp.in_P
    assert not brute_on_pair_line(cp.c, hexagon)
    assert min_halfplane_count(cp.c, hexagon) >= 2
    assert check_lemma1(cp, hexagon)


def test_select_retry_on_constructed_square():
    square = CenterRegion(points([(-1, -1), (1, -1), (1, 1), (-1, 1)]), alpha=2)
    pts = points([(-5, 0), (5, 0), (1, 7), (-2, -9), (3, -8), (-6, 6)])
    assert brute_on_pair_line(point(0, 0), pts)
    cp = select_centerpoint(square, pts, seed=3)
    assert not brute_on_pair_line(cp.c, pts)
    assert all(abs(v) < 1 for v in cp.c)


def test_select_is_deterministic(hexagon):
    region = compute_center_region(hexagon)
    assert select_centerpoint(region, hexagon, 5) == select_centerpoint(region, hexagon, 5)


def test_select_rejects_segment():
    region = CenterRegion((point(0, 0), point(1, 0)), alpha=2)
    with pytest.raises(DimensionError):
        select_centerpoint(region, points([(0, 1), (1, 2), (5, 0)]))


@settings(max_examples=60, deadline=None)
@given(general_position_sets(max_size=9))
def test_on_pair_line_matches_brute_force(pts):
    for q in [point(0, 0), Point2(Fraction(1, 3), Fraction(-2, 7)), pts[0],
              Point2((pts[0].x + pts[1].x) / 2, (pts[0].y + pts[1].y) / 2)]:
        assert on_pair_line(q, pts) == brute_on_pair_line(q, pts)


def inside_hull(q, pts):
    hull = convex_hull(pts)
    return all(orientation(pts[hull[i - 1]], pts[hull[i]], q) >= 0 for i in range(len(hull)))


@settings(max_examples=80, deadline=None)
@given(general_position_sets(max_size=10))
def test_region_invariants(pts):
    region = compute_center_region(pts)
    assert region.vertices
    assert all(inside_hull(v, pts) for v in region.vertices)
    assert oracle_region_agreement(pts, region).ok
    report = classify_dimension(region, pts)
    if len(pts) >= 6:
        assert report.dimension in (0, 2)
    if report.dimension in (0, 2):
        cp = select_centerpoint(region, pts, seed=1)
        assert min_halfplane_count(cp.c, pts) >= region.alpha
        assert check_lemma1(cp, pts)


def test_region_independent_of_input_order(hexagon):
    shuffled = [hexagon[i] for i in (3, 0, 5, 1, 4, 2)]
    assert compute_center_region(shuffled).vertices == compute_center_region(hexagon).vertices
