from fractions import Fraction as F

import pytest

from hdx.complexes import build_from_facets
from hdx.errors import InvalidPointConfig, WrongDimension
from hdx.overlap import (candidate_points, geometric_overlap_2d,
                         geometric_overlap_mc, parse_points,
                         point_in_closed_simplex, point_in_closed_triangle,
                         points_to_json_dict, segment_intersection)


def quad_points():
    return {"v0": (F(0), F(0)), "v1": (F(1), F(0)),
            "v2": (F(1), F(1)), "v3": (F(0), F(1))}


def test_single_triangle():
    X = build_from_facets([["a", "b", "c"]])
    pts = {"a": (F(0), F(0)), "b": (F(1), F(0)), "c": (F(0), F(1))}
    r = geometric_overlap_2d(X, pts)
    assert r.max_depth == 1 and r.fraction == 1
    assert r.convention == "closed"


def test_quadrilateral_depth_four(delta4):
    r = geometric_overlap_2d(delta4, quad_points())
    assert r.max_depth == 4 and r.fraction == 1
    assert r.witness_point == (F(1, 2), F(1, 2))
    assert len(r.covering_facets) == 4


def test_collinear_degenerate_matches_interval_oracle(delta4):
    pts = {"v0": (F(0), F(0)), "v1": (F(1), F(0)),
           "v2": (F(2), F(0)), "v3": (F(3), F(0))}
    r = geometric_overlap_2d(delta4, pts)
    # 1-d interval stabbing: each triangle covers [min x, max x] of its
    # vertices; max depth = max point coverage among interval endpoints
    intervals = []
    for f in delta4.facets():
        xs = [pts[v][0] for v in f]
        intervals.append((min(xs), max(xs)))
    best = max(sum(1 for lo, hi in intervals if lo <= x <= hi)
               for x in {e for iv in intervals for e in iv})
    assert r.max_depth == best == 4


def test_two_disjoint_triangles_overlapping_images():
    # star-of-david: the depth-2 region is bounded by edge intersections
    # only, so the maximum is attained strictly inside both triangles
    X = build_from_facets([["a", "b", "c"], ["d", "e", "f"]])
    pts = {"a": (F(0), F(0)), "b": (F(4), F(0)), "c": (F(2), F(3)),
           "d": (F(0), F(2)), "e": (F(4), F(2)), "f": (F(2), F(-1))}
    r = geometric_overlap_2d(X, pts)
    assert r.max_depth == 2
    assert r.fraction == F(1, 1)
    # the witness cannot be an input point: no vertex lies in both triangles
    assert r.witness_point not in pts.values()


def test_nested_triangles():
    X = build_from_facets([["a", "b", "c"], ["d", "e", "f"]])
    pts = {"a": (F(0), F(0)), "b": (F(6), F(0)), "c": (F(0), F(6)),
           "d": (F(1), F(1)), "e": (F(2), F(1)), "f": (F(1), F(2))}
    r = geometric_overlap_2d(X, pts)
    assert r.max_depth == 2
    assert r.witness_point in {pts["d"], pts["e"], pts["f"]}


def test_wrong_dimension(k4):
    with pytest.raises(WrongDimension):
        geometric_overlap_2d(k4, {"v0": (F(0), F(0)), "v1": (F(1), F(0)),
                                  "v2": (F(0), F(1)), "v3": (F(1), F(1))})


def test_missing_vertex_rejected(delta4):
    pts = quad_points()
    del pts["v3"]
    with pytest.raises(InvalidPointConfig):
        geometric_overlap_2d(delta4, pts)


def test_point_in_closed_triangle_boundary():
    tri = [(F(0), F(0)), (F(2), F(0)), (F(0), F(2))]
    assert point_in_closed_triangle((F(1), F(0)), tri)   # edge
    assert point_in_closed_triangle((F(0), F(0)), tri)   # vertex
    assert point_in_closed_triangle((F(1, 2), F(1, 2)), tri)
    assert not point_in_closed_triangle((F(2), F(2)), tri)


def test_segment_intersection_cases():
    p = segment_intersection((F(0), F(0)), (F(2), F(2)),
                             (F(0), F(2)), (F(2), F(0)))
    assert p == (F(1), F(1))
    # parallel, no intersection
    assert segment_intersection((F(0), F(0)), (F(1), F(0)),
                                (F(0), F(1)), (F(1), F(1))) is None
    # collinear overlap reports nothing; endpoints carry the information
    assert segment_intersection((F(0), F(0)), (F(2), F(0)),
                                (F(1), F(0)), (F(3), F(0))) is None
    # endpoint touch
    p = segment_intersection((F(0), F(0)), (F(1), F(1)),
                             (F(1), F(1)), (F(2), F(0)))
    assert p == (F(1), F(1))


def test_candidate_points_quadrilateral(delta4):
    cands = candidate_points(delta4, quad_points())
    assert (F(1, 2), F(1, 2)) in cands
    assert all(len(p) == 2 for p in cands)


def test_mc_deterministic(delta4):
    a = geometric_overlap_mc(delta4, quad_points(), 30, 11)
    b = geometric_overlap_mc(delta4, quad_points(), 30, 11)
    assert a == b
    c = geometric_overlap_mc(delta4, quad_points(), 30, 12)
    assert c.seed != a.seed


def test_mc_below_exact(delta4, rng):
    for _ in range(10):
        pts = {v: (F(rng.randint(-8, 8), rng.randint(1, 4)),
                   F(rng.randint(-8, 8), rng.randint(1, 4)))
               for v in delta4.vertices}
        exact = geometric_overlap_2d(delta4, pts)
        est = geometric_overlap_mc(delta4, pts, 25, rng.randint(0, 999))
        assert est.depth_lower_bound <= exact.max_depth
        assert est.interval[0] <= est.interval[1] == 1


def test_mc_tetrahedron_fraction_one():
    X = build_from_facets([["a", "b", "c", "d"]])
    pts = {"a": (F(0), F(0), F(0)), "b": (F(1), F(0), F(0)),
           "c": (F(0), F(1), F(0)), "d": (F(0), F(0), F(1))}
    est = geometric_overlap_mc(X, pts, 1, 0)
    assert est.fraction_lower_bound == 1


def test_point_in_closed_simplex_3d():
    verts = [(F(0), F(0), F(0)), (F(1), F(0), F(0)),
             (F(0), F(1), F(0)), (F(0), F(0), F(1))]
    assert point_in_closed_simplex((F(1, 4), F(1, 4), F(1, 4)), verts)
    assert point_in_closed_simplex((F(0), F(0), F(0)), verts)
    assert not point_in_closed_simplex((F(1), F(1), F(1)), verts)


def test_points_json_roundtrip():
    pts = parse_points({"points": {"a": ["1/2", "0"], "b": ["-3", "2/7"]}})
    assert pts["a"] == (F(1, 2), F(0))
    assert pts["b"] == (F(-3), F(2, 7))
    data = points_to_json_dict(pts)
    assert parse_points(data) == pts
    with pytest.raises(InvalidPointConfig):
        parse_points({"points": {"a": ["0"], "b": ["0", "1"]}})
