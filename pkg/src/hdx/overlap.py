"""Geometric overlap: exact planar point depth and a seeded Monte Carlo
lower bound in higher dimension.

The planar path is fully exact: rational coordinates, orientation-sign
predicates, closed triangles (degenerate triangles count as closed
segments).  Depth is maximised over a finite candidate set: the input
points plus all pairwise proper intersections of the edge segments.  Depth
is constant on the open cells of the segment arrangement and every depth
region (an intersection of closed triangles) has its extreme points there,
so the maximum over the candidates is the maximum over the whole plane.

The "covered" convention is closed simplices; results carry that flag.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .complexes import SimplicialComplex
from .errors import InvalidPointConfig, WrongDimension

Point = tuple[Fraction, ...]


def parse_points(data: Mapping) -> dict[str, Point]:
    """Point config from {"points": {label: ["x/y", ...], ...}}."""
    if "points" not in data:
        raise InvalidPointConfig("point JSON needs a 'points' key")
    out: dict[str, Point] = {}
    dim = None
    for label, coords in data["points"].items():
        pt = tuple(Fraction(str(c)) for c in coords)
        if dim is None:
            dim = len(pt)
        elif len(pt) != dim:
            raise InvalidPointConfig("inconsistent coordinate dimensions")
        out[str(label)] = pt
    if not out:
        raise InvalidPointConfig("empty point configuration")
    return out


def points_to_json_dict(points: Mapping[str, Point]) -> dict:
    return {"points": {label: [str(Fraction(c)) for c in pt]
                       for label, pt in sorted(points.items())}}


def points_from_file(path: str) -> dict[str, Point]:
    with open(path) as fh:
        return parse_points(json.load(fh))


def _config_for(X: SimplicialComplex, points: Mapping[str, Point],
                dim: int) -> list[Point]:
    coords = []
    for v in X.vertices:
        if v not in points:
            raise InvalidPointConfig(f"no coordinates for vertex {v!r}")
        pt = points[v]
        if len(pt) != dim:
            raise InvalidPointConfig(
                f"vertex {v!r} has {len(pt)} coordinates, expected {dim}")
        coords.append(tuple(Fraction(c) for c in pt))
    return coords


# -- exact planar predicates -------------------------------------------------

def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b - a) x (c - a)."""
    det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (det > 0) - (det < 0)


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def point_in_closed_triangle(p: Point, tri: Sequence[Point]) -> bool:
    """Closed containment; a degenerate triangle is its convex hull segment."""
    a, b, c = tri
    o1, o2, o3 = orient(a, b, p), orient(b, c, p), orient(c, a, p)
    if orient(a, b, c) == 0:
        # collapse to the longest spanning segment
        for u, v, w in ((a, b, c), (a, c, b), (b, c, a)):
            if _on_segment(w, u, v):
                return _on_segment(p, u, v)
        return _on_segment(p, a, b)
    return (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0)


def segment_intersection(a: Point, b: Point, c: Point, d: Point) -> Point | None:
    """The single proper intersection point of closed segments ab and cd, or
    None (collinear overlaps are covered by the segment endpoints)."""
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if d1 == d2 == 0:
        return None  # collinear
    if ((d1 > 0) != (d2 > 0) or d1 == 0 or d2 == 0) and (
            (d3 > 0) != (d4 > 0) or d3 == 0 or d4 == 0):
        # line intersection, exact
        r = (b[0] - a[0], b[1] - a[1])
        s = (d[0] - c[0], d[1] - c[1])
        denom = r[0] * s[1] - r[1] * s[0]
        if denom == 0:
            # touching at an endpoint with parallel directions
            for p in (a, b):
                if _on_segment(p, c, d):
                    return p
            for p in (c, d):
                if _on_segment(p, a, b):
                    return p
            return None
        t = ((c[0] - a[0]) * s[1] - (c[1] - a[1]) * s[0]) / denom
        p = (a[0] + t * r[0], a[1] + t * r[1])
        if _on_segment(p, a, b) and _on_segment(p, c, d):
            return p
    return None


@dataclass(frozen=True)
class OverlapResult:
    max_depth: int
    fraction: Fraction
    witness_point: Point
    covering_facets: tuple[tuple[str, ...], ...]
    convention: str = "closed"


def candidate_points(X: SimplicialComplex,
                     points: Mapping[str, Point]) -> list[Point]:
    """The finite set carrying the planar depth maximum: input points plus
    pairwise proper intersections of the edge segment images."""
    if X.dim != 2:
        raise WrongDimension("exact overlap needs a 2-dimensional complex")
    coords = _config_for(X, points, 2)
    segments = sorted({tuple(sorted((coords[e[0]], coords[e[1]])))
                       for e in X.faces[1]})
    candidates = set(coords)
    for idx, (a, b) in enumerate(segments):
        for c, d in segments[idx + 1:]:
            p = segment_intersection(a, b, c, d)
            if p is not None:
                candidates.add(p)
    return sorted(candidates)


def geometric_overlap_2d(X: SimplicialComplex,
                         points: Mapping[str, Point]) -> OverlapResult:
    """Exact maximum number of closed affine triangle images covering a
    single point of the plane, with a witness."""
    if X.dim != 2:
        raise WrongDimension("exact overlap needs a 2-dimensional complex")
    coords = _config_for(X, points, 2)
    triangles = [tuple(coords[v] for v in f) for f in X.faces[2]]
    candidates = candidate_points(X, points)
    best_depth = -1
    best_point: Point | None = None
    best_cover: tuple[int, ...] = ()
    for p in candidates:
        cover = tuple(j for j, tri in enumerate(triangles)
                      if point_in_closed_triangle(p, tri))
        if len(cover) > best_depth:
            best_depth = len(cover)
            best_point = p
            best_cover = cover
    facets = tuple(X.label_face(X.faces[2][j]) for j in best_cover)
    return OverlapResult(best_depth, Fraction(best_depth, len(triangles)),
                         best_point, facets)


# -- general-dimension exact containment -------------------------------------

def _solve_fraction(matrix: list[list[Fraction]],
                    rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a square rational system; None when singular."""
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def point_in_closed_simplex(p: Point, verts: Sequence[Point]) -> bool:
    """Exact closed containment via barycentric coordinates.

    Degenerate simplices in dimension > 2 only count their own vertices
    (sound for the lower-bound estimator); dimension 2 uses the full
    degenerate-triangle predicate.
    """
    d = len(p)
    if d == 2:
        return point_in_closed_triangle(p, verts)
    base = verts[0]
    cols = [[verts[j + 1][r] - base[r] for j in range(d)] for r in range(d)]
    rhs = [p[r] - base[r] for r in range(d)]
    lam = _solve_fraction(cols, rhs)
    if lam is None:
        return p in tuple(verts)
    return all(x >= 0 for x in lam) and sum(lam) <= 1


@dataclass(frozen=True)
class McOverlapEstimate:
    """Witnessed lower bound on the maximum depth; the interval's upper end
    is the trivial bound of one."""

    depth_lower_bound: int
    fraction_lower_bound: Fraction
    interval: tuple[Fraction, Fraction]
    witness_point: Point
    covering_facets: tuple[tuple[str, ...], ...]
    samples: int
    seed: int
    convention: str = "closed"


def geometric_overlap_mc(X: SimplicialComplex, points: Mapping[str, Point],
                         samples: int, seed: int) -> McOverlapEstimate:
    """Depth maximised over the input points plus seeded rational convex
    combinations of facet vertices; deterministic given the seed and exact,
    so the estimate never exceeds the true maximum."""
    if X.dim < 2:
        raise WrongDimension("overlap needs dimension at least 2")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    d = X.dim
    coords = _config_for(X, points, d)
    facets = X.faces[d]
    rng = random.Random(seed)
    candidates: list[Point] = list(coords)
    for _ in range(samples):
        f = facets[rng.randrange(len(facets))]
        weights = [rng.randint(0, 8) for _ in range(d + 1)]
        if sum(weights) == 0:
            weights[0] = 1
        total = sum(weights)
        pt = tuple(sum(Fraction(w, total) * coords[v][r]
                       for w, v in zip(weights, f))
                   for r in range(d))
        candidates.append(pt)
    best_depth = -1
    best_point: Point | None = None
    best_cover: tuple[int, ...] = ()
    for p in candidates:
        cover = tuple(j for j, f in enumerate(facets)
                      if point_in_closed_simplex(p, [coords[v] for v in f]))
        if len(cover) > best_depth:
            best_depth = len(cover)
            best_point = p
            best_cover = cover
    frac = Fraction(best_depth, len(facets))
    return McOverlapEstimate(
        best_depth, frac, (frac, Fraction(1)), best_point,
        tuple(X.label_face(facets[j]) for j in best_cover), samples, seed)
