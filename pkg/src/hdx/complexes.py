"""Pure finite simplicial complexes with exact face weights.

A complex stores, for every dimension i from -1 up to d, the sorted list of
i-faces as vertex-index tuples (the empty face is always present), the
facet-degree c of every face (number of top faces containing it) and the
incidence between consecutive dimensions.  All weights are exact rationals:
an i-face has weight c / (C(d+1, i+1) * #facets), and the weights of each
dimension sum to 1.

Vertex labels are opaque strings; they are mapped to dense indices in
lexicographic label order, so face index tuples are sorted both by index
and by label.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import (DimensionOutOfRange, EmptyInput, FaceNotPresent,
                     MixedFacetSizes)

Face = tuple[int, ...]
LabelFace = tuple[str, ...]


class SimplicialComplex:
    """Immutable pure complex; build with build_from_facets."""

    __slots__ = ("vertices", "index", "dim", "faces", "face_index",
                 "facet_degree", "subfaces", "_cache", "__weakref__")

    def __init__(self, vertices: Sequence[str], dim: int,
                 faces: Mapping[int, Sequence[Face]],
                 facet_degree: Mapping[int, Sequence[int]],
                 subfaces: Mapping[int, Sequence[tuple[int, ...]]]) -> None:
        self.vertices = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.dim = dim
        self.faces = {i: tuple(fs) for i, fs in faces.items()}
        self.face_index = {i: {f: j for j, f in enumerate(fs)}
                           for i, fs in self.faces.items()}
        self.facet_degree = {i: tuple(cs) for i, cs in facet_degree.items()}
        self.subfaces = {i: tuple(rows) for i, rows in subfaces.items()}
        self._cache: dict = {}

    # -- basic queries ---------------------------------------------------

    def n_vertices(self) -> int:
        return len(self.vertices)

    def n_faces(self, i: int) -> int:
        self._check_dim(i)
        return len(self.faces[i])

    def face_labels(self, i: int) -> tuple[LabelFace, ...]:
        self._check_dim(i)
        return tuple(tuple(self.vertices[v] for v in f) for f in self.faces[i])

    def label_face(self, face: Face) -> LabelFace:
        return tuple(self.vertices[v] for v in face)

    def face_from_labels(self, labels: Iterable[str]) -> Face:
        """Map a label collection to the stored face tuple; FaceNotPresent."""
        try:
            face = tuple(sorted(self.index[v] for v in labels))
        except KeyError as exc:
            raise FaceNotPresent(f"unknown vertex {exc.args[0]!r}") from exc
        i = len(face) - 1
        if i > self.dim or face not in self.face_index.get(i, {}):
            raise FaceNotPresent(f"face {tuple(sorted(labels))!r} not in complex")
        return face

    def has_face(self, labels: Iterable[str]) -> bool:
        try:
            self.face_from_labels(labels)
        except FaceNotPresent:
            return False
        return True

    def facets(self) -> tuple[LabelFace, ...]:
        return self.face_labels(self.dim)

    def degree(self, i: int, face_idx: int) -> int:
        return self.facet_degree[i][face_idx]

    def _check_dim(self, i: int) -> None:
        if not (-1 <= i <= self.dim):
            raise DimensionOutOfRange(f"dimension {i} not in [-1, {self.dim}]")

    # -- weights ---------------------------------------------------------

    def weight_denominator(self, i: int) -> int:
        """Common denominator of all i-face weights."""
        self._check_dim(i)
        return comb(self.dim + 1, i + 1) * len(self.faces[self.dim])

    def weight(self, i: int, face_idx: int) -> Fraction:
        return Fraction(self.facet_degree[i][face_idx],
                        self.weight_denominator(i))

    def weight_numerators(self, i: int) -> tuple[list[int], int]:
        """(facet-degree numerators, common denominator) for dimension i."""
        return list(self.facet_degree[i]), self.weight_denominator(i)

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        facets = sorted(list(f) for f in self.facets())
        return {"facets": facets}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def __repr__(self) -> str:
        counts = ",".join(str(len(self.faces[i])) for i in range(self.dim + 1))
        return f"SimplicialComplex(dim={self.dim}, f=({counts}))"


def build_from_facets(facets: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Downward closure of a facet list; all facets must share one size.

    The result is pure by construction.  Vertex indexing is lexicographic
    in the labels, face lists are sorted, so the construction is
    deterministic for any input order.
    """
    facet_sets = []
    seen = set()
    for raw in facets:
        fs = frozenset(str(v) for v in raw)
        if any(not v for v in fs):
            raise EmptyInput("vertex labels must be non-empty strings")
        if fs not in seen:
            seen.add(fs)
            facet_sets.append(fs)
    if not facet_sets:
        raise EmptyInput("no facets given")
    sizes = {len(f) for f in facet_sets}
    if len(sizes) != 1:
        raise MixedFacetSizes(f"facet cardinalities differ: {sorted(sizes)}")
    size = sizes.pop()
    if size < 1:
        raise EmptyInput("facets must be non-empty")
    d = size - 1

    labels = sorted({v for f in facet_sets for v in f})
    index = {v: i for i, v in enumerate(labels)}
    facet_tuples = sorted(tuple(sorted(index[v] for v in f)) for f in facet_sets)
    return _from_facet_tuples(labels, d, facet_tuples)


def _from_facet_tuples(labels: Sequence[str], d: int,
                       facet_tuples: Sequence[Face]) -> SimplicialComplex:
    faces: dict[int, list[Face]] = {-1: [()]}
    degree: dict[int, list[int]] = {}
    deg_maps: dict[int, dict[Face, int]] = {i: {} for i in range(-1, d + 1)}
    for facet in facet_tuples:
        for i in range(-1, d + 1):
            for sub in combinations(facet, i + 1):
                deg_maps[i][sub] = deg_maps[i].get(sub, 0) + 1
    for i in range(-1, d + 1):
        ordered = sorted(deg_maps[i])
        faces[i] = ordered
        degree[i] = [deg_maps[i][f] for f in ordered]
    face_index = {i: {f: j for j, f in enumerate(faces[i])}
                  for i in range(-1, d + 1)}
    subfaces: dict[int, list[tuple[int, ...]]] = {}
    for i in range(0, d + 1):
        rows = []
        for f in faces[i]:
            rows.append(tuple(face_index[i - 1][sub]
                              for sub in combinations(f, i)))
        subfaces[i] = rows
    return SimplicialComplex(labels, d, faces, degree, subfaces)


def minus_one_complex() -> SimplicialComplex:
    """The complex {empty face} of dimension -1 (the link of a facet)."""
    return SimplicialComplex((), -1, {-1: [()]}, {-1: [1]}, {})


def link(X: SimplicialComplex, tau_labels: Iterable[str]
         ) -> tuple[SimplicialComplex, dict[LabelFace, LabelFace]]:
    """Link of a face: all sets sigma \\ tau for sigma containing tau.

    Returns the link as a complex of dimension dim(X) - dim(tau) - 1 plus
    the face correspondence {link face -> parent face} by labels (the empty
    link face maps to tau itself).
    """
    tau = X.face_from_labels(tau_labels)
    tau_set = set(tau)
    tau_lab = X.label_face(tau)
    link_dim = X.dim - len(tau)
    if link_dim < 0:
        corr = {(): tau_lab}
        return minus_one_complex(), corr
    link_facets = []
    for facet in X.faces[X.dim]:
        if tau_set.issubset(facet):
            link_facets.append(tuple(X.vertices[v] for v in facet
                                     if v not in tau_set))
    result = build_from_facets(link_facets)
    corr: dict[LabelFace, LabelFace] = {(): tau_lab}
    for i in range(0, result.dim + 1):
        for rho in result.face_labels(i):
            corr[rho] = tuple(sorted(rho + tau_lab))
    return result, corr


def weight_profile(X: SimplicialComplex, i: int
                   ) -> dict[LabelFace, tuple[int, Fraction]]:
    """Per-face (facet degree, weight) for dimension i; weights sum to 1."""
    X._check_dim(i)
    out = {}
    for j, f in enumerate(X.faces[i]):
        out[X.label_face(f)] = (X.facet_degree[i][j], X.weight(i, j))
    return out


def complex_to_file(X: SimplicialComplex, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(X.to_json() + "\n")


def complex_from_json_dict(data: dict) -> SimplicialComplex:
    if not isinstance(data, dict) or "facets" not in data:
        raise EmptyInput("complex JSON needs a 'facets' key")
    return build_from_facets(data["facets"])


def complex_from_file(path: str) -> SimplicialComplex:
    with open(path) as fh:
        return complex_from_json_dict(json.load(fh))
