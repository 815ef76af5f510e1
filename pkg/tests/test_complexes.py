import json
from fractions import Fraction

import pytest

from hdx.complexes import (build_from_facets, complex_from_json_dict, link,
                           minus_one_complex, weight_profile)
from hdx.errors import (DimensionOutOfRange, EmptyInput, FaceNotPresent,
                        MixedFacetSizes)


def test_closure_counts():
    X = build_from_facets([["a", "b", "c"], ["b", "c", "d"]])
    assert X.dim == 2
    assert [X.n_faces(i) for i in range(-1, 3)] == [1, 4, 5, 2]


def test_single_edge():
    X = build_from_facets([["a", "b"]])
    assert X.faces[-1] == ((),)
    assert X.face_labels(0) == (("a",), ("b",))
    assert X.face_labels(1) == (("a", "b"),)


def test_mixed_facet_sizes_rejected():
    with pytest.raises(MixedFacetSizes):
        build_from_facets([["a", "b", "c"], ["a", "b"]])


def test_empty_inputs_rejected():
    with pytest.raises(EmptyInput):
        build_from_facets([])
    with pytest.raises(EmptyInput):
        build_from_facets([[""]])


def test_duplicate_facets_collapse():
    X = build_from_facets([["a", "b"], ["b", "a"]])
    assert X.n_faces(1) == 1
    assert X.facet_degree[0] == (1, 1)


def test_weight_profile_triangle():
    X = build_from_facets([["a", "b", "c"]])
    prof = weight_profile(X, 1)
    assert all(c == 1 and w == Fraction(1, 3) for c, w in prof.values())


def test_weight_profile_complete(delta4):
    prof0 = weight_profile(delta4, 0)
    assert all(c == 3 and w == Fraction(1, 4) for c, w in prof0.values())
    prof1 = weight_profile(delta4, 1)
    assert all(c == 2 and w == Fraction(1, 6) for c, w in prof1.values())


def test_weight_profile_k4(k4):
    prof = weight_profile(k4, 0)
    assert all(c == 3 and w == Fraction(1, 4) for c, w in prof.values())


def test_weight_sums_to_one_everywhere(rng):
    from conftest import random_graph_complex

    for _ in range(25):
        X = random_graph_complex(rng)
        for i in range(-1, X.dim + 1):
            total = sum(w for _, w in weight_profile(X, i).values())
            assert total == 1


def test_weight_dimension_range(delta4):
    with pytest.raises(DimensionOutOfRange):
        weight_profile(delta4, 3)
    with pytest.raises(DimensionOutOfRange):
        weight_profile(delta4, -2)


def test_link_of_vertex():
    X = build_from_facets([["a", "b", "c"], ["b", "c", "d"]])
    L, corr = link(X, ["b"])
    assert set(L.face_labels(0)) == {("a",), ("c",), ("d",)}
    assert set(L.face_labels(1)) == {("a", "c"), ("c", "d")}
    # correspondence maps back into faces of X containing tau
    for rho, parent in corr.items():
        assert set(rho) | {"b"} == set(parent)
        assert X.has_face(parent)


def test_link_complete(delta4):
    L, _ = link(delta4, ["v0"])
    assert L.dim == 1 and L.n_faces(0) == 3 and L.n_faces(1) == 3


def test_link_of_facet(delta4):
    L, corr = link(delta4, ["v0", "v1", "v2"])
    assert L.dim == -1
    assert L.faces[-1] == ((),)
    assert corr[()] == ("v0", "v1", "v2")


def test_link_dimension_formula(delta5):
    for tau in (("v0",), ("v0", "v1"), ("v0", "v1", "v2")):
        L, _ = link(delta5, tau)
        assert L.dim == delta5.dim - (len(tau) - 1) - 1


def test_link_missing_face(delta4):
    with pytest.raises(FaceNotPresent):
        link(delta4, ["nope"])


def test_rebuild_idempotent(delta5, rp2):
    for X in (delta5, rp2):
        Y = build_from_facets(X.facets())
        assert Y.vertices == X.vertices
        assert Y.faces == X.faces
        assert Y.facet_degree == X.facet_degree


def test_json_roundtrip(rp2):
    data = json.loads(rp2.to_json())
    assert data["facets"] == sorted(data["facets"])
    Y = complex_from_json_dict(data)
    assert Y.faces == rp2.faces


def test_minus_one_complex_weight():
    X = minus_one_complex()
    assert X.dim == -1
    assert X.weight(-1, 0) == 1
