import json
from collections import Counter
from math import comb

import pytest

from hdx.cochains import cohomology_dim
from hdx.complexes import link
from hdx.errors import (BadParams, GroupTooLarge, NonSymmetricGenerators,
                        UnknownFixture, UnsupportedField)
from hdx.caps import FeasibilityCaps
from hdx.generators import (Field, cayley_clique_complex, complete_complex,
                            complexes_isomorphic, fixture, flag_complex,
                            gaussian_binomial, links_pairwise_isomorphic,
                            load_generator_file, subspace_table)
from hdx.spectral import GraphView


def test_complete_complex_counts():
    X = complete_complex(4, 2)
    assert (X.n_faces(0), X.n_faces(1), X.n_faces(2)) == (4, 6, 4)
    assert complete_complex(5, 1).n_faces(1) == 10
    assert complete_complex(6, 2).n_faces(2) == 20
    for n, d in ((7, 3), (6, 2)):
        X = complete_complex(n, d)
        assert all(X.n_faces(i) == comb(n, i + 1) for i in range(d + 1))


def test_complete_complex_bad_params():
    with pytest.raises(BadParams):
        complete_complex(3, 3)
    with pytest.raises(BadParams):
        complete_complex(3, 0)


def test_gf4_field_table():
    F = Field(4)
    assert F.mul(2, 2) == 3 and F.mul(2, 3) == 1 and F.mul(3, 3) == 2
    for a in range(1, 4):
        assert F.mul(a, F.inv(a)) == 1
    with pytest.raises(UnsupportedField):
        Field(6)


def test_gaussian_binomials():
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(3, 2, 2) == 7
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 1, 3) == 13
    assert gaussian_binomial(4, 1, 2) == 15


@pytest.mark.parametrize("q,m", [(2, 3), (3, 3), (2, 4), (4, 3), (5, 3)])
def test_subspace_counts(q, m):
    table = subspace_table(q, m)
    for k in range(1, m):
        assert len(table.by_dim[k]) == gaussian_binomial(m, k, q)


def test_flag_2_3_is_point_line_incidence(flag23):
    assert flag23.dim == 1
    assert flag23.n_vertices() == 14
    assert flag23.n_faces(1) == 21
    assert set(GraphView.from_complex(flag23).degrees) == {3}


def test_flag_2_4_structure():
    X = flag_complex(2, 4)
    assert X.dim == 2 and X.n_vertices() == 65
    degs = Counter(GraphView.from_complex(X).degrees)
    assert degs == Counter({6: 35, 14: 30})


def test_flag_3_3_structure():
    X = flag_complex(3, 3)
    assert X.n_vertices() == 26
    assert X.n_faces(1) == 52
    assert set(GraphView.from_complex(X).degrees) == {4}


def test_flag_2_4_links_bipartite():
    X = flag_complex(2, 4)
    for v in X.vertices[:6]:
        lk, _ = link(X, (v,))
        G = GraphView.from_complex(lk)
        # bipartite: no odd cycles, so the adjacency spectrum is symmetric
        from hdx.spectral import spectrum
        import numpy as np

        vals = spectrum(G)
        assert np.allclose(np.sort(vals), np.sort(-vals), atol=1e-9)


def test_cayley_s3_transpositions():
    gens = [(1, 0, 2), (0, 2, 1), (2, 1, 0)]
    X, rep = cayley_clique_complex(gens, 2)
    assert rep.group_order == 6
    assert X.dim == 1  # bipartite by parity, triangle-free
    assert X.n_faces(1) == 9
    assert rep.was_pure


def test_cayley_z5_complete():
    z5 = [(1, 2, 3, 4, 0), (4, 0, 1, 2, 3), (2, 3, 4, 0, 1), (3, 4, 0, 1, 2)]
    X, rep = cayley_clique_complex(z5, 2)
    assert X.dim == 2 and X.n_faces(2) == 10
    assert links_pairwise_isomorphic(X)


def test_cayley_single_transposition():
    X, rep = cayley_clique_complex([(1, 0)], 2)
    assert X.dim == 1 and X.n_vertices() == 2
    assert rep.was_pure


def test_cayley_generator_validation():
    with pytest.raises(NonSymmetricGenerators):
        cayley_clique_complex([(1, 2, 0)], 2)  # inverse missing
    with pytest.raises(NonSymmetricGenerators):
        cayley_clique_complex([(0, 1, 2)], 2)  # identity
    with pytest.raises(NonSymmetricGenerators):
        cayley_clique_complex([(0, 0, 1)], 2)  # not a permutation
    with pytest.raises(NonSymmetricGenerators):
        cayley_clique_complex([], 2)


def test_cayley_group_cap():
    z5 = [(1, 2, 3, 4, 0), (4, 0, 1, 2, 3)]
    with pytest.raises(GroupTooLarge):
        cayley_clique_complex(z5, 1, FeasibilityCaps(group_max=3))


def test_generator_file_roundtrip(tmp_path):
    path = tmp_path / "gens.json"
    path.write_text(json.dumps({"degree": 3,
                                "generators": [[1, 0, 2], [0, 2, 1]]}))
    gens, degree = load_generator_file(str(path))
    assert degree == 3 and gens == [(1, 0, 2), (0, 2, 1)]
    X, _ = cayley_clique_complex(gens, 2)
    assert X.n_vertices() == 6  # the two transpositions generate S3


def test_rp2_fixture(rp2):
    assert rp2.n_vertices() == 6
    assert rp2.n_faces(1) == 15
    assert rp2.n_faces(2) == 10
    assert rp2.n_vertices() - rp2.n_faces(1) + rp2.n_faces(2) == 1
    assert cohomology_dim(rp2, 1) == 1
    assert cohomology_dim(rp2, 2) == 1
    # every edge lies in exactly two triangles (closed surface)
    assert set(rp2.facet_degree[1]) == {2}


def test_cycle_fixture():
    C5 = fixture("cycle_5")
    assert C5.n_vertices() == 5 and C5.n_faces(1) == 5
    assert cohomology_dim(C5, 0) == 0


def test_petersen_fixture():
    P = fixture("petersen")
    G = GraphView.from_complex(P)
    assert G.n == 10 and set(G.degrees) == {3}


def test_fano_incidence_matches_flag(flag23):
    assert complexes_isomorphic(fixture("fano_incidence"), flag23)


def test_octahedron_fixture():
    X = fixture("octahedron_boundary")
    assert (X.n_vertices(), X.n_faces(1), X.n_faces(2)) == (6, 12, 8)
    assert cohomology_dim(X, 1) == 0 and cohomology_dim(X, 2) == 1
    assert links_pairwise_isomorphic(X)


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("klein_bottle")


def test_isomorphism_rejects_different(rp2):
    assert not complexes_isomorphic(rp2, fixture("octahedron_boundary"))
