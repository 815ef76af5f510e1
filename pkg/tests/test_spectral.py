import numpy as np
import pytest

from hdx.caps import FeasibilityCaps
from hdx.errors import Disconnected, InvalidSubset, NotRegular, TooLarge
from hdx.generators import fixture
from hdx.spectral import (GraphView, alon_milman_report, cheeger_exact,
                          is_ramanujan_graph, lambda1, laplacian_spectrum,
                          spectrum)


def C4():
    return GraphView.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def K4():
    return GraphView.from_edges(4, [(u, v) for u in range(4)
                                    for v in range(u + 1, 4)])


def test_spectrum_c4():
    assert np.allclose(spectrum(C4()), [2, 0, 0, -2], atol=1e-9)


def test_spectrum_k4():
    assert np.allclose(spectrum(K4()), [3, -1, -1, -1], atol=1e-9)


def test_spectrum_fano(flag23):
    G = GraphView.from_complex(flag23)
    expected = sorted([3.0] + [2 ** 0.5] * 6 + [-(2 ** 0.5)] * 6 + [-3.0],
                      reverse=True)
    assert np.allclose(spectrum(G), expected, atol=1e-9)


def test_spectrum_petersen():
    G = GraphView.from_complex(fixture("petersen"))
    expected = sorted([3.0] + [1.0] * 5 + [-2.0] * 4, reverse=True)
    assert np.allclose(spectrum(G), expected, atol=1e-9)


def test_eigenpair_residuals():
    for G in (C4(), K4(), GraphView.from_complex(fixture("petersen"))):
        A = G.adjacency_matrix()
        vals, vecs = np.linalg.eigh(A)
        for j in range(G.n):
            residual = np.linalg.norm(A @ vecs[:, j] - vals[j] * vecs[:, j])
            assert residual <= 1e-8 * np.linalg.norm(vecs[:, j])


def test_trace_and_edge_sum(rng):
    for _ in range(25):
        n = rng.randint(2, 10)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.5:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        G = GraphView(n, adj)
        vals = spectrum(G)
        assert abs(vals.sum()) <= n * 1e-9
        assert abs((vals ** 2).sum() - 2 * G.edge_count()) <= n * 1e-8
        lap = laplacian_spectrum(G)
        assert lap[0] >= -1e-9
        zero_mult = int(np.sum(np.abs(lap) <= 1e-6))
        assert zero_mult == G.component_count()


def test_lambda1_edge_cases():
    G = GraphView(3, [0, 0, 0])
    assert lambda1(G) is None
    assert np.allclose(laplacian_spectrum(C4()), [0, 2, 2, 4], atol=1e-9)
    assert abs(lambda1(C4()) - 2.0) <= 1e-9


def test_cheeger_c4():
    res = cheeger_exact(C4())
    assert res.h == 1
    assert res.witness == (0, 1)


def test_cheeger_k4():
    res = cheeger_exact(K4())
    assert res.h == 2
    assert res.witness == (0, 1)


def test_cheeger_lower_bound_fixtures(rng):
    graphs = [C4(), K4(), GraphView.from_complex(fixture("petersen"))]
    for _ in range(15):
        n = rng.randint(3, 9)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.6:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        if all(adj):
            graphs.append(GraphView(n, adj))
    for G in graphs:
        lam = lambda1(G) or 0.0
        assert float(cheeger_exact(G).h) >= lam / 2 - 1e-9


def test_cheeger_caps():
    caps = FeasibilityCaps(cheeger_n=3)
    with pytest.raises(TooLarge):
        cheeger_exact(K4(), caps)


def test_alon_milman_k4_single_vertex():
    rep = alon_milman_report(K4(), [0])
    assert rep.cut == 3
    assert abs(rep.cut_bound - 3.0) <= 1e-9  # tight: (1*3/4) * 4
    assert rep.cut_bound_ok and rep.cheeger_bound_ok


def test_alon_milman_k4_pair_identity():
    rep = alon_milman_report(K4(), [0, 1])
    assert rep.internal_edges == 1
    assert rep.internal_edge_identity_ok  # 1 == (3*2 - 4) / 2


def test_alon_milman_c4_adjacent_pair_tight():
    rep = alon_milman_report(C4(), [0, 1])
    assert rep.cut == 2
    assert abs(rep.cut_bound - 2.0) <= 1e-9  # (2*2/4) * 2
    assert rep.cut_bound_ok


def test_alon_milman_non_regular_skips_identity():
    path = GraphView.from_edges(3, [(0, 1), (1, 2)])
    rep = alon_milman_report(path, [0])
    assert rep.internal_edge_identity_ok is None
    assert rep.cut_bound_ok


def test_alon_milman_invalid_subsets():
    with pytest.raises(InvalidSubset):
        alon_milman_report(K4(), [])
    with pytest.raises(InvalidSubset):
        alon_milman_report(K4(), [0, 1, 2, 3])
    with pytest.raises(InvalidSubset):
        alon_milman_report(K4(), [7])


def test_ramanujan_examples():
    ok, offender = is_ramanujan_graph(K4())
    assert ok and offender is None
    ok, _ = is_ramanujan_graph(GraphView.from_complex(fixture("petersen")))
    assert ok
    ok, _ = is_ramanujan_graph(C4())
    assert ok  # eigenvalues +-2 are trivial, 0 <= 2


def test_ramanujan_rejects_bad_inputs():
    path = GraphView.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(NotRegular):
        is_ramanujan_graph(path)
    two = GraphView.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(Disconnected):
        is_ramanujan_graph(two)


def test_graphview_validation():
    with pytest.raises(ValueError):
        GraphView(2, [1, 0])  # asymmetric
    with pytest.raises(ValueError):
        GraphView(1, [1])  # self loop
