"""Cross-path equivalence of the jitted kernels and their numpy fallbacks."""

import itertools

import pytest

from conftest import coset_min_reference
from hdx import _kernels
from hdx._jit import JIT_ENABLED
from hdx.gf2 import SubspaceBasis

paths = ["numpy"] + (["jit"] if JIT_ENABLED else [])


@pytest.mark.parametrize("path", paths)
def test_coset_paths_match_reference(path, rng):
    for _ in range(80):
        m = rng.randrange(2, 18)
        k = rng.randrange(0, min(m, 9) + 1)
        rows = []
        while len(rows) < k:
            v = rng.randrange(1, 1 << m)
            try:
                SubspaceBasis.from_bit_rows(rows + [v], m)
            except ValueError:
                continue
            rows.append(v)
        target = rng.randrange(0, 1 << m)
        weights = [rng.randint(1, 50) for _ in range(m)]
        expect_w, expect_v = coset_min_reference(target, rows, weights)
        got_w, got_v = _kernels.coset_min_int(rows, target, m, weights,
                                              path=path)
        assert (got_w, got_v) == (expect_w, expect_v)


@pytest.mark.skipif(not JIT_ENABLED, reason="numba disabled")
def test_coset_paths_agree_with_ties(rng):
    # uniform weights force many ties; both paths must break them the same
    for _ in range(40):
        m = rng.randrange(2, 12)
        k = rng.randrange(1, min(m, 7) + 1)
        rows = []
        while len(rows) < k:
            v = rng.randrange(1, 1 << m)
            try:
                SubspaceBasis.from_bit_rows(rows + [v], m)
            except ValueError:
                continue
            rows.append(v)
        target = rng.randrange(0, 1 << m)
        weights = [1] * m
        a = _kernels.coset_min_int(rows, target, m, weights, path="jit")
        b = _kernels.coset_min_int(rows, target, m, weights, path="numpy")
        assert a == b


def test_coset_multiword():
    # ambient beyond one 64-bit word
    m = 70
    rows = [(1 << 65) | 1, (1 << 69) | (1 << 3)]
    weights = [1] * m
    for path in paths:
        w, v = _kernels.coset_min_int(rows, (1 << 65) | 1, m, weights,
                                      path=path)
        assert (w, v) == (0, 0)


def _cheeger_brute(adj, n):
    best = None
    for r in range(1, n):
        for comb in itertools.combinations(range(n), r):
            mask = sum(1 << v for v in comb)
            cut = sum(1 for u in range(n) for v in range(u + 1, n)
                      if ((adj[u] >> v) & 1)
                      and ((mask >> u) & 1) != ((mask >> v) & 1))
            item = (cut, min(r, n - r), mask)
            if best is None or _kernels._frac_less(item, best):
                best = item
    return best


@pytest.mark.parametrize("path", paths)
def test_cheeger_paths_match_brute(path, rng):
    for _ in range(25):
        n = rng.randrange(3, 9)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.55:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        if not all(adj):
            continue
        cut, size, mask = _kernels.cheeger_scan(adj, n, path=path)
        bcut, bden, bmask = _cheeger_brute(adj, n)
        assert (cut, min(size, n - size), mask) == (bcut, bden, bmask)


@pytest.mark.skipif(not JIT_ENABLED, reason="numba disabled")
def test_cheeger_paths_agree(rng):
    for _ in range(20):
        n = rng.randrange(3, 11)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.5:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        if not all(adj):
            continue
        assert (_kernels.cheeger_scan(adj, n, path="jit")
                == _kernels.cheeger_scan(adj, n, path="numpy"))


def test_pack_unpack_roundtrip(rng):
    for _ in range(50):
        m = rng.randrange(1, 200)
        bits = rng.randrange(0, 1 << m)
        words = (m + 63) // 64
        assert _kernels.unpack_words(_kernels.pack_words(bits, words)) == bits
        row = _kernels.bits_to_u8(bits, m)
        assert _kernels.u8_to_bits(row) == bits
