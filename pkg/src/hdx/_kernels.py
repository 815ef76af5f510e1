"""Hot enumeration kernels.

Two exponential scans dominate runtime at the edge of the configured caps:

* minimum-weight search over a coset of an F2 subspace (Gray-code walk over
  all 2**k basis combinations with incremental weight updates), and
* the exhaustive Cheeger cut scan over all 2**(n-1) vertex subsets.

Each kernel has a numba @njit implementation and a pure numpy fallback; the
active path is chosen by the HDX_JIT env flag (see hdx._jit).  Both paths
are exact over the integers and must agree bit for bit, including the
lexicographic tie-breaks; tests and benchmarks/bench_kernels.py compare
them directly.
"""

from __future__ import annotations

import numpy as np

from ._jit import JIT_ENABLED, njit

_CHUNK = 1 << 13

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_U0 = np.uint64(0)
_U1 = np.uint64(1)


def pack_words(bits: int, words: int) -> np.ndarray:
    """Little-endian uint64 words of a python-int bitset."""
    out = np.zeros(words, dtype=np.uint64)
    mask = (1 << 64) - 1
    for t in range(words):
        out[t] = (bits >> (64 * t)) & mask
    return out


def unpack_words(arr: np.ndarray) -> int:
    bits = 0
    for t in range(arr.shape[0]):
        bits |= int(arr[t]) << (64 * t)
    return bits


def bits_to_u8(bits: int, m: int) -> np.ndarray:
    return np.array([(bits >> j) & 1 for j in range(m)], dtype=np.uint8)


def u8_to_bits(row: np.ndarray) -> int:
    bits = 0
    for j in np.nonzero(row)[0]:
        bits |= 1 << int(j)
    return bits


@njit(cache=True)
def _popcount64(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def _lex_less_words(a, b, words):
    # First differing bit index decides; the vector with a 0 there is smaller.
    for t in range(words):
        d = a[t] ^ b[t]
        if d != _U0:
            low = d & (~d + _U1)
            return (a[t] & low) == _U0
    return False


@njit(cache=True)
def _coset_scan_jit(basis, target, weights, m):
    """Exact min of sum(weights[j] for set bits) over target + span(basis).

    basis: (k, words) uint64, target: (words,) uint64, weights: (m,) int64.
    Gray-code walk; ties resolved toward the lexicographically smallest
    vector (coordinate 0 most significant).
    Returns (best_weight, best_vector_words).
    """
    k = basis.shape[0]
    words = target.shape[0]
    cur = target.copy()
    w = np.int64(0)
    for t in range(words):
        word = cur[t]
        while word != _U0:
            low = word & (~word + _U1)
            w += weights[64 * t + _popcount64(low - _U1)]
            word ^= low
    best = w
    best_vec = cur.copy()
    total = np.int64(1) << k
    for g in range(1, total):
        j = 0
        while ((g >> j) & 1) == 0:
            j += 1
        for t in range(words):
            b = basis[j, t]
            if b == _U0:
                continue
            newv = cur[t] ^ b
            gained = newv & b
            lost = cur[t] & b
            cur[t] = newv
            while gained != _U0:
                low = gained & (~gained + _U1)
                w += weights[64 * t + _popcount64(low - _U1)]
                gained ^= low
            while lost != _U0:
                low = lost & (~lost + _U1)
                w -= weights[64 * t + _popcount64(low - _U1)]
                lost ^= low
        if w < best or (w == best and _lex_less_words(cur, best_vec, words)):
            best = w
            for t in range(words):
                best_vec[t] = cur[t]
    return best, best_vec


def _coset_scan_numpy(basis_u8: np.ndarray, target_u8: np.ndarray,
                      weights: np.ndarray) -> tuple[int, np.ndarray]:
    """Chunked dense enumeration; same contract as the jit scan."""
    k = basis_u8.shape[0]
    best_w = int(weights @ target_u8.astype(np.int64))
    best_row = target_u8.copy()
    total = 1 << k
    cols = np.arange(k, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        ids = np.arange(start, stop, dtype=np.int64)
        coeffs = ((ids[:, None] >> cols) & 1).astype(np.uint8)
        cands = (coeffs @ basis_u8) & 1
        cands ^= target_u8
        ws = cands.astype(np.int64) @ weights
        mn = int(ws.min())
        if mn > best_w:
            continue
        for idx in np.nonzero(ws == mn)[0]:
            row = cands[idx]
            row_bytes = row.tobytes()
            if mn < best_w or row_bytes < best_row.tobytes():
                best_w = mn
                best_row = row.copy()
    return best_w, best_row


def coset_min_int(basis_bits: list[int], target_bits: int, m: int,
                  weights: list[int], path: str | None = None) -> tuple[int, int]:
    """Dispatch the exhaustive coset scan; bitsets as python ints.

    weights must be non-negative int64-safe numerators.  Returns
    (min_weight, argmin_bits).
    """
    if path is None:
        path = "jit" if JIT_ENABLED else "numpy"
    k = len(basis_bits)
    w = np.asarray(weights, dtype=np.int64)
    if path == "jit":
        words = max(1, (m + 63) // 64)
        basis = np.zeros((max(k, 1), words), dtype=np.uint64)
        for r, bits in enumerate(basis_bits):
            basis[r] = pack_words(bits, words)
        wfull = np.zeros(64 * words, dtype=np.int64)
        wfull[:m] = w
        best, vec = _coset_scan_jit(basis[:k] if k else basis[:0],
                                    pack_words(target_bits, words), wfull, m)
        return int(best), unpack_words(vec)
    basis_u8 = np.zeros((k, m), dtype=np.uint8)
    for r, bits in enumerate(basis_bits):
        basis_u8[r] = bits_to_u8(bits, m)
    best, row = _coset_scan_numpy(basis_u8, bits_to_u8(target_bits, m), w)
    return int(best), u8_to_bits(row)


@njit(cache=True)
def _cheeger_scan_jit(adj, deg, n):
    """Exhaustive cut scan over all subsets containing vertex 0.

    adj: (n,) int64 neighbour bitmasks.  Minimises cut/min(|W|,|Wbar|) with
    exact cross-multiplied comparisons; ties resolved toward the witness
    whose sorted vertex tuple is lexicographically least.
    Returns (cut, size, mask) of the winner.
    """
    mask = np.int64(1)
    size = np.int64(1)
    cut = deg[0]
    best_cut = cut
    best_den = np.int64(1)
    best_mask = mask
    total = np.int64(1) << (n - 1)
    for s in range(1, total):
        j = 0
        while ((s >> j) & 1) == 0:
            j += 1
        v = j + 1
        bit = np.int64(1) << v
        inside = _popcount64(np.uint64(adj[v] & (mask & ~bit)))
        if mask & bit:
            mask ^= bit
            size -= 1
            cut -= deg[v] - 2 * inside
        else:
            mask |= bit
            size += 1
            cut += deg[v] - 2 * inside
        if size == n:
            continue
        den = size if size <= n - size else n - size
        better = cut * best_den < best_cut * den
        if not better and cut * best_den == best_cut * den:
            d = mask ^ best_mask
            low = d & (-d)
            better = (mask & low) != 0
        if better:
            best_cut = cut
            best_den = den
            best_mask = mask
    best_size = _popcount64(np.uint64(best_mask))
    return best_cut, best_size, best_mask


def _cheeger_scan_numpy(adj_bits: list[int], n: int) -> tuple[int, int, int]:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if (adj_bits[u] >> v) & 1]
    total = 1 << (n - 1)
    best = None  # (cut, den, mask)
    shifts = np.arange(n, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        masks = (np.arange(start, stop, dtype=np.int64) << 1) | 1
        memb = ((masks[:, None] >> shifts) & 1).astype(np.uint8)
        sizes = memb.sum(axis=1).astype(np.int64)
        valid = sizes < n
        if not valid.any():
            continue
        cut = np.zeros(masks.shape[0], dtype=np.int64)
        for u, v in edges:
            cut += memb[:, u] ^ memb[:, v]
        den = np.minimum(sizes, n - sizes)
        ratio = np.full(masks.shape[0], np.inf)
        ratio[valid] = cut[valid] / den[valid]
        cand = np.nonzero(ratio <= ratio.min() + 1e-12)[0]
        for idx in cand:
            item = (int(cut[idx]), int(den[idx]), int(masks[idx]))
            if best is None or _frac_less(item, best):
                best = item
    cut, _, mask = best
    return cut, bin(mask).count("1"), mask


def _frac_less(a: tuple[int, int, int], b: tuple[int, int, int]) -> bool:
    lhs = a[0] * b[1]
    rhs = b[0] * a[1]
    if lhs != rhs:
        return lhs < rhs
    d = a[2] ^ b[2]
    if d == 0:
        return False
    return (a[2] & (d & -d)) != 0


def cheeger_scan(adj_bits: list[int], n: int,
                 path: str | None = None) -> tuple[int, int, int]:
    """Dispatch the Cheeger subset scan; returns (cut, |W|, W bitmask)."""
    if path is None:
        path = "jit" if JIT_ENABLED else "numpy"
    if path == "jit":
        adj = np.asarray(adj_bits, dtype=np.int64)
        deg = np.array([bin(b).count("1") for b in adj_bits], dtype=np.int64)
        cut, size, mask = _cheeger_scan_jit(adj, deg, n)
        return int(cut), int(size), int(mask)
    return _cheeger_scan_numpy(adj_bits, n)
