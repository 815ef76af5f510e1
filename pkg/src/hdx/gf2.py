"""Exact linear algebra over F2 and minimum-weight coset search.

Vectors cross the module boundary as python-int bitsets (bit j = coordinate
j); matrices are dense uint8 arrays.  The coset search is the workhorse
behind class norms: it is exhaustive up to the configured cap, switches to
an exact meet-in-the-middle join above it, and refuses instances beyond the
pair cap instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from . import _kernels
from .caps import FeasibilityCaps, get_caps
from .errors import SearchSpaceTooLarge

_INT64_SAFE = 1 << 62


class F2Matrix:
    """Dense matrix over F2 with stable row/column indexing."""

    __slots__ = ("data",)

    def __init__(self, data) -> None:
        arr = np.asarray(data, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise ValueError("F2Matrix needs a 2-d array")
        self.data = arr

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "F2Matrix":
        return cls(np.zeros((nrows, ncols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_bit_rows(cls, rows: Sequence[int], ncols: int) -> "F2Matrix":
        arr = np.zeros((len(rows), ncols), dtype=np.uint8)
        for r, bits in enumerate(rows):
            arr[r] = _kernels.bits_to_u8(bits, ncols)
        return cls(arr)

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    def row_bits(self, r: int) -> int:
        return _kernels.u8_to_bits(self.data[r])

    def apply(self, vec_bits: int) -> int:
        """Matrix-vector product over F2, bitset in, bitset out."""
        vec = _kernels.bits_to_u8(vec_bits, self.ncols)
        out = (self.data.astype(np.int64) @ vec.astype(np.int64)) & 1
        return _kernels.u8_to_bits(out.astype(np.uint8))

    def matmul(self, other: "F2Matrix") -> "F2Matrix":
        prod = (self.data.astype(np.int64) @ other.data.astype(np.int64)) & 1
        return F2Matrix(prod.astype(np.uint8))

    def is_zero(self) -> bool:
        return not self.data.any()

    def __eq__(self, other) -> bool:
        return isinstance(other, F2Matrix) and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        return f"F2Matrix({self.nrows}x{self.ncols})"


def _rref(arr: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; pivots chosen at the lowest free column."""
    a = arr.copy()
    m, n = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] ^= a[r]
        pivots.append(c)
        r += 1
    return a, pivots


class SubspaceBasis:
    """Linearly independent spanning set of a subspace of F2^m."""

    __slots__ = ("matrix", "_rref", "_pivots")

    def __init__(self, matrix: np.ndarray, ambient: int | None = None) -> None:
        arr = np.asarray(matrix, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise ValueError("basis must be a 2-d array")
        rref, pivots = _rref(arr)
        if len(pivots) != arr.shape[0]:
            raise ValueError("basis vectors are linearly dependent")
        self.matrix = arr
        self._rref = rref
        self._pivots = tuple(pivots)
        if ambient is not None and ambient != arr.shape[1]:
            raise ValueError("ambient dimension mismatch")

    @classmethod
    def from_bit_rows(cls, rows: Sequence[int], ambient: int) -> "SubspaceBasis":
        return cls(F2Matrix.from_bit_rows(rows, ambient).data)

    @classmethod
    def empty(cls, ambient: int) -> "SubspaceBasis":
        return cls(np.zeros((0, ambient), dtype=np.uint8))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def ambient(self) -> int:
        return self.matrix.shape[1]

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def row_bits(self, r: int) -> int:
        return _kernels.u8_to_bits(self.matrix[r])

    def bit_rows(self) -> list[int]:
        return [self.row_bits(r) for r in range(self.dim)]

    def reduce_mod(self, vec_bits: int) -> int:
        """Canonical coset representative: zero out all pivot coordinates."""
        vec = _kernels.bits_to_u8(vec_bits, self.ambient)
        for r, c in enumerate(self._pivots):
            if vec[c]:
                vec ^= self._rref[r]
        return _kernels.u8_to_bits(vec)

    def contains(self, vec_bits: int) -> bool:
        return self.reduce_mod(vec_bits) == 0


@dataclass(frozen=True)
class Reduction:
    rank: int
    pivots: tuple[int, ...]
    rref: F2Matrix
    kernel_basis: SubspaceBasis
    image_basis: SubspaceBasis


def reduce(matrix: F2Matrix) -> Reduction:
    """Row reduce: rank, kernel basis (null space), image basis (column space).

    Pivot choice is deterministic (lowest available index), so bases are
    stable across calls.  rank + dim(kernel) == ncols.
    """
    rref, pivots = _rref(matrix.data)
    m, n = matrix.data.shape
    rank = len(pivots)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    kernel_rows = np.zeros((len(free_cols), n), dtype=np.uint8)
    for idx, c in enumerate(free_cols):
        kernel_rows[idx, c] = 1
        for r, pc in enumerate(pivots):
            kernel_rows[idx, pc] = rref[r, c]
    image_rows = matrix.data[:, pivots].T.copy()
    return Reduction(
        rank=rank,
        pivots=tuple(pivots),
        rref=F2Matrix(rref),
        kernel_basis=SubspaceBasis(kernel_rows, ambient=n),
        image_basis=SubspaceBasis(image_rows, ambient=m),
    )


def solve(matrix: F2Matrix, rhs_bits: int) -> int | None:
    """One solution x of A x = b over F2 (free variables zero), else None."""
    m, n = matrix.data.shape
    rhs = _kernels.bits_to_u8(rhs_bits, m)
    aug = np.concatenate([matrix.data, rhs[:, None]], axis=1)
    rref, pivots = _rref(aug)
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.uint8)
    for r, c in enumerate(pivots):
        x[c] = rref[r, n]
    return _kernels.u8_to_bits(x)


def _lex_less_bits(a: int, b: int) -> bool:
    """Coordinate-0-first lexicographic order on bitsets."""
    if a == b:
        return False
    d = a ^ b
    low = d & (-d)
    return (a & low) == 0


@dataclass(frozen=True)
class CosetMinimum:
    norm: Fraction
    vector: int
    method: str


def _weights_numerators(weights: Sequence[Fraction]) -> tuple[list[int], int]:
    denom = lcm(*(w.denominator for w in weights)) if weights else 1
    nums = [int(w.numerator * (denom // w.denominator)) for w in weights]
    return nums, denom


def _coset_min_python(target: int, basis_rows: list[int], weights: list) -> tuple:
    """Gray-code scan with arbitrary-precision weights (overflow fallback)."""
    bit_lists = [[j for j in range(max(b.bit_length(), 1)) if (b >> j) & 1]
                 for b in basis_rows]
    cur = target
    w = sum(weights[j] for j in range(target.bit_length()) if (target >> j) & 1)
    best_w, best_v = w, cur
    k = len(basis_rows)
    for g in range(1, 1 << k):
        j = (g & -g).bit_length() - 1
        cur ^= basis_rows[j]
        for b in bit_lists[j]:
            if (cur >> b) & 1:
                w += weights[b]
            else:
                w -= weights[b]
        if w < best_w or (w == best_w and _lex_less_bits(cur, best_v)):
            best_w, best_v = w, cur
    return best_w, best_v


def _coset_min_mitm(target: int, basis: SubspaceBasis,
                    weights_int: list[int], int64_safe: bool) -> tuple[int, int]:
    """Exact meet-in-the-middle over a coordinate split.

    Elements of target + span(basis) are exactly the v with H v = H target,
    H a parity-check of the span.  Splitting the coordinates in half, every
    coset element factors uniquely into (left, right) with matching partial
    syndromes, so hashing all 2**(m/2) left half-sums and joining against
    the right half covers all 2**m pairs implicitly.
    """
    m = basis.ambient
    h = m // 2
    parity = reduce(F2Matrix(basis.matrix)).kernel_basis.matrix  # (r, m)
    target_u8 = _kernels.bits_to_u8(target, m)
    syndrome = (parity.astype(np.int64) @ target_u8.astype(np.int64)) & 1
    wdtype = np.int64 if int64_safe else object
    w = np.asarray(weights_int, dtype=wdtype)

    def _enumerate(ncols: int, h_cols: np.ndarray, w_cols: np.ndarray):
        ids = np.arange(1 << ncols, dtype=np.int64)
        bits = ((ids[:, None] >> np.arange(ncols, dtype=np.int64)) & 1).astype(np.uint8)
        syn = (bits.astype(np.int64) @ h_cols.T.astype(np.int64)) & 1
        wsum = bits.astype(wdtype) @ w_cols
        return bits, syn.astype(np.uint8), wsum

    left_bits, left_syn, left_w = _enumerate(h, parity[:, :h], w[:h])
    table: dict[bytes, tuple[int, bytes]] = {}
    for idx in range(left_bits.shape[0]):
        key = left_syn[idx].tobytes()
        entry = (int(left_w[idx]), left_bits[idx].tobytes())
        old = table.get(key)
        if old is None or entry < old:
            table[key] = entry

    right_bits, right_syn, right_w = _enumerate(m - h, parity[:, h:], w[h:])
    need = right_syn ^ syndrome.astype(np.uint8)
    best: tuple[int, bytes] | None = None
    for idx in range(right_bits.shape[0]):
        hit = table.get(need[idx].tobytes())
        if hit is None:
            continue
        cand = (hit[0] + int(right_w[idx]), hit[1] + right_bits[idx].tobytes())
        if best is None or cand < best:
            best = cand
    assert best is not None  # the coset is never empty
    vec = np.frombuffer(best[1], dtype=np.uint8)
    return best[0], _kernels.u8_to_bits(vec)


def min_weight_in_coset(target: int, basis: SubspaceBasis,
                        weights: Sequence[Fraction],
                        caps: FeasibilityCaps | None = None,
                        method: str = "auto") -> CosetMinimum:
    """Exact minimum of the weighted support over target + span(basis).

    Ties break toward the lexicographically smallest argmin (coordinate 0
    first).  method: "auto" picks exhaustive up to caps.exhaustive_bits and
    meet-in-the-middle up to caps.mitm_pair_bits implicit pairs; forcing
    "exhaustive"/"mitm" is supported for cross-checking.
    Raises SearchSpaceTooLarge beyond the caps.
    """
    caps = get_caps(caps)
    m = basis.ambient
    if len(weights) != m:
        raise ValueError("weights length must match the ambient dimension")
    weights = [Fraction(w) for w in weights]
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    if target >> m:
        raise ValueError("target has bits beyond the ambient dimension")
    k = basis.dim
    nums, denom = _weights_numerators(weights)

    if basis.contains(target):
        return CosetMinimum(Fraction(0), 0, "membership")
    if k == 0:
        total = sum(nums[j] for j in range(m) if (target >> j) & 1)
        return CosetMinimum(Fraction(total, denom), target, "trivial")

    int64_safe = sum(nums) < _INT64_SAFE
    if method == "auto":
        if k <= caps.exhaustive_bits:
            method = "exhaustive"
        elif m <= caps.mitm_pair_bits:
            method = "mitm"
        else:
            raise SearchSpaceTooLarge(
                f"coset dim {k} exceeds 2**{caps.exhaustive_bits} and ambient "
                f"{m} exceeds the 2**{caps.mitm_pair_bits} pair cap")

    if method == "exhaustive":
        if k > caps.exhaustive_bits:
            raise SearchSpaceTooLarge(
                f"coset dim {k} exceeds 2**{caps.exhaustive_bits}")
        rows = basis.bit_rows()
        if int64_safe:
            best, vec = _kernels.coset_min_int(rows, target, m, nums)
        else:
            best, vec = _coset_min_python(target, rows, nums)
        return CosetMinimum(Fraction(best, denom), vec, "exhaustive")

    if method == "mitm":
        if m > caps.mitm_pair_bits:
            raise SearchSpaceTooLarge(
                f"ambient {m} exceeds the 2**{caps.mitm_pair_bits} pair cap")
        best, vec = _coset_min_mitm(target, basis, nums, int64_safe)
        return CosetMinimum(Fraction(best, denom), vec, "mitm")

    raise ValueError(f"unknown method {method!r}")
