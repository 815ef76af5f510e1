"""F2 cochain calculus: coboundaries, norms, expansion constants, systoles.

Cochains on dimension i are bitsets over the sorted face list X(i).  The
coboundary of an i-cochain sums it over the codimension-1 subfaces of each
(i+1)-face; its matrix has rows indexed by X(i+1) and columns by X(i).
Coboundary and cocycle spaces come out of the generic row reduction, and
the empty face makes the degree-0 boundary space equal {0, all-ones}
without special cases.

All norms are exact rationals.  Class norms minimise over a coset of the
coboundary space, cocycle-coset norms over a coset of the cocycle space;
both go through gf2.min_weight_in_coset and inherit its feasibility caps.

Expansion constants enumerate one representative per coset of the relevant
subspace (the coboundary of a representative is class-invariant), so the
search is over 2**(dim C - dim subspace) classes rather than all cochains.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .caps import FeasibilityCaps, get_caps
from .complexes import SimplicialComplex
from .errors import DimensionOutOfRange, SearchSpaceTooLarge
from .gf2 import F2Matrix, SubspaceBasis, min_weight_in_coset, reduce


@dataclass(frozen=True)
class Cochain:
    """An F2 cochain: dimension plus support bitset over X(dim)."""

    dim: int
    bits: int
    size: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError("support bits exceed the face count")

    @classmethod
    def zero(cls, X: SimplicialComplex, i: int) -> "Cochain":
        return cls(i, 0, X.n_faces(i))

    @classmethod
    def from_indices(cls, X: SimplicialComplex, i: int,
                     indices: Iterable[int]) -> "Cochain":
        bits = 0
        for j in indices:
            bits |= 1 << j
        return cls(i, bits, X.n_faces(i))

    @classmethod
    def from_faces(cls, X: SimplicialComplex, i: int,
                   faces: Iterable[Iterable[str]]) -> "Cochain":
        bits = 0
        for labels in faces:
            face = X.face_from_labels(labels)
            if len(face) != i + 1:
                raise DimensionOutOfRange(
                    f"face {labels!r} has dimension {len(face) - 1}, not {i}")
            bits |= 1 << X.face_index[i][face]
        return cls(i, bits, X.n_faces(i))

    @property
    def support_size(self) -> int:
        return bin(self.bits).count("1")

    def support_indices(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.size) if (self.bits >> j) & 1)

    def faces(self, X: SimplicialComplex) -> tuple[tuple[str, ...], ...]:
        return tuple(X.label_face(X.faces[self.dim][j])
                     for j in self.support_indices())

    def __add__(self, other: "Cochain") -> "Cochain":
        if (self.dim, self.size) != (other.dim, other.size):
            raise ValueError("cochain shape mismatch")
        return Cochain(self.dim, self.bits ^ other.bits, self.size)

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_json_dict(self, X: SimplicialComplex) -> dict:
        return {"dim": self.dim,
                "faces": sorted(list(f) for f in self.faces(X))}


def cochain_from_json_dict(X: SimplicialComplex, data: dict) -> Cochain:
    return Cochain.from_faces(X, int(data["dim"]), data["faces"])


def cochain_from_file(X: SimplicialComplex, path: str) -> Cochain:
    with open(path) as fh:
        return cochain_from_json_dict(X, json.load(fh))


# -- coboundary machinery -------------------------------------------------

def coboundary(X: SimplicialComplex, i: int) -> F2Matrix:
    """Coboundary matrix, rows X(i+1) by columns X(i); -1 <= i <= d-1."""
    if not (-1 <= i <= X.dim - 1):
        raise DimensionOutOfRange(f"coboundary dimension {i} not in [-1, {X.dim - 1}]")
    return _delta(X, i)


def _delta(X: SimplicialComplex, i: int) -> F2Matrix:
    # Internal variant that also serves i == d as the 0 x |X(d)| matrix.
    key = ("delta", i)
    if key not in X._cache:
        if i == X.dim:
            mat = F2Matrix.zeros(0, X.n_faces(i))
        else:
            mat = F2Matrix.zeros(X.n_faces(i + 1), X.n_faces(i))
            for r, subs in enumerate(X.subfaces[i + 1]):
                for c in subs:
                    mat.data[r, c] = 1
        X._cache[key] = mat
    return X._cache[key]


def _delta_columns(X: SimplicialComplex, i: int) -> list[int]:
    """Column bitsets of the coboundary matrix (image of each basis cochain)."""
    key = ("delta_cols", i)
    if key not in X._cache:
        cols = [0] * X.n_faces(i)
        if i < X.dim:
            for r, subs in enumerate(X.subfaces[i + 1]):
                for c in subs:
                    cols[c] |= 1 << r
        X._cache[key] = cols
    return X._cache[key]


def apply_coboundary(X: SimplicialComplex, alpha: Cochain) -> Cochain:
    """delta(alpha): the (i+1)-faces with an odd number of support subfaces."""
    if not (-1 <= alpha.dim <= X.dim - 1):
        raise DimensionOutOfRange(
            f"coboundary dimension {alpha.dim} not in [-1, {X.dim - 1}]")
    bits = 0
    cols = _delta_columns(X, alpha.dim)
    rem = alpha.bits
    while rem:
        low = rem & (-rem)
        bits ^= cols[low.bit_length() - 1]
        rem ^= low
    return Cochain(alpha.dim + 1, bits, X.n_faces(alpha.dim + 1))


def _reduction(X: SimplicialComplex, i: int):
    key = ("reduce", i)
    if key not in X._cache:
        X._cache[key] = reduce(_delta(X, i))
    return X._cache[key]


def b_basis(X: SimplicialComplex, i: int) -> SubspaceBasis:
    """Basis of the coboundary space in dimension i (image of delta_{i-1})."""
    if i == -1:
        return SubspaceBasis.empty(X.n_faces(-1))
    return _reduction(X, i - 1).image_basis


def z_basis(X: SimplicialComplex, i: int) -> SubspaceBasis:
    """Basis of the cocycle space in dimension i (kernel of delta_i)."""
    return _reduction(X, i).kernel_basis


def cohomology_dim(X: SimplicialComplex, i: int) -> int:
    """dim Ker(delta_i) - dim Im(delta_{i-1}) for 0 <= i <= d."""
    if not (0 <= i <= X.dim):
        raise DimensionOutOfRange(f"cohomology dimension {i} not in [0, {X.dim}]")
    return z_basis(X, i).dim - b_basis(X, i).dim


def weight_fractions(X: SimplicialComplex, i: int) -> list[Fraction]:
    nums, denom = X.weight_numerators(i)
    return [Fraction(c, denom) for c in nums]


def norm(X: SimplicialComplex, alpha: Cochain) -> Fraction:
    """Weighted support norm: sum of face weights over the support."""
    nums, denom = X.weight_numerators(alpha.dim)
    total = sum(nums[j] for j in alpha.support_indices())
    return Fraction(total, denom)


@dataclass(frozen=True)
class CochainNorms:
    support_size: int
    norm: Fraction
    class_norm: Fraction
    cocycle_norm: Fraction


def norms(X: SimplicialComplex, alpha: Cochain,
          caps: FeasibilityCaps | None = None) -> CochainNorms:
    """Support size, norm, min norm mod coboundaries, min norm mod cocycles."""
    w = weight_fractions(X, alpha.dim)
    class_min = min_weight_in_coset(alpha.bits, b_basis(X, alpha.dim), w, caps)
    cocycle_min = min_weight_in_coset(alpha.bits, z_basis(X, alpha.dim), w, caps)
    return CochainNorms(alpha.support_size, norm(X, alpha),
                        class_min.norm, cocycle_min.norm)


# -- expansion constants ---------------------------------------------------

def _class_scan(X: SimplicialComplex, i: int, sub: SubspaceBasis,
                caps: FeasibilityCaps) -> Iterator[tuple[int, int, int]]:
    """Yield (rep_bits, delta_bits, delta_weight_numerator) for every nonzero
    class of C^i modulo sub.

    The transversal is the span of the standard vectors at the non-pivot
    coordinates of sub, walked in Gray-code order with incremental updates.
    """
    m = X.n_faces(i)
    pivot_set = set(sub.pivots)
    free = [c for c in range(m) if c not in pivot_set]
    t = len(free)
    if t > caps.exhaustive_bits:
        raise SearchSpaceTooLarge(
            f"class count 2**{t} exceeds 2**{caps.exhaustive_bits}")
    cols = _delta_columns(X, i)
    w1, _ = X.weight_numerators(i + 1) if i < X.dim else ([], 1)
    colbits = [[b for b in range(max(cols[c].bit_length(), 1)) if (cols[c] >> b) & 1]
               for c in free]
    rep = 0
    dbits = 0
    dnum = 0
    for g in range(1, 1 << t):
        j = (g & -g).bit_length() - 1
        rep ^= 1 << free[j]
        dbits ^= cols[free[j]]
        for b in colbits[j]:
            if (dbits >> b) & 1:
                dnum += w1[b]
            else:
                dnum -= w1[b]
        yield rep, dbits, dnum


@dataclass(frozen=True)
class ExpansionConstants:
    """Expansion data at one dimension.

    epsilon is 0 whenever the cohomology is non-trivial (some non-trivial
    class has zero coboundary); that convention is recorded in reports.
    """

    i: int
    dim_h: int
    epsilon: Fraction | None
    epsilon_tilde: Fraction | None
    mu: Fraction | None
    epsilon_witness: Cochain | None
    mu_witness: Cochain | None


def _cocycle_outside_b(X: SimplicialComplex, i: int) -> int:
    B = b_basis(X, i)
    for z in z_basis(X, i).bit_rows():
        if not B.contains(z):
            return z
    raise AssertionError("cohomology dimension positive but no witness found")


def expansion_constants(X: SimplicialComplex, i: int,
                        caps: FeasibilityCaps | None = None
                        ) -> ExpansionConstants:
    """Coboundary expansion, cocycle expansion and cofilling at dimension i.

    Exact minima / maxima by enumerating class representatives; the ratio
    of a class is well defined because the coboundary is constant on it.
    """
    caps = get_caps(caps)
    if not (0 <= i <= X.dim - 1):
        raise DimensionOutOfRange(f"expansion dimension {i} not in [0, {X.dim - 1}]")
    dim_h = cohomology_dim(X, i)
    m = X.n_faces(i)
    B = b_basis(X, i)
    Z = z_basis(X, i)
    w = weight_fractions(X, i)
    d1 = X.weight_denominator(i + 1)

    epsilon: Fraction | None = None
    epsilon_witness: Cochain | None = None
    if dim_h > 0:
        epsilon = Fraction(0)
        epsilon_witness = Cochain(i, _cocycle_outside_b(X, i), m)
    else:
        best: tuple[Fraction, int] | None = None
        for rep, _, dnum in _class_scan(X, i, B, caps):
            class_norm = min_weight_in_coset(rep, B, w, caps).norm
            ratio = Fraction(dnum, d1) / class_norm
            if best is None or ratio < best[0]:
                best = (ratio, rep)
        if best is not None:
            epsilon = best[0]
            epsilon_witness = Cochain(i, best[1], m)

    epsilon_tilde: Fraction | None = None
    mu: Fraction | None = None
    mu_witness: Cochain | None = None
    best_t: Fraction | None = None
    best_m: tuple[Fraction, int] | None = None
    for rep, _, dnum in _class_scan(X, i, Z, caps):
        fill_norm = min_weight_in_coset(rep, Z, w, caps).norm
        dnorm = Fraction(dnum, d1)
        ratio = dnorm / fill_norm
        inverse = fill_norm / dnorm
        if best_t is None or ratio < best_t:
            best_t = ratio
        if best_m is None or inverse > best_m[0]:
            best_m = (inverse, rep)
    if best_t is not None:
        epsilon_tilde = best_t
    if best_m is not None:
        mu = best_m[0]
        mu_witness = Cochain(i, best_m[1], m)

    return ExpansionConstants(i, dim_h, epsilon, epsilon_tilde, mu,
                              epsilon_witness, mu_witness)


@dataclass(frozen=True)
class SystoleResult:
    norm: Fraction
    support_size: int
    witness: Cochain


def systole(X: SimplicialComplex, i: int,
            caps: FeasibilityCaps | None = None) -> SystoleResult | None:
    """Minimum norm over cocycles that are not coboundaries; None if the
    cohomology vanishes."""
    caps = get_caps(caps)
    if not (0 <= i <= X.dim - 1):
        raise DimensionOutOfRange(f"systole dimension {i} not in [0, {X.dim - 1}]")
    if cohomology_dim(X, i) == 0:
        return None
    m = X.n_faces(i)
    B = b_basis(X, i)
    w = weight_fractions(X, i)
    # Extend B to a basis of Z; nonzero combinations of the extension pick
    # one representative per non-trivial cohomology class.
    extension: list[int] = []
    stack = list(B.bit_rows())
    for z in z_basis(X, i).bit_rows():
        if _independent(stack, z, m):
            stack.append(z)
            extension.append(z)
    best: tuple[Fraction, int] | None = None
    for g in range(1, 1 << len(extension)):
        combo = 0
        for j in range(len(extension)):
            if (g >> j) & 1:
                combo ^= extension[j]
        found = min_weight_in_coset(combo, B, w, caps)
        key = (found.norm, found.vector)
        if best is None or found.norm < best[0] or (
                found.norm == best[0] and _lex_less(found.vector, best[1])):
            best = key
    assert best is not None
    witness = Cochain(i, best[1], m)
    return SystoleResult(best[0], witness.support_size, witness)


def _independent(rows: list[int], vec: int, m: int) -> bool:
    basis = SubspaceBasis.from_bit_rows(rows, m) if rows else SubspaceBasis.empty(m)
    return not basis.contains(vec)


def _lex_less(a: int, b: int) -> bool:
    if a == b:
        return False
    d = a ^ b
    return (a & (d & -d)) == 0


@dataclass(frozen=True)
class GromovCertificate:
    """Hypothesis check for the cofilling-plus-systole overlap criterion."""

    mu_bound: Fraction
    eta_bound: Fraction
    condition1: dict[int, bool]
    condition2: dict[int, bool]
    mu_values: dict[int, Fraction]
    systole_values: dict[int, Fraction | None]
    witnesses: dict[str, dict[int, Cochain]]

    @property
    def passed(self) -> bool:
        return all(self.condition1.values()) and all(self.condition2.values())


def certify_gromov(X: SimplicialComplex, mu: Fraction, eta: Fraction,
                   caps: FeasibilityCaps | None = None) -> GromovCertificate:
    """Check mu_i <= mu for all i and systole_i >= eta where cohomology is
    non-trivial (the systole condition is vacuous when it vanishes)."""
    mu = Fraction(mu)
    eta = Fraction(eta)
    if mu <= 0 or eta <= 0:
        raise ValueError("bounds must be positive")
    cond1: dict[int, bool] = {}
    cond2: dict[int, bool] = {}
    mu_values: dict[int, Fraction] = {}
    sys_values: dict[int, Fraction | None] = {}
    witnesses: dict[str, dict[int, Cochain]] = {"mu": {}, "systole": {}}
    for i in range(0, X.dim):
        ec = expansion_constants(X, i, caps)
        mu_values[i] = ec.mu
        cond1[i] = ec.mu is not None and ec.mu <= mu
        if ec.mu_witness is not None:
            witnesses["mu"][i] = ec.mu_witness
        sys_i = systole(X, i, caps)
        if sys_i is None:
            cond2[i] = True
            sys_values[i] = None
        else:
            cond2[i] = sys_i.norm >= eta
            sys_values[i] = sys_i.norm
            witnesses["systole"][i] = sys_i.witness
    return GromovCertificate(mu, eta, cond1, cond2, mu_values, sys_values,
                             witnesses)
