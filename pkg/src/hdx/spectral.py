"""Graph spectra, exact Cheeger constants and eigenvalue-based cut bounds.

Eigenvalues are the only floating-point quantities in the package; every
spectral comparison carries an explicit 1e-9 tolerance band.  Cut counts,
Cheeger ratios and edge counts stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .caps import FeasibilityCaps, get_caps
from .complexes import SimplicialComplex, build_from_facets
from .errors import Disconnected, InvalidSubset, NotRegular, TooLarge

SPECTRAL_TOL = 1e-9


class GraphView:
    """Undirected simple graph: adjacency bitmasks plus degree sequence."""

    __slots__ = ("n", "adj", "labels", "_cache")

    def __init__(self, n: int, adj: Sequence[int],
                 labels: Sequence[str] | None = None) -> None:
        if len(adj) != n:
            raise ValueError("adjacency length mismatch")
        for v, row in enumerate(adj):
            if (row >> v) & 1:
                raise ValueError("self-loops are not allowed")
            if row >> n:
                raise ValueError("adjacency bits beyond vertex count")
        for u in range(n):
            for v in range(u + 1, n):
                if ((adj[u] >> v) & 1) != ((adj[v] >> u) & 1):
                    raise ValueError("adjacency must be symmetric")
        self.n = n
        self.adj = tuple(int(a) for a in adj)
        self.labels = tuple(labels) if labels is not None else tuple(
            str(v) for v in range(n))
        self._cache: dict = {}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "GraphView":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @classmethod
    def from_complex(cls, X: SimplicialComplex) -> "GraphView":
        """The 1-skeleton of a complex."""
        edges = [(f[0], f[1]) for f in X.faces[1]]
        return cls(X.n_vertices(), _adj_from_edges(X.n_vertices(), edges),
                   labels=X.vertices)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(v) for v in range(self.n))

    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if (self.adj[u] >> v) & 1]

    def is_regular(self) -> bool:
        degs = self.degrees
        return self.n > 0 and len(set(degs)) == 1

    def component_count(self) -> int:
        seen = 0
        count = 0
        for start in range(self.n):
            if (seen >> start) & 1:
                continue
            count += 1
            frontier = 1 << start
            while frontier:
                seen |= frontier
                nxt = 0
                rem = frontier
                while rem:
                    low = rem & (-rem)
                    nxt |= self.adj[low.bit_length() - 1]
                    rem ^= low
                frontier = nxt & ~seen
        return count

    def is_connected(self) -> bool:
        return self.n <= 1 or self.component_count() == 1

    def adjacency_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges():
            mat[u, v] = mat[v, u] = 1.0
        return mat

    def laplacian_matrix(self) -> np.ndarray:
        mat = -self.adjacency_matrix()
        for v in range(self.n):
            mat[v, v] = self.degree(v)
        return mat

    def cut_size(self, mask: int) -> int:
        """|E(W, complement)| for the vertex subset given as a bitmask."""
        return sum(1 for u, v in self.edges()
                   if ((mask >> u) & 1) != ((mask >> v) & 1))

    def internal_edges(self, mask: int) -> int:
        return sum(1 for u, v in self.edges()
                   if ((mask >> u) & 1) and ((mask >> v) & 1))

    def __repr__(self) -> str:
        return f"GraphView(n={self.n}, m={self.edge_count()})"


def _adj_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def spectrum(G: GraphView, caps: FeasibilityCaps | None = None) -> np.ndarray:
    """All adjacency eigenvalues, sorted descending (symmetric solver)."""
    caps = get_caps(caps)
    if G.n > caps.spectrum_n:
        raise TooLarge(f"{G.n} vertices exceed the spectral cap {caps.spectrum_n}")
    if "adj_spectrum" not in G._cache:
        vals = np.linalg.eigvalsh(G.adjacency_matrix())
        G._cache["adj_spectrum"] = vals[::-1].copy()
    return G._cache["adj_spectrum"]


def laplacian_spectrum(G: GraphView,
                       caps: FeasibilityCaps | None = None) -> np.ndarray:
    """All Laplacian eigenvalues, sorted ascending."""
    caps = get_caps(caps)
    if G.n > caps.spectrum_n:
        raise TooLarge(f"{G.n} vertices exceed the spectral cap {caps.spectrum_n}")
    if "lap_spectrum" not in G._cache:
        G._cache["lap_spectrum"] = np.linalg.eigvalsh(G.laplacian_matrix())
    return G._cache["lap_spectrum"]


def lambda1(G: GraphView, caps: FeasibilityCaps | None = None) -> float | None:
    """Smallest positive Laplacian eigenvalue (spectral gap); None if the
    graph has no edges."""
    vals = laplacian_spectrum(G, caps)
    positive = vals[vals > SPECTRAL_TOL]
    return float(positive[0]) if positive.size else None


@dataclass(frozen=True)
class CheegerResult:
    h: Fraction
    witness: tuple[int, ...]
    cut: int


def cheeger_exact(G: GraphView,
                  caps: FeasibilityCaps | None = None) -> CheegerResult:
    """Exact min of |E(W,Wbar)| / min(|W|,|Wbar|) by exhaustive subset scan.

    The witness is the lexicographically least minimising vertex set (it
    always contains vertex 0, since a side and its complement tie).
    """
    caps = get_caps(caps)
    if G.n < 2:
        raise TooLarge("Cheeger constant needs at least 2 vertices")
    if G.n > caps.cheeger_n:
        raise TooLarge(f"{G.n} vertices exceed the subset-scan cap {caps.cheeger_n}")
    cut, size, mask = _kernels.cheeger_scan(list(G.adj), G.n)
    witness = tuple(v for v in range(G.n) if (mask >> v) & 1)
    return CheegerResult(Fraction(cut, min(size, G.n - size)), witness, cut)


@dataclass(frozen=True)
class AlonMilmanReport:
    cut_bound_ok: bool
    cheeger_bound_ok: bool
    internal_edge_identity_ok: bool | None
    cut: int
    cut_bound: float
    cheeger: Fraction
    lambda1: float
    internal_edges: int | None


def alon_milman_report(G: GraphView, subset: Iterable[int],
                       caps: FeasibilityCaps | None = None) -> AlonMilmanReport:
    """Check the spectral cut bound, the Cheeger lower bound and (for
    regular graphs) the internal-edge identity on one vertex subset.

    Cut counts are exact; the spectral sides are floats compared within
    1e-9.
    """
    w = sorted(set(subset))
    if not w or len(w) >= G.n or any(v < 0 or v >= G.n for v in w):
        raise InvalidSubset("subset must be a nonempty proper vertex set")
    mask = sum(1 << v for v in w)
    lam = lambda1(G, caps)
    if lam is None:
        lam = 0.0
    cut = G.cut_size(mask)
    nw = len(w)
    bound = nw * (G.n - nw) / G.n * lam
    cut_ok = cut >= bound - SPECTRAL_TOL
    ch = cheeger_exact(G, caps)
    cheeger_ok = float(ch.h) >= lam / 2 - SPECTRAL_TOL
    identity_ok: bool | None = None
    internal: int | None = None
    if G.is_regular():
        k = G.degree(0)
        internal = G.internal_edges(mask)
        identity_ok = 2 * internal == k * nw - cut
    return AlonMilmanReport(cut_ok, cheeger_ok, identity_ok, cut, bound,
                            ch.h, lam, internal)


def is_ramanujan_graph(G: GraphView,
                       caps: FeasibilityCaps | None = None
                       ) -> tuple[bool, float | None]:
    """Whether every adjacency eigenvalue is trivial (|lam| = k) or bounded
    by 2 sqrt(k-1), within 1e-9.  Returns (verdict, worst offender or None)."""
    if not G.is_regular():
        raise NotRegular("Ramanujan test needs a regular graph")
    if not G.is_connected():
        raise Disconnected("Ramanujan test needs a connected graph")
    k = G.degree(0)
    bound = 2.0 * np.sqrt(max(k - 1, 0))
    worst: float | None = None
    for lam in spectrum(G, caps):
        a = abs(float(lam))
        if a >= k - SPECTRAL_TOL:
            continue
        if a > bound + SPECTRAL_TOL and (worst is None or a > abs(worst)):
            worst = float(lam)
    return worst is None, worst


def skeleton_graph_complex(X: SimplicialComplex) -> SimplicialComplex:
    """The 1-skeleton of a complex as a standalone 1-dimensional complex."""
    return build_from_facets([X.label_face(f) for f in X.faces[1]])
