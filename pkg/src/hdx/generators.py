"""Complex families: complete complexes, subspace flag complexes, Cayley
clique complexes, and named fixtures.

Subspaces of F_q^m are enumerated in reduced row echelon form (one canonical
matrix per subspace, counts match the Gaussian binomials), so vertex
indexing of flag complexes is deterministic.  Only tiny fields are needed:
prime fields up to 7 plus GF(4) via an explicit table.

Fixtures are derived, not transcribed: the 6-vertex projective plane comes
from the antipodal quotient of a combinatorial icosahedron and is verified
on construction, the Petersen graph is the disjointness graph of 2-subsets,
and the projective-plane incidence graph is built from the field tables.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

import networkx as nx

from .caps import FeasibilityCaps, get_caps
from .complexes import SimplicialComplex, build_from_facets
from .errors import (BadParams, GroupTooLarge, NonSymmetricGenerators,
                     UnknownFixture, UnsupportedField)

# -- tiny finite fields ----------------------------------------------------

_PRIMES = (2, 3, 5, 7)

# GF(4) as {0, 1, w, w+1} encoded 0..3; addition is xor.
_GF4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)


class Field:
    """Arithmetic tables for GF(q), q prime or 4."""

    def __init__(self, q: int) -> None:
        if q in _PRIMES:
            self.q = q
            self.add = lambda a, b: (a + b) % q
            self.neg = lambda a: (-a) % q
            self.mul = lambda a, b: (a * b) % q
            self.inv = lambda a: pow(a, q - 2, q)
        elif q == 4:
            self.q = 4
            self.add = lambda a, b: a ^ b
            self.neg = lambda a: a
            self.mul = lambda a, b: _GF4_MUL[a][b]
            self.inv = lambda a: next(b for b in range(1, 4)
                                      if _GF4_MUL[a][b] == 1)
        else:
            raise UnsupportedField(f"GF({q}) is not supported (q in 2,3,4,5,7)")


def gaussian_binomial(m: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^m."""
    if k < 0 or k > m:
        return 0
    num = den = 1
    for j in range(k):
        num *= q ** (m - j) - 1
        den *= q ** (j + 1) - 1
    assert num % den == 0
    return num // den


Subspace = tuple[tuple[int, ...], ...]  # rows of the canonical RREF basis


def k_subspaces(F: Field, m: int, k: int) -> list[Subspace]:
    """All k-subspaces of F^m as canonical RREF matrices, sorted."""
    q = F.q
    out: list[Subspace] = []
    for pivots in combinations(range(m), k):
        free = [(r, c) for r in range(k) for c in range(m)
                if c > pivots[r] and c not in pivots]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * m for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), val in zip(free, values):
                rows[r][c] = val
            out.append(tuple(tuple(row) for row in rows))
    out.sort()
    return out


def subspace_contained(F: Field, small: Subspace, big: Subspace) -> bool:
    """Whether span(small) is contained in span(big); big must be in RREF."""
    pivots = [next(c for c in range(len(row)) if row[c]) for row in big]
    for row in small:
        rem = list(row)
        for r, p in enumerate(pivots):
            coef = rem[p]
            if coef:
                rem = [F.add(x, F.neg(F.mul(coef, y)))
                       for x, y in zip(rem, big[r])]
        if any(rem):
            return False
    return True


@dataclass(frozen=True)
class SubspaceTable:
    """All proper nonzero subspaces of F_q^m, grouped by dimension."""

    q: int
    m: int
    by_dim: dict[int, tuple[Subspace, ...]]

    def counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in self.by_dim.items()}


def subspace_table(q: int, m: int) -> SubspaceTable:
    F = Field(q)
    if not (2 <= m <= 4):
        raise BadParams(f"ambient dimension {m} not in [2, 4]")
    by_dim = {}
    for k in range(1, m):
        subs = k_subspaces(F, m, k)
        expected = gaussian_binomial(m, k, q)
        assert len(subs) == expected, (q, m, k, len(subs), expected)
        by_dim[k] = tuple(subs)
    return SubspaceTable(q, m, by_dim)


def _subspace_label(k: int, sub: Subspace) -> str:
    entries = "".join(str(x) for row in sub for x in row)
    return f"{k}:{entries}"


def flag_complex(q: int, m: int) -> SimplicialComplex:
    """Order complex of proper nonzero subspaces of F_q^m under inclusion.

    Vertices are the subspaces of dimension 1..m-1; faces are chains; the
    facets are the complete flags, so the complex is pure of dimension m-2.
    """
    if not (3 <= m <= 4):
        raise BadParams(f"flag complex needs ambient dimension 3 or 4, got {m}")
    table = subspace_table(q, m)
    F = Field(q)
    chains: list[list[tuple[int, Subspace]]] = [
        [(1, s)] for s in table.by_dim[1]]
    for k in range(2, m):
        extended = []
        for chain in chains:
            _, top = chain[-1]
            for s in table.by_dim[k]:
                if subspace_contained(F, top, s):
                    extended.append(chain + [(k, s)])
        chains = extended
    facets = [[_subspace_label(k, s) for k, s in chain] for chain in chains]
    return build_from_facets(facets)


def complete_complex(n: int, d: int) -> SimplicialComplex:
    """The complete d-dimensional complex on n vertices."""
    if not (1 <= d < n):
        raise BadParams(f"need 1 <= d < n, got d={d}, n={n}")
    labels = [f"v{j}" for j in range(n)]
    return build_from_facets(combinations(labels, d + 1))


# -- Cayley clique complexes ------------------------------------------------

Perm = tuple[int, ...]


def _compose(g: Perm, s: Perm) -> Perm:
    return tuple(g[s[x]] for x in range(len(g)))


def _inverse(g: Perm) -> Perm:
    out = [0] * len(g)
    for x, y in enumerate(g):
        out[y] = x
    return tuple(out)


@dataclass(frozen=True)
class CayleyReport:
    group_order: int
    requested_dim: int
    dim: int
    was_pure: bool
    dropped_cliques: int


def cayley_clique_complex(generators: Sequence[Sequence[int]], max_dim: int,
                          caps: FeasibilityCaps | None = None
                          ) -> tuple[SimplicialComplex, CayleyReport]:
    """Clique complex of the Cayley graph of the generated permutation group.

    Faces are the cliques of size at most max_dim + 1; the result is
    truncated to the largest dimension with faces and closed downward, so
    it is pure.  The report records whether the truncation dropped maximal
    cliques of smaller size.
    """
    caps = get_caps(caps)
    gens = []
    for g in generators:
        perm = tuple(int(x) for x in g)
        if sorted(perm) != list(range(len(perm))):
            raise NonSymmetricGenerators(f"not a permutation: {g!r}")
        gens.append(perm)
    if not gens:
        raise NonSymmetricGenerators("empty generator set")
    degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise NonSymmetricGenerators("generators act on different degrees")
    identity = tuple(range(degree))
    gen_set = set(gens)
    if identity in gen_set:
        raise NonSymmetricGenerators("identity cannot be a generator")
    for g in gen_set:
        if _inverse(g) not in gen_set:
            raise NonSymmetricGenerators(f"inverse of {g!r} missing")

    # Group closure by BFS from the identity.
    elements = [identity]
    seen = {identity}
    queue = [identity]
    while queue:
        g = queue.pop(0)
        for s in gen_set:
            h = _compose(g, s)
            if h not in seen:
                if len(seen) >= caps.group_max:
                    raise GroupTooLarge(
                        f"group closure exceeds cap {caps.group_max}")
                seen.add(h)
                elements.append(h)
                queue.append(h)
    elements.sort()
    index = {g: j for j, g in enumerate(elements)}
    n = len(elements)
    adj = [set() for _ in range(n)]
    for g in elements:
        for s in gen_set:
            h = _compose(g, s)
            adj[index[g]].add(index[h])
            adj[index[h]].add(index[g])

    # All cliques of size <= max_dim + 1, grown by largest-index extension.
    if max_dim < 1:
        raise BadParams("max_dim must be at least 1")
    cliques_by_size: dict[int, list[tuple[int, ...]]] = {
        1: [(v,) for v in range(n)]}
    for size in range(2, max_dim + 2):
        grown = []
        for clique in cliques_by_size[size - 1]:
            common = set(range(clique[-1] + 1, n))
            for v in clique:
                common &= adj[v]
            for v in sorted(common):
                grown.append(clique + (v,))
        if not grown:
            break
        cliques_by_size[size] = grown

    top = max(cliques_by_size)
    labels = ["-".join(str(x) for x in g) for g in elements]
    facets = [[labels[v] for v in clique] for clique in cliques_by_size[top]]
    X = build_from_facets(facets)
    total_cliques = sum(len(v) for v in cliques_by_size.values())
    kept = sum(X.n_faces(i) for i in range(0, X.dim + 1))
    dropped = total_cliques - kept
    report = CayleyReport(group_order=n, requested_dim=max_dim, dim=X.dim,
                          was_pure=dropped == 0, dropped_cliques=dropped)
    return X, report


def load_generator_file(path: str) -> tuple[list[Perm], int]:
    """Read {"degree": m, "generators": [[...], ...]} from JSON."""
    with open(path) as fh:
        data = json.load(fh)
    degree = int(data["degree"])
    gens = [tuple(int(x) for x in g) for g in data["generators"]]
    if any(len(g) != degree for g in gens):
        raise NonSymmetricGenerators("generator length does not match degree")
    return gens, degree


# -- named fixtures ----------------------------------------------------------

def _icosahedron() -> tuple[list[list[str]], dict[str, str]]:
    """Combinatorial icosahedron (gyroelongated pentagonal bipyramid) plus
    its antipodal vertex involution."""
    up = [f"u{i}" for i in range(5)]
    lo = [f"l{i}" for i in range(5)]
    faces: list[list[str]] = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append(["t", up[i], up[j]])
        faces.append(["b", lo[i], lo[j]])
        faces.append([lo[i], up[i], up[j]])
        faces.append([up[j], lo[i], lo[j]])
    antipode = {"t": "b", "b": "t"}
    for i in range(5):
        antipode[up[i]] = lo[(i + 2) % 5]
        antipode[lo[(i + 2) % 5]] = up[i]
    return faces, antipode


def _rp2_6() -> SimplicialComplex:
    faces, antipode = _icosahedron()
    icosa = build_from_facets(faces)
    assert icosa.n_vertices() == 12 and icosa.n_faces(2) == 20
    face_set = {frozenset(f) for f in icosa.facets()}
    # The involution must permute the faces with no fixed face.
    for f in face_set:
        image = frozenset(antipode[v] for v in f)
        assert image in face_set and image != f
    assert all(antipode[antipode[v]] == v for v in icosa.vertices)
    rep = {v: min(v, antipode[v]) for v in icosa.vertices}
    quotient = {frozenset(rep[v] for v in f) for f in face_set}
    assert all(len(f) == 3 for f in quotient)
    X = build_from_facets([sorted(f) for f in quotient])
    assert X.n_vertices() == 6 and X.n_faces(1) == 15 and X.n_faces(2) == 10
    assert X.n_vertices() - X.n_faces(1) + X.n_faces(2) == 1  # Euler char
    return X


def _cycle(k: int) -> SimplicialComplex:
    if k < 3:
        raise BadParams("cycle needs at least 3 vertices")
    labels = [f"c{j}" for j in range(k)]
    return build_from_facets([[labels[j], labels[(j + 1) % k]]
                              for j in range(k)])


def _path(k: int) -> SimplicialComplex:
    if k < 2:
        raise BadParams("path needs at least 2 vertices")
    labels = [f"p{j}" for j in range(k)]
    return build_from_facets([[labels[j], labels[j + 1]]
                              for j in range(k - 1)])


def _petersen() -> SimplicialComplex:
    pairs = list(combinations(range(5), 2))
    label = {p: f"{p[0]}{p[1]}" for p in pairs}
    edges = [[label[p], label[q]] for p, q in combinations(pairs, 2)
             if not set(p) & set(q)]
    return build_from_facets(edges)


def _fano_incidence() -> SimplicialComplex:
    """Points versus lines of the projective plane over F2: a point vector p
    lies on the line with normal vector n when p . n = 0."""
    vectors = [v for v in product((0, 1), repeat=3) if any(v)]
    edges = []
    for p in vectors:
        for nrm in vectors:
            if sum(a * b for a, b in zip(p, nrm)) % 2 == 0:
                edges.append(["p" + "".join(map(str, p)),
                              "l" + "".join(map(str, nrm))])
    return build_from_facets(edges)


def _octahedron() -> SimplicialComplex:
    pairs = [("x0", "x1"), ("y0", "y1"), ("z0", "z1")]
    return build_from_facets([[a, b, c] for a in pairs[0] for b in pairs[1]
                              for c in pairs[2]])


def fixture(name: str) -> SimplicialComplex:
    """Named test complexes: rp2_6, cycle_<k>, path_<k>, petersen,
    fano_incidence, octahedron_boundary."""
    if name == "rp2_6":
        return _rp2_6()
    if name == "petersen":
        return _petersen()
    if name == "fano_incidence":
        return _fano_incidence()
    if name == "octahedron_boundary":
        return _octahedron()
    match = re.fullmatch(r"cycle_(\d+)", name)
    if match:
        return _cycle(int(match.group(1)))
    match = re.fullmatch(r"path_(\d+)", name)
    if match:
        return _path(int(match.group(1)))
    raise UnknownFixture(f"unknown fixture {name!r}")


# -- isomorphism (for verification only) -------------------------------------

def _incidence_graph(X: SimplicialComplex) -> nx.Graph:
    g = nx.Graph()
    for i in range(0, X.dim + 1):
        for j, face in enumerate(X.faces[i]):
            g.add_node((i, j), dim=i)
    for i in range(1, X.dim + 1):
        for j, subs in enumerate(X.subfaces[i]):
            for c in subs:
                g.add_edge((i, j), (i - 1, c))
    return g


def complexes_isomorphic(X: SimplicialComplex, Y: SimplicialComplex) -> bool:
    """Isomorphism of complexes via their dimension-colored face incidence
    graphs (exact, desk scale)."""
    if X.dim != Y.dim:
        return False
    if any(X.n_faces(i) != Y.n_faces(i) for i in range(X.dim + 1)):
        return False
    return nx.is_isomorphic(_incidence_graph(X), _incidence_graph(Y),
                            node_match=lambda a, b: a["dim"] == b["dim"])


def links_pairwise_isomorphic(X: SimplicialComplex) -> bool:
    """Vertex transitivity surrogate: all vertex links are isomorphic."""
    from .complexes import link

    links = [link(X, (v,))[0] for v in X.vertices]
    return all(complexes_isomorphic(links[0], lk) for lk in links[1:])
