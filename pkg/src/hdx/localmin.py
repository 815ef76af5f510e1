"""Locally minimal cochains and the dimension-2 inequality suite.

A cochain restricted to a vertex link drops one dimension; it is locally
minimal when every restriction has minimal norm within its class modulo the
link's coboundaries.  Local minimization repeatedly corrects the first
violating vertex by lifting a link-level correction to the star of that
vertex.  Each correction strictly decreases the norm, and norms live on a
fixed rational lattice, so termination is guaranteed with an explicit step
bound.

The dimension-2 suite evaluates the triangle counting identities exactly
and the spectral inequalities in a generalized form driven by the actual
link gaps and edge degrees of the complex; when the complex is verified
edge-regular for a given q it additionally evaluates the literal q-forms.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from .caps import FeasibilityCaps, get_caps
from .cochains import (Cochain, apply_coboundary, b_basis, coboundary, norm,
                       weight_fractions)
from .complexes import SimplicialComplex, link
from .errors import VertexNotPresent, WrongDimension
from .gf2 import min_weight_in_coset, solve
from .spectral import SPECTRAL_TOL, GraphView, lambda1


class _VertexLink:
    """Cached link of one vertex with the face index correspondence."""

    __slots__ = ("vertex", "complex", "to_parent", "from_parent")

    def __init__(self, X: SimplicialComplex, v_label: str) -> None:
        self.vertex = v_label
        lk, corr = link(X, (v_label,))
        self.complex = lk
        # to_parent[j][link_face_idx] = parent face index in X(j+1)
        self.to_parent: dict[int, tuple[int, ...]] = {}
        self.from_parent: dict[int, dict[int, int]] = {}
        for j in range(-1, lk.dim + 1):
            row = []
            back = {}
            for idx, rho in enumerate(lk.faces[j]):
                rho_labels = tuple(lk.vertices[u] for u in rho)
                parent_labels = corr[rho_labels]
                parent = tuple(sorted(X.index[s] for s in parent_labels))
                pidx = X.face_index[j + 1][parent]
                row.append(pidx)
                back[pidx] = idx
            self.to_parent[j] = tuple(row)
            self.from_parent[j] = back


class _LinkCache:
    def __init__(self, X: SimplicialComplex) -> None:
        self.X = X
        self.links: dict[int, _VertexLink] = {}

    def get(self, v: int) -> _VertexLink:
        if v not in self.links:
            self.links[v] = _VertexLink(self.X, self.X.vertices[v])
        return self.links[v]


_caches: "weakref.WeakKeyDictionary[SimplicialComplex, _LinkCache]" = (
    weakref.WeakKeyDictionary())


def _link_cache(X: SimplicialComplex) -> _LinkCache:
    cache = _caches.get(X)
    if cache is None:
        cache = _LinkCache(X)
        _caches[X] = cache
    return cache


def restrict_to_link(X: SimplicialComplex, alpha: Cochain,
                     v_label: str) -> Cochain:
    """The restriction alpha_v on the link of v: the support faces through v
    with v removed.  Defined for cochain dimension >= 1."""
    if alpha.dim < 1 or alpha.dim > X.dim:
        raise WrongDimension("restriction needs cochain dimension >= 1")
    if v_label not in X.index:
        raise VertexNotPresent(f"vertex {v_label!r} not in complex")
    vl = _link_cache(X).get(X.index[v_label])
    return _restrict(vl, alpha)


def _restrict(vl: _VertexLink, alpha: Cochain) -> Cochain:
    j = alpha.dim - 1
    bits = 0
    for idx, pidx in enumerate(vl.to_parent[j]):
        if (alpha.bits >> pidx) & 1:
            bits |= 1 << idx
    return Cochain(j, bits, len(vl.to_parent[j]))


def _link_class_minimum(vl: _VertexLink, restricted: Cochain,
                        caps: FeasibilityCaps | None):
    w = weight_fractions(vl.complex, restricted.dim)
    basis = b_basis(vl.complex, restricted.dim)
    return min_weight_in_coset(restricted.bits, basis, w, caps)


def is_locally_minimal(X: SimplicialComplex, alpha: Cochain,
                       caps: FeasibilityCaps | None = None
                       ) -> tuple[bool, str | None]:
    """Whether every vertex restriction is minimal in its link class.

    Returns (verdict, first failing vertex label or None).  Dimension-0
    cochains are locally minimal by convention (links carry a single class
    one dimension down).
    """
    if alpha.dim == 0:
        return True, None
    if not (1 <= alpha.dim <= X.dim):
        raise WrongDimension(f"cochain dimension {alpha.dim} out of range")
    cache = _link_cache(X)
    for v in range(X.n_vertices()):
        vl = cache.get(v)
        restricted = _restrict(vl, alpha)
        if restricted.is_zero():
            continue
        found = _link_class_minimum(vl, restricted, caps)
        if found.norm < norm(vl.complex, restricted):
            return False, X.vertices[v]
    return True, None


@dataclass(frozen=True)
class LocalMinimization:
    result: Cochain
    correction: Cochain
    steps: int


def step_bound(X: SimplicialComplex, alpha: Cochain) -> int:
    """Upper bound on correction steps: the norm strictly decreases on a
    lattice with spacing 1/weight_denominator."""
    nums, _ = X.weight_numerators(alpha.dim)
    return sum(nums[j] for j in alpha.support_indices())


def locally_minimize(X: SimplicialComplex, alpha: Cochain,
                     caps: FeasibilityCaps | None = None) -> LocalMinimization:
    """Drive alpha to a locally minimal cochain in its class.

    Scans vertices in ascending index order, restarting after every
    correction; each correction adds the coboundary of a lift supported on
    the star of the violating vertex, so the full cochain norm drops by the
    same amount as the link norm.  Returns the minimized cochain, the
    accumulated correction gamma with result = alpha + delta(gamma), and
    the number of corrections.
    """
    if not (1 <= alpha.dim <= X.dim):
        raise WrongDimension(f"cochain dimension {alpha.dim} out of range")
    i = alpha.dim
    cache = _link_cache(X)
    gamma = Cochain.zero(X, i - 1)
    current = alpha
    steps = 0
    limit = step_bound(X, alpha)
    while True:
        corrected = False
        for v in range(X.n_vertices()):
            vl = cache.get(v)
            restricted = _restrict(vl, current)
            if restricted.is_zero():
                continue
            found = _link_class_minimum(vl, restricted, caps)
            if found.norm >= norm(vl.complex, restricted):
                continue
            target = restricted.bits ^ found.vector
            gamma_local = solve(coboundary(vl.complex, i - 2), target)
            assert gamma_local is not None  # target is a link coboundary
            lift_bits = 0
            for idx, pidx in enumerate(vl.to_parent[i - 2]):
                if (gamma_local >> idx) & 1:
                    lift_bits |= 1 << pidx
            lift = Cochain(i - 1, lift_bits, X.n_faces(i - 1))
            current = current + apply_coboundary(X, lift)
            gamma = gamma + lift
            steps += 1
            if steps > limit:
                raise AssertionError("norm failed to decrease monotonically")
            corrected = True
            break
        if not corrected:
            return LocalMinimization(current, gamma, steps)


# -- dimension-2 counting and inequalities ---------------------------------

@dataclass(frozen=True)
class TriangleProfile:
    """Triangle counts by the number of support edges they contain."""

    t0: int
    t1: int
    t2: int
    t3: int

    @property
    def total(self) -> int:
        return self.t0 + self.t1 + self.t2 + self.t3


def triangle_profile(X: SimplicialComplex, alpha: Cochain) -> TriangleProfile:
    """Count triangles by how many of their edges lie in the support."""
    _require_dim2(X, alpha)
    counts = [0, 0, 0, 0]
    for subs in X.subfaces[2]:
        inside = sum(1 for e in subs if (alpha.bits >> e) & 1)
        counts[inside] += 1
    return TriangleProfile(*counts)


def link_cut_sizes(X: SimplicialComplex, alpha: Cochain) -> dict[str, int]:
    """Per vertex, the link cut between the restricted support and its
    complement: link edges joining a support edge to a non-support edge."""
    _require_dim2(X, alpha)
    cuts = {v: 0 for v in X.vertices}
    for face, subs in zip(X.faces[2], X.subfaces[2]):
        flags = [(alpha.bits >> e) & 1 for e in subs]
        for v in face:
            # the two edges through v are the subfaces that do not omit v
            a, b = (flags[k] for k in range(3) if _omits(face, k) != v)
            if a != b:
                cuts[X.vertices[v]] += 1
    return cuts


def _omits(face: tuple[int, ...], k: int) -> int:
    # combinations(face, 2) lists pairs in lexicographic order; entry k
    # omits face[2 - k].
    return face[2 - k]


def alpha_degrees(X: SimplicialComplex, alpha: Cochain) -> dict[str, int]:
    """Number of support edges at each vertex."""
    _require_dim2(X, alpha)
    degs = {v: 0 for v in X.vertices}
    for j in alpha.support_indices():
        u, v = X.faces[1][j]
        degs[X.vertices[u]] += 1
        degs[X.vertices[v]] += 1
    return degs


@dataclass(frozen=True)
class ThinThickDecomposition:
    """Support vertices split at the (1 - epsilon) * degree / 2 threshold."""

    W: tuple[str, ...]
    R: tuple[str, ...]
    S: tuple[str, ...]
    r: int
    s: int
    epsilon: Fraction


def thin_thick(X: SimplicialComplex, alpha: Cochain,
               epsilon: Fraction) -> ThinThickDecomposition:
    """Classify support vertices as thin or thick; a vertex is thin when its
    support degree is below (1 - epsilon)/2 of its link size."""
    _require_dim2(X, alpha)
    epsilon = Fraction(epsilon)
    if not (0 < epsilon < 1):
        raise ValueError("epsilon must lie strictly between 0 and 1")
    degs = alpha_degrees(X, alpha)
    graph = _skeleton(X)
    thin, thick = [], []
    r = s = 0
    for v_idx, v in enumerate(X.vertices):
        av = degs[v]
        if av == 0:
            continue
        q_v = graph.degree(v_idx)
        if av < (1 - epsilon) * Fraction(q_v, 2):
            thin.append(v)
            r += av
        else:
            thick.append(v)
            s += av
    w = tuple(sorted(thin + thick))
    return ThinThickDecomposition(w, tuple(sorted(thin)), tuple(sorted(thick)),
                                  r, s, epsilon)


@dataclass(frozen=True)
class IsoperimetryParams:
    """Parameters of the dimension-2 inequality suite.

    epsilon is the thinness margin, epsilon_prime the norm-budget slack
    (budget 1/(4(1+epsilon_prime))), xi the thick-edge slack, q the
    optional edge degree for the literal forms.
    """

    epsilon: Fraction = Fraction(1, 10)
    epsilon_prime: Fraction = Fraction(1, 10)
    xi: Fraction = Fraction(1, 100)
    q: int | None = None

    def __post_init__(self) -> None:
        for name in ("epsilon", "epsilon_prime", "xi"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not (0 < self.epsilon < 1):
            raise ValueError("epsilon must lie strictly between 0 and 1")
        if self.epsilon_prime <= 0 or self.xi <= 0:
            raise ValueError("epsilon_prime and xi must be positive")
        if self.q is not None and self.q < 1:
            raise ValueError("q must be a positive integer")

    @property
    def eta_1(self) -> Fraction:
        return 1 / (4 * (1 + self.epsilon_prime))


@dataclass(frozen=True)
class LemmaRecord:
    name: str
    lhs: object
    rhs: object
    mode: str
    passed: bool | None

    def to_json_dict(self) -> dict:
        from .report import tag_value

        return {"name": self.name, "lhs": tag_value(self.lhs),
                "rhs": tag_value(self.rhs), "mode": self.mode,
                "pass": self.passed}


@dataclass(frozen=True)
class LemmaSuiteReport:
    records: tuple[LemmaRecord, ...]
    profile: TriangleProfile
    decomposition: ThinThickDecomposition

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records if r.passed is not None)

    def to_json_dict(self) -> dict:
        return {"records": [r.to_json_dict() for r in self.records]}


def _require_dim2(X: SimplicialComplex, alpha: Cochain | None = None) -> None:
    if X.dim != 2:
        raise WrongDimension("operation needs a 2-dimensional complex")
    if alpha is not None and alpha.dim != 1:
        raise WrongDimension("operation needs a 1-cochain")


def _skeleton(X: SimplicialComplex) -> GraphView:
    if "skeleton_graph" not in X._cache:
        X._cache["skeleton_graph"] = GraphView.from_complex(X)
    return X._cache["skeleton_graph"]


def dim2_lemma_suite(X: SimplicialComplex, alpha: Cochain,
                     params: IsoperimetryParams,
                     caps: FeasibilityCaps | None = None) -> LemmaSuiteReport:
    """Evaluate the counting identities and spectral cut bounds on one
    1-cochain of a 2-complex.

    Identities are exact.  The generalized inequalities replace the model
    constants by the complex's own quantities: per-link spectral gaps, the
    support edge degrees, and the 1-skeleton gap.  Vertices with a
    disconnected link are reported and skipped by the per-link bounds.
    Hypothesis records state the preconditions (half-degree restrictions,
    norm budget) rather than assuming them.
    """
    caps = get_caps(caps)
    _require_dim2(X, alpha)
    profile = triangle_profile(X, alpha)
    cuts = link_cut_sizes(X, alpha)
    decomp = thin_thick(X, alpha, params.epsilon)
    degs = alpha_degrees(X, alpha)
    skel = _skeleton(X)
    cache = _link_cache(X)
    records: list[LemmaRecord] = []

    support = alpha.support_size
    delta_support = apply_coboundary(X, alpha).support_size
    sum_edge_degree = sum(X.facet_degree[1][j] for j in alpha.support_indices())

    records.append(LemmaRecord(
        "identity_coboundary_support", delta_support,
        profile.t1 + profile.t3, "identity",
        delta_support == profile.t1 + profile.t3))
    total_cut = sum(cuts.values())
    records.append(LemmaRecord(
        "identity_link_cut_sum", total_cut,
        2 * profile.t1 + 2 * profile.t2, "identity",
        total_cut == 2 * profile.t1 + 2 * profile.t2))
    weighted = profile.t1 + 2 * profile.t2 + 3 * profile.t3
    records.append(LemmaRecord(
        "identity_edge_degree_sum", weighted, sum_edge_degree, "identity",
        weighted == sum_edge_degree))
    records.append(LemmaRecord(
        "identity_thin_thick_split", decomp.r + decomp.s, 2 * support,
        "identity", decomp.r + decomp.s == 2 * support))

    # Per-link cut bounds and the minimum link gap over the support.
    lambda_min: float | None = None
    disconnected = False
    for v in decomp.W:
        v_idx = X.index[v]
        vl = cache.get(v_idx)
        lgraph = GraphView.from_complex(vl.complex)
        if not lgraph.is_connected():
            records.append(LemmaRecord(
                f"link_cut_bound[{v}]", None, None,
                "skipped:disconnected-link", None))
            disconnected = True
            continue
        lam = lambda1(lgraph, caps) or 0.0
        lambda_min = lam if lambda_min is None else min(lambda_min, lam)
        av = degs[v]
        q_v = lgraph.n
        lhs = cuts[v]
        rhs = av * (q_v - av) / q_v * lam
        records.append(LemmaRecord(
            f"link_cut_bound[{v}]", lhs, rhs, "generalized",
            lhs >= rhs - SPECTRAL_TOL))
    if disconnected or lambda_min is None:
        lambda_min = 0.0

    # Hypothesis records: the inequalities below presuppose these.
    half_ok = True
    worst_ratio = Fraction(0)
    for v in decomp.W:
        q_v = skel.degree(X.index[v])
        ratio = Fraction(degs[v], q_v)
        worst_ratio = max(worst_ratio, ratio)
        half_ok = half_ok and ratio <= Fraction(1, 2)
    records.append(LemmaRecord(
        "hypothesis_half_degree_restriction", worst_ratio, Fraction(1, 2),
        "hypothesis", half_ok))
    alpha_norm = norm(X, alpha)
    records.append(LemmaRecord(
        "hypothesis_norm_budget", alpha_norm, params.eta_1, "hypothesis",
        alpha_norm <= params.eta_1))
    support_budget = Fraction(X.n_faces(1), 1) * params.eta_1
    records.append(LemmaRecord(
        "hypothesis_support_budget", support, support_budget, "hypothesis",
        support <= support_budget))

    # Aggregated bounds, generalized constants.
    lhs_2t = 2 * profile.t1 + 2 * profile.t2
    rhs_2t = lambda_min * (support + float(params.epsilon) / 2 * decomp.r)
    records.append(LemmaRecord(
        "bound_cut_triangles", lhs_2t, rhs_2t, "generalized",
        lhs_2t >= rhs_2t - SPECTRAL_TOL))
    lhs_t13 = profile.t1 - 3 * profile.t3
    rhs_t13 = rhs_2t - sum_edge_degree
    records.append(LemmaRecord(
        "bound_odd_triangles", lhs_t13, rhs_t13, "generalized",
        lhs_t13 >= rhs_t13 - SPECTRAL_TOL))

    thick_mask = sum(1 << X.index[v] for v in decomp.S)
    thick_edges = skel.internal_edges(thick_mask) if decomp.S else 0
    if skel.is_regular():
        k = skel.degree(0)
        gap = lambda1(skel, caps) or 0.0
        # surplus of the skeleton over a perfect gap; never negative, so the
        # chained bound stays valid on better-than-model skeletons
        b = max(k - gap, 0.0)
        eps = float(params.epsilon)
        epsp = float(params.epsilon_prime)
        rhs_thick = support * (1 / ((1 - eps) ** 2 * (1 + epsp))
                               + 2 * b / ((1 - eps) * k))
        records.append(LemmaRecord(
            "bound_thick_edges", thick_edges, rhs_thick, "generalized",
            thick_edges <= rhs_thick + SPECTRAL_TOL))
    else:
        records.append(LemmaRecord(
            "bound_thick_edges", thick_edges, None, "skipped:not-regular",
            None))

    # Global cut bound on the 1-skeleton for the support vertex set.
    if decomp.W and len(decomp.W) < X.n_vertices():
        w_mask = sum(1 << X.index[v] for v in decomp.W)
        lhs_cut = skel.cut_size(w_mask)
        gap = lambda1(skel, caps) or 0.0
        nw = len(decomp.W)
        rhs_cut = nw * (X.n_vertices() - nw) / X.n_vertices() * gap
        records.append(LemmaRecord(
            "bound_support_cut", lhs_cut, rhs_cut, "generalized",
            lhs_cut >= rhs_cut - SPECTRAL_TOL))

    # Systolic support bound, applicable to cocycles only.
    if delta_support == 0 and support > 0:
        in_b = b_basis(X, 1).contains(alpha.bits)
        threshold = support_budget
        if in_b:
            lm, _ = is_locally_minimal(X, alpha, caps)
            passed = (not lm) or support >= threshold or support == 0
            records.append(LemmaRecord(
                "bound_trivial_cocycle_support", support, threshold,
                "generalized", passed))
        else:
            records.append(LemmaRecord(
                "bound_systole_support", support, threshold, "generalized",
                support > threshold))

    # Literal forms when edge degrees match the given q everywhere.
    if params.q is not None:
        q = params.q
        edge_regular = all(c == q + 1 for c in X.facet_degree[1])
        if edge_regular:
            lam_lit = q + 1 - sqrt(q)
            rhs_2t_lit = lam_lit * (support + float(params.epsilon) / 2 * decomp.r)
            records.append(LemmaRecord(
                "bound_cut_triangles", lhs_2t, rhs_2t_lit, "literal",
                lhs_2t >= rhs_2t_lit - SPECTRAL_TOL))
            rhs_t13_lit = (float(params.epsilon) / 2 * lam_lit * decomp.r
                           - sqrt(q) * support)
            records.append(LemmaRecord(
                "bound_odd_triangles", lhs_t13, rhs_t13_lit, "literal",
                lhs_t13 >= rhs_t13_lit - SPECTRAL_TOL))
            q_cap = 2 * (q * q + q + 1)
            eps = float(params.epsilon)
            epsp = float(params.epsilon_prime)
            rhs_thick_lit = support * (1 / ((1 - eps) ** 2 * (1 + epsp))
                                       + 12 * q / ((1 - eps) * q_cap))
            records.append(LemmaRecord(
                "bound_thick_edges", thick_edges, rhs_thick_lit, "literal",
                thick_edges <= rhs_thick_lit + SPECTRAL_TOL))
        else:
            records.append(LemmaRecord(
                "literal_forms", None, None,
                f"skipped:not-edge-regular-q={q}", None))

    return LemmaSuiteReport(tuple(records), profile, decomp)
