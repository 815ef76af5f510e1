"""Verification suite: seeded, deterministic checks over the whole toolkit.

Each check carries an anchor naming the identity or bound it verifies
("plumbing" for pure infrastructure checks), exact and float sides kept
separate, and a pass flag.  Records are assembled in check-id order and the
JSON rendering is canonical, so a fixed seed yields a byte-identical
report.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm

import numpy as np

from . import __version__
from .caps import FeasibilityCaps, get_caps
from .cochains import (Cochain, apply_coboundary, b_basis, certify_gromov,
                       coboundary, cohomology_dim, expansion_constants, norm,
                       systole)
from .complexes import SimplicialComplex, build_from_facets
from .errors import ConfigError
from .generators import complete_complex, fixture, flag_complex, subspace_table
from .generators import gaussian_binomial
from .gf2 import SubspaceBasis, min_weight_in_coset
from .localmin import (IsoperimetryParams, dim2_lemma_suite,
                       is_locally_minimal, link_cut_sizes, locally_minimize,
                       step_bound, thin_thick, triangle_profile)
from .overlap import (candidate_points, geometric_overlap_2d,
                      geometric_overlap_mc)
from .report import json_canonical, tag_value
from .spectral import (SPECTRAL_TOL, GraphView, alon_milman_report,
                       cheeger_exact, laplacian_spectrum, spectrum,
                       skeleton_graph_complex)

GRID = 400


# -- configuration -----------------------------------------------------------

_DEFAULT_FIXTURES = ("delta4_2", "delta5_2", "rp2_6", "flag_2_3",
                     "cycle_3", "cycle_4", "cycle_5", "cycle_6", "cycle_7",
                     "cycle_8")
_DEFAULT_GRAPHS = ("k4", "k5", "cycle_3", "cycle_4", "cycle_5", "cycle_6",
                   "cycle_7", "cycle_8", "petersen", "octahedron_skeleton",
                   "path_5")


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 20260809
    fixtures: tuple[str, ...] = _DEFAULT_FIXTURES
    graph_fixtures: tuple[str, ...] = _DEFAULT_GRAPHS
    n_random_complexes: int = 200
    n_triangle_samples: int = 1000
    n_localmin_samples: int = 500
    n_overlap_instances: int = 50
    n_coset_instances: int = 100
    n_random_graphs: int = 50
    n_lemma_samples: int = 24
    gromov_mu: Fraction | None = None
    gromov_eta: Fraction | None = None
    params: IsoperimetryParams = field(default_factory=IsoperimetryParams)
    caps: FeasibilityCaps | None = None

    @classmethod
    def from_json_dict(cls, data: dict) -> "SuiteConfig":
        kwargs: dict = {}
        for key in ("seed", "n_random_complexes", "n_triangle_samples",
                    "n_localmin_samples", "n_overlap_instances",
                    "n_coset_instances", "n_random_graphs",
                    "n_lemma_samples"):
            if key in data:
                kwargs[key] = int(data[key])
        for key in ("fixtures", "graph_fixtures"):
            if key in data:
                kwargs[key] = tuple(str(x) for x in data[key])
        gromov = data.get("gromov", {})
        if "mu" in gromov:
            kwargs["gromov_mu"] = Fraction(str(gromov["mu"]))
        if "eta" in gromov:
            kwargs["gromov_eta"] = Fraction(str(gromov["eta"]))
        if "params" in data:
            p = data["params"]
            kwargs["params"] = IsoperimetryParams(
                epsilon=Fraction(str(p.get("epsilon", "1/10"))),
                epsilon_prime=Fraction(str(p.get("epsilon_prime", "1/10"))),
                xi=Fraction(str(p.get("xi", "1/100"))),
                q=p.get("q"))
        if "caps" in data:
            kwargs["caps"] = FeasibilityCaps(**{k: int(v)
                                                for k, v in data["caps"].items()})
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path: str) -> "SuiteConfig":
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


@lru_cache(maxsize=None)
def resolve_fixture(name: str) -> SimplicialComplex:
    """Fixture names plus the generator shorthands delta<n>_<d>, k<n>,
    flag_<q>_<m> and octahedron_skeleton (complexes are immutable, so the
    instances are shared)."""
    if name.startswith("delta"):
        n, d = name[5:].split("_")
        return complete_complex(int(n), int(d))
    if name.startswith("k") and name[1:].isdigit():
        return complete_complex(int(name[1:]), 1)
    if name.startswith("flag_"):
        _, q, m = name.split("_")
        return flag_complex(int(q), int(m))
    if name == "octahedron_skeleton":
        return skeleton_graph_complex(fixture("octahedron_boundary"))
    return fixture(name)


# -- report ------------------------------------------------------------------

@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    anchor: str
    inputs: str
    lhs: object
    rhs: object
    passed: bool

    def to_json_dict(self) -> dict:
        return {"check_id": self.check_id, "anchor": self.anchor,
                "inputs": self.inputs, "lhs": tag_value(self.lhs),
                "rhs": tag_value(self.rhs), "pass": self.passed}


@dataclass(frozen=True)
class SuiteReport:
    seed: int
    version: str
    checks: tuple[CheckRecord, ...]
    caps: dict

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "tool": "hdx",
            "version": self.version,
            "seed": self.seed,
            "caps": self.caps,
            "counts": {"total": len(self.checks),
                       "passed": sum(1 for c in self.checks if c.passed)},
            "pass": self.passed,
            "checks": [c.to_json_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json_canonical(self.to_json_dict())

    def to_csv(self) -> str:
        from .report import csv_render

        rows = []
        for c in self.checks:
            lhs = tag_value(c.lhs)
            rhs = tag_value(c.rhs)
            rows.append({
                "check_id": c.check_id, "anchor": c.anchor,
                "inputs": c.inputs,
                "lhs": "" if lhs is None else lhs["value"],
                "rhs": "" if rhs is None else rhs["value"],
                "pass": str(c.passed).lower(),
            })
        return csv_render(["check_id", "anchor", "inputs", "lhs", "rhs",
                           "pass"], rows)


def _child_rng(seed: int, tag: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{tag}".encode()).hexdigest()
    return random.Random(int(digest[:16], 16))


def random_pure_complex(rng: random.Random, max_vertices: int = 12,
                        max_dim: int = 3) -> SimplicialComplex:
    d = rng.randint(1, max_dim)
    n = rng.randint(d + 1, max_vertices)
    labels = [f"v{j}" for j in range(n)]
    pool = list(combinations(labels, d + 1))
    count = rng.randint(1, min(len(pool), 3 * n))
    return build_from_facets(rng.sample(pool, count))


def random_cochain(rng: random.Random, X: SimplicialComplex, i: int) -> Cochain:
    m = X.n_faces(i)
    return Cochain(i, rng.randrange(0, 1 << m), m)


# -- individual checks -------------------------------------------------------

def _check_delta_squared(config: SuiteConfig) -> list[CheckRecord]:
    rng = _child_rng(config.seed, "delta-squared")
    failures = 0
    total = 0
    weight_failures = 0
    for _ in range(config.n_random_complexes):
        X = random_pure_complex(rng)
        for i in range(-1, X.dim - 1):
            prod = coboundary(X, i + 1).matmul(coboundary(X, i))
            total += 1
            if not prod.is_zero():
                failures += 1
        for i in range(-1, X.dim + 1):
            total_weight = sum(
                Fraction(c, X.weight_denominator(i))
                for c in X.facet_degree[i])
            if total_weight != 1:
                weight_failures += 1
    records = [CheckRecord(
        "delta_squared_zero", "coboundary-composition-zero",
        f"{config.n_random_complexes} random pure complexes, d<=3, n<=12",
        total - failures, total, failures == 0)]
    records.append(CheckRecord(
        "weight_normalization", "weights-sum-to-one",
        f"{config.n_random_complexes} random pure complexes, all dimensions",
        weight_failures, 0, weight_failures == 0))
    return records


def _check_proposition_items(config: SuiteConfig) -> list[CheckRecord]:
    records = []
    for name in config.fixtures:
        X = resolve_fixture(name)
        for i in range(0, X.dim):
            ec = expansion_constants(X, i, config.caps)
            product = (None if ec.mu is None or ec.epsilon_tilde is None
                       else ec.mu * ec.epsilon_tilde)
            records.append(CheckRecord(
                f"cofilling_reciprocal[{name},i={i}]",
                "cofilling-reciprocal", f"{name} dimension {i}",
                product, Fraction(1), product == 1))
            positive = ec.epsilon is not None and ec.epsilon > 0
            records.append(CheckRecord(
                f"expansion_positive_iff_h0[{name},i={i}]",
                "expansion-positive-iff-cohomology-trivial",
                f"{name} dimension {i}",
                ec.epsilon, ec.dim_h,
                positive == (ec.dim_h == 0)))
            if ec.dim_h == 0:
                records.append(CheckRecord(
                    f"expansion_equal_when_h0[{name},i={i}]",
                    "cofilling-reciprocal", f"{name} dimension {i}",
                    ec.epsilon, ec.epsilon_tilde,
                    ec.epsilon == ec.epsilon_tilde))
    return records


def _check_cheeger_normalization(config: SuiteConfig) -> list[CheckRecord]:
    records = []
    for name in config.graph_fixtures:
        X = resolve_fixture(name)
        if X.dim != 1:
            continue
        G = GraphView.from_complex(X)
        if not G.is_regular() or G.n > 10:
            continue
        ec = expansion_constants(X, 0, config.caps)
        ch = cheeger_exact(G, config.caps)
        expected = ch.h * Fraction(X.n_faces(0), X.n_faces(1))
        records.append(CheckRecord(
            f"cheeger_normalization[{name}]", "cheeger-normalization",
            f"{name}: h={ch.h}", ec.epsilon, expected,
            ec.epsilon == expected))
    return records


def _check_subadditivity(config: SuiteConfig) -> list[CheckRecord]:
    rng = _child_rng(config.seed, "subadditivity")
    failures = 0
    total = 0
    for name in config.fixtures:
        X = resolve_fixture(name)
        for i in range(0, X.dim + 1):
            for _ in range(10):
                a = random_cochain(rng, X, i)
                b = random_cochain(rng, X, i)
                total += 1
                if norm(X, a + b) > norm(X, a) + norm(X, b):
                    failures += 1
    return [CheckRecord(
        "norm_subadditivity", "norm-subadditivity",
        f"10 random pairs per dimension per fixture ({total} total)",
        total - failures, total, failures == 0)]


def _check_local_minimization(config: SuiteConfig) -> list[CheckRecord]:
    rng = _child_rng(config.seed, "localmin")
    names = [n for n in ("delta5_2", "delta4_2", "rp2_6")
             if n in config.fixtures] or ["delta4_2"]
    per = max(1, config.n_localmin_samples // (len(names) * 2))
    records = []
    for name in names:
        X = resolve_fixture(name)
        for i in (1, 2):
            if i > X.dim:
                continue
            failures = 0
            for _ in range(per):
                alpha = random_cochain(rng, X, i)
                out = locally_minimize(X, alpha, config.caps)
                ok = is_locally_minimal(X, out.result, config.caps)[0]
                ok = ok and norm(X, out.result) <= norm(X, alpha)
                diff = (alpha + out.result).bits
                ok = ok and b_basis(X, i).contains(diff)
                ok = ok and (alpha + out.result).bits == apply_coboundary(
                    X, out.correction).bits
                ok = ok and out.steps <= step_bound(X, alpha)
                if not ok:
                    failures += 1
            records.append(CheckRecord(
                f"local_minimization[{name},i={i}]",
                "local-minimization-postconditions",
                f"{per} seeded random cochains",
                per - failures, per, failures == 0))
    return records


def _check_triangle_identities(config: SuiteConfig) -> list[CheckRecord]:
    rng = _child_rng(config.seed, "triangles")
    records = []
    names = [n for n in ("delta5_2", "delta6_2") ]
    per = max(1, config.n_triangle_samples // len(names))
    eps = config.params.epsilon
    for name in names:
        X = resolve_fixture(name)
        failures = 0
        for _ in range(per):
            alpha = random_cochain(rng, X, 1)
            prof = triangle_profile(X, alpha)
            cuts = link_cut_sizes(X, alpha)
            dec = thin_thick(X, alpha, eps)
            ok = (apply_coboundary(X, alpha).support_size
                  == prof.t1 + prof.t3)
            ok = ok and sum(cuts.values()) == 2 * prof.t1 + 2 * prof.t2
            weighted = sum(X.facet_degree[1][j]
                           for j in alpha.support_indices())
            ok = ok and prof.t1 + 2 * prof.t2 + 3 * prof.t3 == weighted
            ok = ok and dec.r + dec.s == 2 * alpha.support_size
            if not ok:
                failures += 1
        records.append(CheckRecord(
            f"triangle_identities[{name}]", "triangle-count-identities",
            f"{per} seeded random 1-cochains",
            per - failures, per, failures == 0))
    return records


def _check_lemma_suite(config: SuiteConfig) -> list[CheckRecord]:
    rng = _child_rng(config.seed, "lemma-suite")
    records = []
    names = [n for n in ("delta5_2", "delta6_2", "rp2_6")]
    per = max(1, config.n_lemma_samples // len(names))
    for name in names:
        X = resolve_fixture(name)
        budget = int(X.n_faces(1) * config.params.eta_1)
        failures = 0
        for _ in range(per):
            support = rng.sample(range(X.n_faces(1)),
                                 rng.randint(1, max(1, budget)))
            alpha = Cochain.from_indices(X, 1, support)
            alpha = locally_minimize(X, alpha, config.caps).result
            rep = dim2_lemma_suite(X, alpha, config.params, config.caps)
            if not rep.all_passed:
                failures += 1
        records.append(CheckRecord(
            f"lemma_suite[{name}]", "dim2-cut-bounds",
            f"{per} locally minimized cochains within the support budget",
            per - failures, per, failures == 0))
    return records


def _check_alon_milman(config: SuiteConfig) -> list[CheckRecord]:
    records = []
    for name in config.graph_fixtures:
        X = resolve_fixture(name)
        if X.dim != 1:
            continue
        G = GraphView.from_complex(X)
        if G.n > 12:
            continue
        failures = 0
        total = 0
        for mask in range(1, (1 << G.n) - 1):
            subset = [v for v in range(G.n) if (mask >> v) & 1]
            rep = alon_milman_report(G, subset, config.caps)
            total += 1
            ok = rep.cut_bound_ok and rep.cheeger_bound_ok
            if rep.internal_edge_identity_ok is not None:
                ok = ok and rep.internal_edge_identity_ok
            if not ok:
                failures += 1
        records.append(CheckRecord(
            f"alon_milman[{name}]", "alon-milman-cut-bounds",
            f"all {total} proper subsets", total - failures, total,
            failures == 0))
    return records


def _check_spectra(config: SuiteConfig) -> list[CheckRecord]:
    records = []
    F = resolve_fixture("flag_2_3")
    G = GraphView.from_complex(F)
    vals = np.sort(spectrum(G, config.caps))
    expected = np.sort(np.array([3.0] + [np.sqrt(2)] * 6
                                + [-np.sqrt(2)] * 6 + [-3.0]))
    err = float(np.max(np.abs(vals - expected)))
    records.append(CheckRecord(
        "spectrum[flag_2_3]", "incidence-graph-eigenvalues",
        "flag complex of a 3-dim space over GF(2), q=2",
        err, 0.0, err <= SPECTRAL_TOL))

    for name, expect in (("cycle_4", [2.0, 0.0, 0.0, -2.0]),
                         ("k4", [3.0, -1.0, -1.0, -1.0])):
        G = GraphView.from_complex(resolve_fixture(name))
        vals = np.sort(spectrum(G, config.caps))
        err = float(np.max(np.abs(vals - np.sort(np.array(expect)))))
        records.append(CheckRecord(
            f"spectrum[{name}]", "small-graph-spectra", name, err, 0.0,
            err <= SPECTRAL_TOL))

    rng = _child_rng(config.seed, "laplacian-kernel")
    failures = 0
    for _ in range(config.n_random_graphs):
        n = rng.randint(2, 12)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.3:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        G = GraphView(n, adj)
        lap = laplacian_spectrum(G, config.caps)
        zero_mult = int(np.sum(np.abs(lap) <= 1e-6))
        if zero_mult != G.component_count():
            failures += 1
    records.append(CheckRecord(
        "laplacian_zero_multiplicity", "laplacian-kernel-components",
        f"{config.n_random_graphs} seeded random graphs",
        config.n_random_graphs - failures, config.n_random_graphs,
        failures == 0))
    return records


def _check_flag_structure(config: SuiteConfig) -> list[CheckRecord]:
    records = []
    X = flag_complex(2, 4)
    G = GraphView.from_complex(X)
    degs = sorted(G.degrees)
    ok = (X.n_vertices() == 65 and degs.count(6) == 35
          and degs.count(14) == 30)
    records.append(CheckRecord(
        "flag_degrees[2_4]", "flag-degree-profile",
        "65 subspaces of a 4-dim space over GF(2)",
        degs.count(6), 35, ok))
    for q, m in ((2, 3), (3, 3), (2, 4)):
        table = subspace_table(q, m)
        ok = all(len(table.by_dim[k]) == gaussian_binomial(m, k, q)
                 for k in range(1, m))
        total = sum(len(v) for v in table.by_dim.values())
        expected = sum(gaussian_binomial(m, k, q) for k in range(1, m))
        records.append(CheckRecord(
            f"subspace_counts[q={q},m={m}]", "gaussian-binomial-counts",
            f"subspaces of dimension 1..{m - 1}", total, expected, ok))
    return records


def _systole_oracle(X: SimplicialComplex, i: int) -> Fraction | None:
    """Independent enumeration of all cochains in dimension i: minimum norm
    over cocycles outside the coboundary space."""
    m = X.n_faces(i)
    delta = coboundary(X, i).data.astype(np.int64)
    bits_table = ((np.arange(1 << m, dtype=np.int64)[:, None]
                   >> np.arange(m, dtype=np.int64)) & 1)
    cocycle_mask = ~((delta @ bits_table.T) % 2).any(axis=0)
    B = b_basis(X, i)
    nums, denom = X.weight_numerators(i)
    weights = bits_table @ np.asarray(nums, dtype=np.int64)
    best = None
    for idx in np.nonzero(cocycle_mask)[0]:
        bits = int(idx)
        if B.contains(bits):
            continue
        value = Fraction(int(weights[idx]), denom)
        if best is None or value < best:
            best = value
    return best


def _check_systole_certificate(config: SuiteConfig) -> list[CheckRecord]:
    records = []
    if "rp2_6" not in config.fixtures:
        return records
    X = resolve_fixture("rp2_6")
    records.append(CheckRecord(
        "cohomology[rp2_6,i=1]", "projective-plane-cohomology",
        "6-vertex projective plane", cohomology_dim(X, 1), 1,
        cohomology_dim(X, 1) == 1))
    oracle = _systole_oracle(X, 1)
    found = systole(X, 1, config.caps)
    records.append(CheckRecord(
        "systole_oracle[rp2_6,i=1]", "systole-by-enumeration",
        "exhaustive over all 1-cochains",
        None if found is None else found.norm, oracle,
        found is not None and found.norm == oracle))

    mus = [expansion_constants(X, i, config.caps).mu for i in range(X.dim)]
    mu_default = max(m for m in mus if m is not None)
    eta_default = found.norm if found is not None else Fraction(1)
    mu_bound = config.gromov_mu if config.gromov_mu is not None else mu_default
    eta_bound = (config.gromov_eta if config.gromov_eta is not None
                 else eta_default)
    cert = certify_gromov(X, mu_bound, eta_bound, config.caps)
    records.append(CheckRecord(
        "certify_gromov[rp2_6]", "cofilling-systole-certificate",
        f"mu<={mu_bound}, eta={eta_bound}",
        min(cert.systole_values[i] for i in cert.systole_values
            if cert.systole_values[i] is not None),
        eta_bound, cert.passed))
    return records


def _check_coset_equivalence(config: SuiteConfig) -> list[CheckRecord]:
    rng = _child_rng(config.seed, "coset-mitm")
    failures = 0
    for _ in range(config.n_coset_instances):
        m = rng.randint(4, 20)
        k = rng.randint(1, min(m, 12))
        rows: list[int] = []
        while len(rows) < k:
            v = rng.randrange(1, 1 << m)
            try:
                SubspaceBasis.from_bit_rows(rows + [v], m)
            except ValueError:
                continue
            rows.append(v)
        basis = SubspaceBasis.from_bit_rows(rows, m)
        target = rng.randrange(0, 1 << m)
        weights = [Fraction(rng.randint(1, 30), rng.randint(1, 12))
                   for _ in range(m)]
        a = min_weight_in_coset(target, basis, weights, config.caps,
                                method="exhaustive")
        b = min_weight_in_coset(target, basis, weights, config.caps,
                                method="mitm")
        if (a.norm, a.vector) != (b.norm, b.vector):
            failures += 1
    return [CheckRecord(
        "coset_mitm_equivalence", "plumbing",
        f"{config.n_coset_instances} seeded instances, dim <= 12",
        config.n_coset_instances - failures, config.n_coset_instances,
        failures == 0)]


def _overlap_grid_oracle(coords, faces, cands) -> int:
    """Depth maximum over a 400x400 rational grid plus the shared candidate
    set, with its own integer-arithmetic containment test.

    Coordinates are scaled by lcm(denominators) * (GRID - 1) so that both
    the input points and the grid points are exact int64 lattice points.
    """
    denom = 1
    for pt in coords:
        for c in pt:
            denom = lcm(denom, c.denominator)
    scale = denom * (GRID - 1)
    pts = np.array([[int(c * scale) for c in pt] for pt in coords],
                   dtype=np.int64)
    xs = pts[:, 0]
    ys = pts[:, 1]
    # (max - min) is divisible by GRID - 1 after scaling
    step_x = (int(xs.max()) - int(xs.min())) // (GRID - 1)
    step_y = (int(ys.max()) - int(ys.min())) // (GRID - 1)
    gx = xs.min() + step_x * np.arange(GRID, dtype=np.int64)
    gy = ys.min() + step_y * np.arange(GRID, dtype=np.int64)
    grid_x, grid_y = np.meshgrid(gx, gy, indexing="ij")
    px = grid_x.ravel()
    py = grid_y.ravel()
    depth = np.zeros(px.shape[0], dtype=np.int64)
    for f in faces:
        a, b, c = (pts[f[0]], pts[f[1]], pts[f[2]])
        area = ((b[0] - a[0]) * (c[1] - a[1])
                - (b[1] - a[1]) * (c[0] - a[0]))
        if area != 0:
            d1 = _orient_np(a, b, px, py)
            d2 = _orient_np(b, c, px, py)
            d3 = _orient_np(c, a, px, py)
            inside = (((d1 >= 0) & (d2 >= 0) & (d3 >= 0))
                      | ((d1 <= 0) & (d2 <= 0) & (d3 <= 0)))
        else:
            # degenerate: the hull is the segment between the extreme pair
            u, w = _extreme_pair(a, b, c)
            if (u == w).all():
                inside = (px == u[0]) & (py == u[1])
            else:
                on_line = _orient_np(u, w, px, py) == 0
                lo_x, hi_x = min(u[0], w[0]), max(u[0], w[0])
                lo_y, hi_y = min(u[1], w[1]), max(u[1], w[1])
                inside = (on_line & (px >= lo_x) & (px <= hi_x)
                          & (py >= lo_y) & (py <= hi_y))
        depth += inside.astype(np.int64)
    best_grid = int(depth.max()) if depth.size else 0

    # candidate points, exact rational arithmetic with a local predicate
    best_cand = 0
    for p in cands:
        count = 0
        for f in faces:
            tri = [coords[f[0]], coords[f[1]], coords[f[2]]]
            if _contains_fraction(p, tri):
                count += 1
        best_cand = max(best_cand, count)
    return max(best_grid, best_cand)


def _orient_np(a, b, px, py):
    return (b[0] - a[0]) * (py - a[1]) - (b[1] - a[1]) * (px - a[0])


def _extreme_pair(a, b, c):
    pairs = ((a, b), (a, c), (b, c))
    return max(pairs, key=lambda p: abs(int(p[0][0]) - int(p[1][0]))
               + abs(int(p[0][1]) - int(p[1][1])))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _contains_fraction(p, tri) -> bool:
    a, b, c = tri

    def cross(u, v, w):
        return (v[0] - u[0]) * (w[1] - u[1]) - (v[1] - u[1]) * (w[0] - u[0])

    if _sign(cross(a, b, c)) == 0:
        u, w = max(((a, b), (a, c), (b, c)),
                   key=lambda s: abs(s[0][0] - s[1][0]) + abs(s[0][1] - s[1][1]))
        if u == w:
            return p == u
        if _sign(cross(u, w, p)) != 0:
            return False
        return (min(u[0], w[0]) <= p[0] <= max(u[0], w[0])
                and min(u[1], w[1]) <= p[1] <= max(u[1], w[1]))
    o1, o2, o3 = (_sign(cross(a, b, p)), _sign(cross(b, c, p)),
                  _sign(cross(c, a, p)))
    return (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0)


def _random_point_config(rng: random.Random, X: SimplicialComplex) -> dict:
    return {v: (Fraction(rng.randint(-32, 32), rng.randint(1, 8)),
                Fraction(rng.randint(-32, 32), rng.randint(1, 8)))
            for v in X.vertices}


def _check_overlap(config: SuiteConfig) -> list[CheckRecord]:
    rng = _child_rng(config.seed, "overlap")
    records = []

    oracle_failures = 0
    mc_failures = 0
    for _ in range(config.n_overlap_instances):
        n = rng.randint(5, 7)
        X = complete_complex(n, 2)
        points = _random_point_config(rng, X)
        result = geometric_overlap_2d(X, points)
        cands = candidate_points(X, points)
        coords = [points[v] for v in X.vertices]
        oracle = _overlap_grid_oracle(coords, X.faces[2], cands)
        if oracle != result.max_depth:
            oracle_failures += 1
        mc = geometric_overlap_mc(X, points, samples=40,
                                  seed=rng.randint(0, 10 ** 6))
        if mc.depth_lower_bound > result.max_depth:
            mc_failures += 1
    records.append(CheckRecord(
        "overlap_oracle", "depth-at-arrangement-candidates",
        f"{config.n_overlap_instances} seeded 5-7 point instances",
        config.n_overlap_instances - oracle_failures,
        config.n_overlap_instances, oracle_failures == 0))
    records.append(CheckRecord(
        "overlap_mc_lower_bound", "plumbing",
        "Monte Carlo estimate never exceeds the exact depth",
        config.n_overlap_instances - mc_failures,
        config.n_overlap_instances, mc_failures == 0))

    X = complete_complex(4, 2)
    quad = {"v0": (Fraction(0), Fraction(0)), "v1": (Fraction(1), Fraction(0)),
            "v2": (Fraction(1), Fraction(1)), "v3": (Fraction(0), Fraction(1))}
    result = geometric_overlap_2d(X, quad)
    records.append(CheckRecord(
        "overlap_quadrilateral", "depth-at-arrangement-candidates",
        "complete 2-complex on a convex quadrilateral",
        result.fraction, Fraction(1), result.fraction == 1))

    # Observed overlap fractions on complete complexes (report only).
    X7 = complete_complex(7, 2)
    observed = []
    for _ in range(5):
        points = _random_point_config(rng, X7)
        observed.append(geometric_overlap_2d(X7, points).fraction)
    records.append(CheckRecord(
        "overlap_observed_fraction(report-only)", "point-selection-constant",
        "5 random 7-point configurations; reference value 2/9",
        min(observed), Fraction(2, 9), True))
    return records


_CHECKS = (
    _check_delta_squared,
    _check_proposition_items,
    _check_cheeger_normalization,
    _check_subadditivity,
    _check_local_minimization,
    _check_triangle_identities,
    _check_lemma_suite,
    _check_alon_milman,
    _check_spectra,
    _check_flag_structure,
    _check_systole_certificate,
    _check_coset_equivalence,
    _check_overlap,
)


def run_suite(config: SuiteConfig | None = None) -> SuiteReport:
    """Run every check family; deterministic given the config seed."""
    if config is None:
        config = SuiteConfig()
    if not config.fixtures:
        raise ConfigError("fixture list is empty")
    for name in tuple(config.fixtures) + tuple(config.graph_fixtures):
        resolve_fixture(name)  # fail fast on unknown names
    records: list[CheckRecord] = []
    for check in _CHECKS:
        records.extend(check(config))
    records.sort(key=lambda r: r.check_id)
    caps = get_caps(config.caps)
    return SuiteReport(config.seed, __version__, tuple(records),
                       caps.to_dict())
