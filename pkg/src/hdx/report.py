"""Tagged report values and the per-complex expansion report.

Every numeric value in a serialized report carries its exactness tag:
rationals as exact "p/q" strings with a 12-digit decimal rendering, floats
as 12-significant-digit strings with their tolerance.  JSON is rendered
with sorted keys and fixed separators so that fixed inputs give
byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .caps import FeasibilityCaps, get_caps
from .cochains import expansion_constants, systole
from .complexes import SimplicialComplex
from .spectral import (SPECTRAL_TOL, GraphView, is_ramanujan_graph, lambda1,
                       spectrum)

FLOAT_TOL = "1e-09"


def dec12(x: Fraction) -> str:
    return f"{x.numerator / x.denominator:.12g}"


def tag_value(x) -> dict | None:
    """Exactness-tagged rendering of a report number."""
    if x is None:
        return None
    if isinstance(x, bool):
        raise TypeError("booleans are not report values")
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return {"kind": "rational", "value": str(x), "decimal": dec12(x)}
    if isinstance(x, float):
        return {"kind": "float", "value": f"{x:.12g}", "tol": FLOAT_TOL}
    raise TypeError(f"cannot tag {type(x).__name__}")


def untag(d: dict | None):
    if d is None:
        return None
    if d["kind"] == "rational":
        return Fraction(d["value"])
    return float(d["value"])


def json_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def csv_render(fieldnames: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


@dataclass(frozen=True)
class ExpansionRow:
    i: int
    dim_h: int
    epsilon: Fraction | None
    epsilon_tilde: Fraction | None
    mu: Fraction | None
    systole: Fraction | None
    systole_support: int | None


@dataclass(frozen=True)
class ExpansionReport:
    """All expansion quantities of one complex plus a 1-skeleton spectral
    summary.  The epsilon value 0 flags non-trivial cohomology (the
    convention is recorded under conventions)."""

    f_vector: tuple[int, ...]
    dim: int
    rows: tuple[ExpansionRow, ...]
    spectral: dict
    conventions: dict

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "f_vector": list(self.f_vector),
            "constants": [
                {
                    "i": row.i,
                    "dim_h": row.dim_h,
                    "epsilon": tag_value(row.epsilon),
                    "epsilon_tilde": tag_value(row.epsilon_tilde),
                    "mu": tag_value(row.mu),
                    "systole": tag_value(row.systole),
                    "systole_support": row.systole_support,
                }
                for row in self.rows
            ],
            "spectral": {k: tag_value(v) if isinstance(v, (int, float, Fraction))
                         and not isinstance(v, bool) else v
                         for k, v in sorted(self.spectral.items())},
            "conventions": self.conventions,
        }

    def to_json(self) -> str:
        return json_canonical(self.to_json_dict())

    def to_csv(self) -> str:
        rows = []
        for row in self.rows:
            for name, value in (("epsilon", row.epsilon),
                                ("epsilon_tilde", row.epsilon_tilde),
                                ("mu", row.mu),
                                ("systole", row.systole)):
                tag = tag_value(value)
                rows.append({
                    "quantity": name,
                    "i": row.i,
                    "kind": "" if tag is None else tag["kind"],
                    "value": "" if tag is None else tag["value"],
                    "decimal": "" if tag is None else tag.get("decimal", ""),
                })
            rows.append({"quantity": "dim_h", "i": row.i, "kind": "rational",
                         "value": str(row.dim_h), "decimal": str(row.dim_h)})
        return csv_render(["quantity", "i", "kind", "value", "decimal"], rows)


def spectral_summary(X: SimplicialComplex,
                     caps: FeasibilityCaps | None = None) -> dict:
    """Spectral facts about the 1-skeleton; floats carry the 1e-9 contract."""
    G = GraphView.from_complex(X)
    vals = spectrum(G, caps)
    out: dict = {
        "vertices": G.n,
        "edges": G.edge_count(),
        "min_degree": min(G.degrees),
        "max_degree": max(G.degrees),
        "components": G.component_count(),
        "adjacency_max": float(vals[0]),
        "adjacency_min": float(vals[-1]),
        "laplacian_gap": lambda1(G, caps),
        "regular": G.is_regular(),
    }
    if G.is_regular() and G.is_connected():
        k = G.degree(0)
        nontrivial = [abs(float(v)) for v in vals
                      if abs(float(v)) < k - SPECTRAL_TOL]
        out["second_eigenvalue"] = max(nontrivial) if nontrivial else 0.0
        verdict, offender = is_ramanujan_graph(G, caps)
        out["ramanujan"] = verdict
    return out


def full_report(X: SimplicialComplex,
                caps: FeasibilityCaps | None = None) -> ExpansionReport:
    """Expansion constants, cohomology dimensions and systoles for every
    dimension 0..d-1 of one complex."""
    caps = get_caps(caps)
    rows = []
    for i in range(0, X.dim):
        ec = expansion_constants(X, i, caps)
        sy = systole(X, i, caps)
        rows.append(ExpansionRow(
            i=i, dim_h=ec.dim_h, epsilon=ec.epsilon,
            epsilon_tilde=ec.epsilon_tilde, mu=ec.mu,
            systole=None if sy is None else sy.norm,
            systole_support=None if sy is None else sy.support_size))
    f_vector = tuple(X.n_faces(i) for i in range(0, X.dim + 1))
    conventions = {
        "epsilon_when_cohomology_nontrivial": "0",
        "norms": "exact-rational",
        "spectra": f"float within {FLOAT_TOL}",
    }
    return ExpansionReport(f_vector, X.dim, tuple(rows),
                           spectral_summary(X, caps), conventions)
