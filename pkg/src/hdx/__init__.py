"""Exact expansion toolkit for finite simplicial complexes over F2."""

__version__ = "0.1.0"

from .caps import FeasibilityCaps, caps_from_env
from .cochains import (Cochain, apply_coboundary, certify_gromov, coboundary,
                       cohomology_dim, expansion_constants, norm, norms,
                       systole)
from .complexes import (SimplicialComplex, build_from_facets, link,
                        weight_profile)
from .generators import (cayley_clique_complex, complete_complex, fixture,
                         flag_complex)
from .gf2 import F2Matrix, SubspaceBasis, min_weight_in_coset, reduce
from .localmin import (IsoperimetryParams, dim2_lemma_suite,
                       is_locally_minimal, locally_minimize, restrict_to_link,
                       thin_thick, triangle_profile)
from .overlap import geometric_overlap_2d, geometric_overlap_mc
from .report import full_report
from .spectral import (GraphView, alon_milman_report, cheeger_exact,
                       is_ramanujan_graph, spectrum)
from .suite import SuiteConfig, run_suite

__all__ = [
    "__version__",
    "FeasibilityCaps",
    "caps_from_env",
    "SimplicialComplex",
    "build_from_facets",
    "link",
    "weight_profile",
    "F2Matrix",
    "SubspaceBasis",
    "min_weight_in_coset",
    "reduce",
    "Cochain",
    "coboundary",
    "apply_coboundary",
    "cohomology_dim",
    "norm",
    "norms",
    "expansion_constants",
    "systole",
    "certify_gromov",
    "restrict_to_link",
    "is_locally_minimal",
    "locally_minimize",
    "triangle_profile",
    "thin_thick",
    "dim2_lemma_suite",
    "IsoperimetryParams",
    "GraphView",
    "spectrum",
    "cheeger_exact",
    "alon_milman_report",
    "is_ramanujan_graph",
    "complete_complex",
    "flag_complex",
    "cayley_clique_complex",
    "fixture",
    "geometric_overlap_2d",
    "geometric_overlap_mc",
    "full_report",
    "SuiteConfig",
    "run_suite",
]
