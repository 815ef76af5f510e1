"""Command line interface.

Subcommands: gen, compute, localmin, lemmas, overlap, verify.
Exit codes: 0 success, 1 verification/check failure, 2 usage or I/O error.
Feasibility caps honour the HDX_CAPS environment variable.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction

from . import __version__
from .cochains import cochain_from_file
from .complexes import complex_from_file, complex_to_file
from .errors import HDXError
from .generators import (cayley_clique_complex, complete_complex, fixture,
                         flag_complex, load_generator_file)
from .localmin import IsoperimetryParams, dim2_lemma_suite, locally_minimize
from .overlap import (geometric_overlap_2d, geometric_overlap_mc,
                      points_from_file)
from .report import full_report, json_canonical, tag_value
from .suite import SuiteConfig, run_suite


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "complete":
        X = complete_complex(args.n, args.d)
    elif args.family == "flag":
        X = flag_complex(args.q, args.m)
    elif args.family == "cayley":
        gens, _ = load_generator_file(args.file)
        X, rep = cayley_clique_complex(gens, args.max_dim)
        if not rep.was_pure:
            sys.stderr.write(
                f"note: truncated to pure dimension {rep.dim}; "
                f"{rep.dropped_cliques} cliques outside a facet\n")
    elif args.family == "fixture":
        X = fixture(args.name)
    else:
        raise HDXError(f"unknown family {args.family!r}")
    complex_to_file(X, args.output)
    return 0


def _cmd_compute(args: argparse.Namespace) -> int:
    X = complex_from_file(args.complex)
    report = full_report(X)
    if args.i is not None:
        data = report.to_json_dict()
        data["constants"] = [row for row in data["constants"]
                             if row["i"] == args.i]
        text = json_canonical(data)
    else:
        text = report.to_json()
    _write_output(text, args.output)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report.to_csv())
    return 0


def _cmd_localmin(args: argparse.Namespace) -> int:
    X = complex_from_file(args.complex)
    alpha = cochain_from_file(X, args.cochain)
    out = locally_minimize(X, alpha)
    payload = {
        "minimized": out.result.to_json_dict(X),
        "correction": out.correction.to_json_dict(X),
        "steps": out.steps,
    }
    _write_output(json_canonical(payload), args.output)
    return 0


def _cmd_lemmas(args: argparse.Namespace) -> int:
    X = complex_from_file(args.complex)
    alpha = cochain_from_file(X, args.cochain)
    params = IsoperimetryParams(
        epsilon=Fraction(args.eps), epsilon_prime=Fraction(args.eps_prime),
        xi=Fraction(args.xi), q=args.q)
    report = dim2_lemma_suite(X, alpha, params)
    _write_output(json_canonical(report.to_json_dict()), args.output)
    return 0


def _cmd_overlap(args: argparse.Namespace) -> int:
    X = complex_from_file(args.complex)
    points = points_from_file(args.points)
    if args.mc is not None:
        est = geometric_overlap_mc(X, points, args.mc, args.seed)
        payload = {
            "mode": "monte-carlo",
            "depth_lower_bound": est.depth_lower_bound,
            "fraction_lower_bound": tag_value(est.fraction_lower_bound),
            "interval": [tag_value(est.interval[0]), tag_value(est.interval[1])],
            "witness_point": [str(c) for c in est.witness_point],
            "covering_facets": [list(f) for f in est.covering_facets],
            "samples": est.samples,
            "seed": est.seed,
            "convention": est.convention,
        }
    else:
        result = geometric_overlap_2d(X, points)
        payload = {
            "mode": "exact",
            "max_depth": result.max_depth,
            "fraction": tag_value(result.fraction),
            "witness_point": [str(c) for c in result.witness_point],
            "covering_facets": [list(f) for f in result.covering_facets],
            "convention": result.convention,
        }
    _write_output(json_canonical(payload), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    config = (SuiteConfig.from_file(args.config) if args.config
              else SuiteConfig())
    if args.seed is not None:
        config = dataclasses.replace(config, seed=args.seed)
    report = run_suite(config)
    _write_output(report.to_json(), args.output)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report.to_csv())
    failed = [c for c in report.checks if not c.passed]
    if failed:
        for c in failed:
            sys.stderr.write(f"FAIL {c.check_id}\n")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hdx",
        description="exact expansion toolkit for simplicial complexes over F2")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a complex file")
    gen_sub = p.add_subparsers(dest="family", required=True)
    g = gen_sub.add_parser("complete", help="complete d-complex on n vertices")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_gen)
    g = gen_sub.add_parser("flag", help="subspace flag complex of F_q^m")
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_gen)
    g = gen_sub.add_parser("cayley", help="Cayley clique complex from a "
                                          "generator file")
    g.add_argument("--file", required=True,
                   help='JSON {"degree": m, "generators": [[...], ...]}')
    g.add_argument("--max-dim", type=int, default=2)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_gen)
    g = gen_sub.add_parser("fixture", help="named fixture complex")
    g.add_argument("--name", required=True)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_gen)

    p = sub.add_parser("compute", help="expansion report for a complex file")
    p.add_argument("complex")
    p.add_argument("--i", type=int, default=None,
                   help="restrict to one dimension")
    p.add_argument("--all", action="store_true",
                   help="all dimensions (default)")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("localmin", help="locally minimize a cochain")
    p.add_argument("complex")
    p.add_argument("cochain")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_localmin)

    p = sub.add_parser("lemmas", help="dimension-2 identity and bound report")
    p.add_argument("complex")
    p.add_argument("cochain")
    p.add_argument("--eps", default="1/10")
    p.add_argument("--eps-prime", default="1/10")
    p.add_argument("--xi", default="1/100")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_lemmas)

    p = sub.add_parser("overlap", help="point depth of affine facet images")
    p.add_argument("complex")
    p.add_argument("points")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true",
                       help="exact planar maximum (default)")
    group.add_argument("--mc", type=int, default=None,
                       help="Monte Carlo lower bound with this many samples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_overlap)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--config", default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (HDXError, OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
