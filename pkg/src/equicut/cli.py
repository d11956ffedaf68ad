"""Command-line front end.

Commands: gen, solve, label, sweep, verify. All flags are explicit long
names; EQUICUT_WORKERS sets the default worker count. Exit codes: 0 success,
2 invalid input, 3 method infeasible for the instance, 4 verification
failure, 5 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import EnumerationCapError, InvalidInputError
from .graphs import GraphFamilySpec, load_graph, save_graph
from .parity import Equicut, ParityLabeling, equicut_size, is_balanced, signature_from_labeling
from .solver import (
    SolverConfig,
    rna_branch_and_bound,
    rna_exhaustive,
    rna_local_search,
)
from .sweep import run_sweep, write_sweep_outputs
from .verify import run_formulas_suite, run_paper_suite, run_solvers_suite

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3
EXIT_VERIFY_FAILED = 4
EXIT_IO = 5

_METHODS = {
    "exhaustive": rna_exhaustive,
    "branch-and-bound": rna_branch_and_bound,
    "local-search": rna_local_search,
}


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("EQUICUT_WORKERS", "1")))
    except ValueError:
        return 1


def _family_spec(args: argparse.Namespace) -> GraphFamilySpec:
    family = args.family.replace("-", "_")
    jumps = None
    if args.jumps is not None:
        try:
            jumps = tuple(int(x) for x in args.jumps.split(","))
        except ValueError:
            raise InvalidInputError(f"--jumps must be comma-separated integers, got {args.jumps!r}")
    return GraphFamilySpec(family=family, n=args.n, d=args.d, jumps=jumps)


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    symmetry = {"auto": None, "on": True, "off": False}[args.symmetry]
    return SolverConfig(
        symmetry_reduction=symmetry,
        restarts=args.restarts,
        rng_seed=args.seed,
        parallelism=args.workers,
        initial_upper_bound=args.upper_bound,
        exhaustive_cap=args.cap,
    )


def cmd_gen(args: argparse.Namespace) -> int:
    spec = _family_spec(args)
    if spec.family == "cycle_power" and spec.d >= spec.n // 2:
        print(
            f"note: d={spec.d} >= floor(n/2)={spec.n // 2}, emitting the complete graph",
            file=sys.stderr,
        )
    g = spec.build()
    save_graph(g, args.out)
    print(f"wrote {spec.describe()} (m={g.m}) to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    cfg = _solver_config(args)
    result = _METHODS[args.method](g, cfg)
    print(json.dumps(result.to_json_dict()))
    return EXIT_OK


def cmd_label(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    try:
        data = json.loads(Path(args.labeling).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{args.labeling}: not valid JSON ({exc})")
    labeling = ParityLabeling.from_json_dict(data)
    sg = signature_from_labeling(g, labeling)
    cut = Equicut(g.n, labeling.even_vertices())
    out = sg.to_json_dict()
    out["f"] = list(labeling.f)
    out["negative_count"] = sg.negative_count
    out["equicut"] = list(cut.vertices)
    out["equicut_size"] = equicut_size(g, cut)
    out["balanced"] = is_balanced(sg)
    print(json.dumps(out))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _solver_config(args)
    method = args.method.replace("-", "_")
    rows = run_sweep(
        (args.n_min, args.n_max),
        (args.d_min, args.d_max),
        cfg,
        method=method,
        workers=args.workers,
    )
    sidecars = write_sweep_outputs(rows, args.out)
    holds = sum(1 for r in rows if r.conjecture_match == "holds")
    fails = sum(1 for r in rows if r.conjecture_match == "fails")
    unsolved = sum(1 for r in rows if r.conjecture_match == "unsolved")
    print(
        f"{len(rows)} rows -> {args.out} (holds={holds} fails={fails} unsolved={unsolved})",
        file=sys.stderr,
    )
    for sidecar in sidecars:
        print(f"counterexample certificate: {sidecar}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "paper":
        results = run_paper_suite(seed=args.seed, out_dir=args.out_dir)
    elif args.suite == "formulas":
        results = run_formulas_suite(n_max=args.n_max or 60)
    else:
        results = run_solvers_suite(seed=args.seed, n_max=args.n_max or 14)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"[{status}] {res.criterion}: {res.detail} ({res.elapsed_ms:.0f} ms)")
        for failure in res.failures:
            print(f"         {failure}")
    all_passed = all(r.passed for r in results)
    if args.json:
        report = {
            "suite": args.suite,
            "passed": all_passed,
            "checks": [r.to_json_dict() for r in results],
        }
        Path(args.json).write_text(json.dumps(report, indent=2) + "\n")
    print(f"{'all checks passed' if all_passed else 'CHECKS FAILED'}")
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="RNG seed (local search restarts)")
    p.add_argument("--restarts", type=int, default=100, help="local-search restarts")
    p.add_argument("--workers", type=int, default=_default_workers(), help="worker processes")
    p.add_argument("--cap", type=int, default=30, help="exhaustive enumeration cap on n")
    p.add_argument("--upper-bound", type=int, default=None, dest="upper_bound",
                   help="trusted initial upper bound for branch-and-bound")
    p.add_argument("--symmetry", choices=("auto", "on", "off"), default="auto",
                   help="rotation symmetry reduction (auto: detect from the graph)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equicut",
        description="Minimum equicut sizes, parity signed graphs and cycle-power sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("--family", required=True,
                   choices=("cycle", "cycle-power", "circulant", "complete"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--jumps", default=None, help="comma-separated jump list, e.g. 1,4")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve one graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", default="exhaustive",
                   choices=("exhaustive", "branch-and-bound", "local-search"))
    _add_solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("label", help="apply a parity labeling to a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True, help='JSON file {"n": ..., "f": [...]}')
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("sweep", help="solve a cycle-power grid and write a CSV")
    p.add_argument("--n-min", type=int, required=True, dest="n_min")
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--d-min", type=int, required=True, dest="d_min")
    p.add_argument("--d-max", type=int, required=True, dest="d_max")
    p.add_argument("--method", default="auto",
                   choices=("auto", "exhaustive", "branch-and-bound", "local-search"))
    p.add_argument("--out", required=True)
    _add_solver_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=("paper", "formulas", "solvers"))
    p.add_argument("--n-max", type=int, default=None, dest="n_max",
                   help="range override for the formulas/solvers suites")
    p.add_argument("--seed", type=int, default=20260801)
    p.add_argument("--json", default=None, help="also write a JSON report here")
    p.add_argument("--out-dir", default=None, dest="out_dir",
                   help="directory for sweep artifacts (paper suite)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
