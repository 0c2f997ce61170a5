"""Command-line front door.

Exit codes: 0 success, 1 assertion failure or finding, 2 input error, 3 IO error.
Outputs are written only after all computation succeeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import limits
from .census import beth_finite, check_finite_cardinalities, ro_density_sweep, search_iso_nonhomeo
from .errors import InvalidSpace, SearchSpaceTooLarge, UnitopError
from .formats import dumps, lattice_to_dict, lattice_to_dot, load_space, rows_to_csv, write_atomic
from .functors import check_continuity_equiv, check_injective_open_equiv, check_onto_equiv, induced_relation
from .lattice import (
    atoms,
    build_lattice,
    cellularity,
    complemented_elements,
    hypothesis_violations,
    is_boolean,
    pi_density,
)
from .space import all_maps, clopen_sets, density, open_count, predicates, regular_open_sets

EXIT_OK, EXIT_FINDING, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3


class InputError(Exception):
    pass


def _labels(space, masks):
    return [space.labels_of(m) for m in masks]


def cmd_analyze(args) -> tuple[int, dict[str, str]]:
    space = load_space(args.space)
    L = build_lattice(space)
    pr = predicates(space)
    summary = {
        "space": space.to_dict(),
        "predicates": {"T0": pr.T0, "T1": pr.T1, "hausdorff": pr.hausdorff, "discrete": pr.discrete,
                       "zero_dimensional": pr.zero_dimensional},
        "closed_sets": _labels(space, space.closed_sets),
        "clopen_sets": _labels(space, clopen_sets(space)),
        "regular_open_sets": _labels(space, regular_open_sets(space)),
        "density": density(space),
        "open_count": open_count(space),
        "lattice_size": len(L),
        "atoms": [L.space.labels_of(L.canons[i]) for i in atoms(L)],
        "complemented": [L.space.labels_of(L.canons[i]) for i in complemented_elements(L)],
        "is_boolean": is_boolean(L),
        "c": cellularity(L),
        "pi": pi_density(L),
        "hypothesis_violations": [v.to_dict() for v in hypothesis_violations(L)],
        "notes": "density and open_count are finite analogues of the cardinal functions d and o",
    }
    outputs = {}
    if args.json:
        outputs[args.json] = dumps(summary)
    else:
        print(dumps(summary), end="")
    return EXIT_OK, outputs


def cmd_lattice(args) -> tuple[int, dict[str, str]]:
    space = load_space(args.space)
    L = build_lattice(space)
    outputs = {}
    if args.dot:
        outputs[args.dot] = lattice_to_dot(L)
    if args.json:
        outputs[args.json] = dumps(lattice_to_dict(L))
    if not outputs:
        print(lattice_to_dot(L), end="")
    return EXIT_OK, outputs


def cmd_maps(args) -> tuple[int, dict[str, str]]:
    source, target = load_space(args.source), load_space(args.target)
    L1, L2 = build_lattice(source), build_lattice(target)
    reports = []
    for f in all_maps(source, target):
        phi = induced_relation(f, L1, L2)
        reports.extend(r.to_dict() for r in (check_continuity_equiv(f, phi), check_injective_open_equiv(f, phi),
                                             check_onto_equiv(f, phi)))
    failed = [r for r in reports if r["verdict"] == "fails"]
    out = {"reports": reports, "failures": len(failed)}
    outputs = {}
    if args.json:
        outputs[args.json] = dumps(out)
    else:
        print(dumps(out), end="")
    return (EXIT_FINDING if failed else EXIT_OK), outputs


def cmd_census(args) -> tuple[int, dict[str, str]]:
    top = args.max_points
    if top > 3 and not args.slow:
        raise InputError("--max-points above 3 needs --slow")
    reports = [check_finite_cardinalities(n) for n in range(1, top + 1)]
    ro = ro_density_sweep(top)
    data = {"reports": [r.to_dict(include_timing=args.timing) for r in reports], "regular_open_bound": ro}
    outputs = {}
    if args.json:
        outputs[args.json] = dumps(data)
    if args.csv:
        rows = [{"n": r.n, "sigma": r.sigma_count, "directed_with_empty": r.dx_count.with_empty,
                 "directed_nonempty": r.dx_count.nonempty, "beth2": beth_finite(2, r.n),
                 "passed": r.passed} for r in reports]
        outputs[args.csv] = rows_to_csv(rows, ["n", "sigma", "directed_with_empty", "directed_nonempty",
                                               "beth2", "passed"])
    if not outputs:
        print(dumps(data), end="")
    ok = all(r.passed for r in reports) and ro["passed"]
    return (EXIT_OK if ok else EXIT_FINDING), outputs


def cmd_search(args) -> tuple[int, dict[str, str]]:
    restrict = None if args.restrict == "all" else args.restrict
    findings = search_iso_nonhomeo(args.max_points, restrict)
    data = {"max_points": args.max_points, "restrict": args.restrict, "findings": findings}
    outputs = {}
    if args.json:
        outputs[args.json] = dumps(data)
    else:
        print(dumps(data), end="")
    # a finding among T0 (or stricter) spaces would be a headline result
    headline = restrict in ("T0", "T1", "discrete") and findings
    return (EXIT_FINDING if headline else EXIT_OK), outputs


def cmd_check_paper(args) -> tuple[int, dict[str, str]]:
    from .sweep import run_paper_checks

    k = args.max_points
    if k > 3 and not args.slow:
        raise InputError("--max-points above 3 needs --slow")
    report = run_paper_checks(k, jobs=args.jobs, fault=args.inject_fault)
    text = dumps(report)
    outputs = {args.out: text} if args.out else {}
    for pid, tally in report["propositions"].items():
        mark = "FAIL" if tally["failures"] else "ok  "
        print(f"{mark} {pid}: {tally['instances']} instances, {tally['failures']} failures", file=sys.stderr)
    if not args.out:
        print(text, end="")
    return (EXIT_OK if report["passed"] else EXIT_FINDING), outputs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unitop", description="Lattices of directed-family classes "
                                     "over finite topological spaces.")
    parser.add_argument("--unsafe-limits", action="store_true", help="lift all search-space guards")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for map sweeps")
    parser.add_argument("--seed", type=int, default=None, help="reserved; no randomized paths")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", help="summarize a space and its lattice")
    p.add_argument("space")
    p.add_argument("--json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lattice", help="export the Hasse diagram and lattice dump")
    p.add_argument("space")
    p.add_argument("--dot")
    p.add_argument("--json")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("maps", help="check the induced-relation equivalences on every map")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--json")
    p.set_defaults(func=cmd_maps)

    p = sub.add_parser("census", help="counts of topologies and directed families")
    p.add_argument("--max-points", type=int, default=3)
    p.add_argument("--slow", action="store_true")
    p.add_argument("--json")
    p.add_argument("--csv")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings (not byte-stable)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("search", help="isomorphic lattices over non-homeomorphic spaces")
    p.add_argument("--max-points", type=int, default=3)
    p.add_argument("--restrict", choices=["all", "T0", "T1", "discrete"], default="all")
    p.add_argument("--json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("check-paper", help="run every theorem checker exhaustively")
    p.add_argument("--max-points", type=int, default=3)
    p.add_argument("--slow", action="store_true")
    p.add_argument("--out")
    p.add_argument("--inject-fault", choices=["meet-table"], default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_check_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        with limits.unsafe_limits(args.unsafe_limits):
            code, outputs = args.func(args)
    except (InvalidSpace, InputError, FileNotFoundError, IsADirectoryError, json.JSONDecodeError) as exc:
        name = exc.code if isinstance(exc, UnitopError) else type(exc).__name__
        print(f"error: {name}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SearchSpaceTooLarge as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnitopError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_FINDING
    try:
        for path in outputs:
            parent = os.path.dirname(os.path.abspath(path))
            if not os.path.isdir(parent) or not os.access(parent, os.W_OK):
                raise OSError(f"directory {parent} is not writable")
        for path, text in outputs.items():
            write_atomic(path, text)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
