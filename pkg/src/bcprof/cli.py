"""Command-line interface: gen | profile | analyze | verify | expect | experiment.

Every command is deterministic given its flags. Errors exit with the code
of their error class (see errors.py); success exits 0. Decimal columns are
for humans only — all decisions inside the library are made on exact values.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import (
    BadSpecError,
    BcprofError,
    OddMError,
    OutOfRangeError,
)
from .experiments import (
    DEFAULT_FIXED_N,
    DEFAULT_TRIALS,
    EXPERIMENT_KINDS,
    ExperimentConfig,
    default_grid,
    run_experiment,
    write_csv,
    write_manifest,
)
from .scale_free import estimate_expected_profiles, exact_expected_pk, sample_tree
from .tree_core import all_profiles, path_counts_fast, profile, read_tree, write_tree
from .tree_families import (
    make_broom,
    make_double_broom,
    make_gij,
    make_path,
    make_tell,
)
from .profile_analysis import pair_analysis, vertex_analysis
from .verify import CHECK_NAMES, run_check


def _parse_ints(parts: list[str], spec: str) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise BadSpecError(f"non-integer argument in family spec {spec!r}")


def build_family(spec: str, seed: int):
    """(tree, comment lines) for a family spec string."""
    name, _, argstr = spec.partition(":")
    parts = argstr.split(",") if argstr else []
    comments = [f"family: {spec}"]
    try:
        if name == "path":
            (n,) = _parse_ints(parts, spec)
            return make_path(n), comments
        if name == "broom":
            m, n = _parse_ints(parts, spec)
            tree, center = make_broom(m, n)
            return tree, comments + [f"center: {center}"]
        if name == "double-broom":
            m, n = _parse_ints(parts, spec)
            tree, middle = make_double_broom(m, n)
            return tree, comments + [f"middle: {middle}"]
        if name == "gij":
            i, j = _parse_ints(parts, spec)
            tree, v = make_gij(i, j)
            return tree, comments + [f"designated vertex: {v}"]
        if name == "tell":
            if len(parts) == 2:
                l = _parse_ints(parts[:1], spec)[0]
                strategy = parts[1]
            else:
                (l,) = _parse_ints(parts, spec)
                strategy = "minimal_search"
            tree, u, v, choice = make_tell(l, strategy=strategy)
            return tree, comments + [
                f"u: {u}",
                f"v: {v}",
                f"a: {','.join(map(str, choice.a))}",
                f"b: {','.join(map(str, choice.b))}",
                f"strategy: {choice.strategy}",
            ]
        if name == "scale-free":
            (n,) = _parse_ints(parts, spec)
            tree = sample_tree(n, random.Random(seed)).tree()
            return tree, comments + [f"seed: {seed}"]
    except (ValueError, OutOfRangeError, OddMError) as exc:
        raise BadSpecError(f"bad family spec {spec!r}: {exc}")
    raise BadSpecError(f"unknown family {name!r} in spec {spec!r}")


def cmd_gen(args) -> int:
    tree, comments = build_family(args.family, args.seed)
    text = write_tree(tree, comments)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _load_tree(path: str):
    with open(path) as fh:
        return read_tree(fh)


def cmd_profile(args) -> int:
    tree = _load_tree(args.tree)
    table = path_counts_fast(tree)
    if args.all:
        profiles = all_profiles(tree, table)
    else:
        profiles = [profile(tree, args.vertex, table)]
    rows = [
        {
            "vertex": p.vertex,
            "k": k,
            "numerator": e.numerator,
            "denominator": e.denominator,
            "decimal": f"{float(e):.6f}",
        }
        for p in profiles
        for k, e in zip(p.k_range(), p.entries)
    ]
    if args.format == "json":
        json.dump(rows, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print("vertex,k,numerator,denominator,decimal")
        for r in rows:
            print(f"{r['vertex']},{r['k']},{r['numerator']},{r['denominator']},{r['decimal']}")
    return 0


def cmd_analyze(args) -> int:
    tree = _load_tree(args.tree)
    table = path_counts_fast(tree)
    if args.pair is not None:
        u, v = args.pair
        report = pair_analysis(profile(tree, u, table), profile(tree, v, table))
    else:
        report = vertex_analysis(profile(tree, args.vertex, table))
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_verify(args) -> int:
    report = run_check(args.check, args.max_size)
    for case in report.cases:
        status = "PASS" if case.passed else "FAIL"
        suffix = f": {case.detail}" if case.detail else ""
        print(f"{status} {report.check} {case.name}{suffix}")
    print(f"{report.check}: {'pass' if report.passed else 'FAIL'} "
          f"({len(report.cases)} cases)")
    return 0 if report.passed else 1


def cmd_expect(args) -> int:
    if args.exact:
        if args.k is None:
            raise BadSpecError("--exact requires --k")
        values = [exact_expected_pk(args.n, v, args.k) for v in range(1, args.n + 1)]
        print("vertex,k,expectation,decimal")
        for v, e in enumerate(values, start=1):
            print(f"{v},{args.k},{e.numerator}/{e.denominator},{float(e):.6f}")
        return 0
    _, rows = estimate_expected_profiles(args.n, args.trials, args.seed)
    print("vertex,k,mean,stderr,trials")
    for r in rows:
        if args.k is not None and r["k"] != args.k:
            continue
        print(f"{r['vertex']},{r['k']},{r['mean']:.6f},{r['stderr']:.6f},{r['trials']}")
    return 0


def cmd_experiment(args) -> int:
    grid = tuple(int(x) for x in args.grid.split(",")) if args.grid else default_grid(args.which)
    cfg = ExperimentConfig(
        which=args.which,
        grid=grid,
        trials=args.trials,
        fixed_n=args.fixed_n,
        seed=args.seed,
    )
    res = run_experiment(cfg)
    if args.out:
        write_csv(res, args.out)
        write_manifest(res, args.out + ".manifest.json")
    else:
        from .experiments import render_csv

        sys.stdout.write(render_csv(res))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcprof",
        description="Exact k-betweenness-centrality profiles of trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a tree family instance")
    p.add_argument("family", help="family spec, e.g. path:10, gij:3,5, scale-free:250")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("profile", help="exact profile of one or all vertices")
    p.add_argument("--tree", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--vertex", type=int)
    group.add_argument("--all", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("analyze", help="dip/crossing analysis as JSON")
    p.add_argument("--tree", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--vertex", type=int)
    group.add_argument("--pair", type=int, nargs=2)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--check", required=True,
                   help=f"one of: {', '.join(CHECK_NAMES)}")
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expect", help="expected interior-path counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("experiment", help="seeded Monte Carlo curves as CSV")
    p.add_argument("--which", required=True, choices=EXPERIMENT_KINDS)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", help="comma-separated x values")
    p.add_argument("--fixed-n", type=int, default=DEFAULT_FIXED_N)
    p.add_argument("--out")
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BcprofError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
