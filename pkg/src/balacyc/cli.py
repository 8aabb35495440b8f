"""Command-line front end: computations and verification sweeps.

Output is either a human table or schema-versioned JSON; identical
(command, parameters, seed) invocations produce byte-identical JSON.
Exit codes: 0 all checks verified, 1 a mathematical mismatch was found,
2 usage error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys

from .complexes import (
    build_complex,
    complex_json,
    nested_elements,
)
from .cyclo_family import (
    CycloComplexData,
    all_subsets,
    build_family_complex,
    coefficient_vector_is_coboundary,
)
from .cyclotomic import cyclotomic
from .groups import FiniteAbelianGroup
from .sweeps import (
    DEFAULT_SEED,
    color_group,
    default_sweep_report,
    random_index_subsets,
    random_point_subsets,
    run_coboundary_sweep,
    run_family_sweep,
    run_pullback_sweep,
)


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed prime list: {text!r}") from exc


def _parse_groups(text: str) -> tuple[FiniteAbelianGroup, ...]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed group JSON: {text!r}") from exc
    if not isinstance(data, list) or not data:
        raise UsageError("groups must be a nonempty JSON list of per-color factor lists")
    colors = []
    for color in data:
        if not isinstance(color, list) or not all(isinstance(m, int) and m >= 1 for m in color):
            raise UsageError("each color must be a list of positive cyclic orders")
        colors.append(color_group(color))
    return tuple(colors)


def _parse_index_set(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(sorted({int(x) for x in text.split(",")}))
    except ValueError as exc:
        raise UsageError(f"malformed index set: {text!r}") from exc


def _parse_point_set(text: str, colors) -> tuple:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed point set JSON: {text!r}") from exc
    if not isinstance(data, list):
        raise UsageError("point set must be a JSON list of points")
    points = []
    for point in data:
        if not isinstance(point, list) or len(point) != len(colors):
            raise UsageError("each point must list one vertex per color")
        vertices = []
        for v in point:
            coords = v if isinstance(v, list) else [v]
            if not all(isinstance(c, int) for c in coords):
                raise UsageError("vertex coordinates must be integers")
            vertices.append(tuple(coords))
        points.append(tuple(vertices))
    return tuple(points)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balacyc",
        description="Exact homology of balanced complexes over finite abelian "
        "groups, with cyclotomic verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--out", metavar="FILE", help="write the report to FILE")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized sweeps")

    p = sub.add_parser("cyclo", help="coefficients of the n-th cyclotomic polynomial")
    p.add_argument("n", type=_positive_int)
    common(p)

    p = sub.add_parser("homology", help="reduced (co)homology of one complex")
    p.add_argument("--groups", help='per-color factors as JSON, e.g. "[[2],[3]]"')
    p.add_argument("--primes", help="comma list of distinct primes, e.g. 2,3,5")
    p.add_argument(
        "--set",
        dest="subset",
        help="top cells: JSON points with --groups (default: all), "
        "comma list of residues with --primes (default: empty)",
    )
    common(p)

    p = sub.add_parser(
        "verify-coboundaries",
        help="restricted coboundary lattice == transform-vanishing lattice",
    )
    p.add_argument("--groups", required=True)
    p.add_argument("--set", dest="subset", help="one point set as JSON")
    p.add_argument("--all-subsets", action="store_true")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--random", type=int, default=0, metavar="N")
    common(p)

    p = sub.add_parser(
        "verify-pullback",
        help="CRT pullback of the coboundary lattice == evaluation kernel lattice",
    )
    p.add_argument("--primes", required=True)
    p.add_argument("--set", dest="subset", help="comma list of residues (may be empty)")
    p.add_argument("--all-subsets", action="store_true")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--random", type=int, default=0, metavar="N")
    common(p)

    p = sub.add_parser(
        "verify-homology",
        help="computed homology/cohomology against the coefficient predictions",
    )
    p.add_argument("--primes", required=True)
    p.add_argument("--set", dest="subset", help="one nonempty comma list of residues")
    p.add_argument("--all-subsets", action="store_true")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--random", type=int, default=0, metavar="N")
    common(p)

    p = sub.add_parser(
        "verify-coeff-coboundary",
        help="the truncated cyclotomic coefficient vector is a top coboundary",
    )
    p.add_argument("--primes", required=True)
    common(p)

    p = sub.add_parser("sweep", help="run the full default verification battery")
    common(p)

    return parser


def _cmd_cyclo(args):
    poly = cyclotomic(args.n)
    report = {
        "schema": 1,
        "command": "cyclo",
        "n": args.n,
        "coefficients": poly.to_json(),
    }
    table = " ".join(str(c) for c in poly.coeffs)
    return report, True, table


def _cmd_homology(args):
    if bool(args.groups) == bool(args.primes):
        raise UsageError("exactly one of --groups / --primes is required")
    if args.groups:
        colors = _parse_groups(args.groups)
        if args.subset is None:
            points = nested_elements(colors)
        else:
            points = _parse_point_set(args.subset, colors)
        x = build_complex(colors, points)
        body = complex_json(x)
        report = {"schema": 1, "command": "homology", **body}
    else:
        primes = _parse_primes(args.primes)
        subset = _parse_index_set(args.subset or "")
        data = CycloComplexData.build(primes, subset)
        x = build_family_complex(primes, subset)
        body = complex_json(x)
        report = {
            "schema": 1,
            "command": "homology",
            "primes": list(primes),
            "n": data.n,
            "A": list(subset),
            "homology": body["homology"],
            "cohomology": body["cohomology"],
        }
    lines = [
        f"H~_{i}: {value['rank']} free, torsion {value['torsion']}"
        for i, value in sorted(report["homology"].items(), key=lambda kv: int(kv[0]))
    ]
    return report, True, "\n".join(lines)


def _subset_items_table(items) -> str:
    lines = [f"A={item['A']}: {'ok' if item['ok'] else 'MISMATCH'}" for item in items]
    good = sum(1 for item in items if item["ok"])
    lines.append(f"{good}/{len(items)} verified")
    return "\n".join(lines)


def _cmd_verify_coboundaries(args):
    colors = _parse_groups(args.groups)
    if args.subset is not None:
        point_sets = [_parse_point_set(args.subset, colors)]
    elif args.all_subsets:
        points = list(nested_elements(colors))
        if args.max_size is not None:
            sizes = range(min(args.max_size, len(points)) + 1)
        else:
            sizes = range(len(points) + 1)
        point_sets = [tuple(c) for size in sizes for c in itertools.combinations(points, size)]
    elif args.random > 0:
        point_sets = sorted(random_point_subsets(colors, args.random, random.Random(args.seed)))
    else:
        raise UsageError("choose one of --set, --all-subsets, --random N")
    items = run_coboundary_sweep(colors, point_sets)
    ok = all(item["ok"] for item in items)
    report = {
        "schema": 1,
        "command": "verify-coboundaries",
        "groups": [g.to_json() for g in colors],
        "seed": args.seed,
        "ok": ok,
        "items": items,
    }
    return report, ok, _subset_items_table(items)


def _index_subsets_from_args(args, totient: int, nonempty: bool):
    if args.subset is not None:
        subset = _parse_index_set(args.subset)
        if nonempty and not subset:
            raise UsageError("this command needs a nonempty subset")
        return [subset]
    if args.all_subsets:
        subsets = list(all_subsets(totient, include_empty=not nonempty))
        if args.max_size is not None:
            subsets = [s for s in subsets if len(s) <= args.max_size]
        return subsets
    if args.random > 0:
        drawn = random_index_subsets(totient, args.random, random.Random(args.seed), nonempty)
        return sorted(drawn, key=lambda s: (len(s), s))
    raise UsageError("choose one of --set, --all-subsets, --random N")


def _cmd_verify_pullback(args):
    primes = _parse_primes(args.primes)
    data = CycloComplexData.build(primes, ())
    subsets = _index_subsets_from_args(args, data.totient, nonempty=False)
    items = run_pullback_sweep(primes, subsets)
    ok = all(item["ok"] for item in items)
    report = {
        "schema": 1,
        "command": "verify-pullback",
        "primes": list(primes),
        "n": data.n,
        "seed": args.seed,
        "ok": ok,
        "items": items,
    }
    return report, ok, _subset_items_table(items)


def _cmd_verify_homology(args):
    primes = _parse_primes(args.primes)
    data = CycloComplexData.build(primes, ())
    subsets = _index_subsets_from_args(args, data.totient, nonempty=True)
    items = run_family_sweep(primes, subsets)
    ok = all(item["ok"] for item in items)
    report = {
        "schema": 1,
        "command": "verify-homology",
        "primes": list(primes),
        "n": data.n,
        "seed": args.seed,
        "ok": ok,
        "items": items,
    }
    return report, ok, _subset_items_table(items)


def _cmd_verify_coeff_coboundary(args):
    primes = _parse_primes(args.primes)
    ok = coefficient_vector_is_coboundary(primes)
    report = {
        "schema": 1,
        "command": "verify-coeff-coboundary",
        "primes": list(primes),
        "ok": ok,
    }
    return report, ok, f"primes {','.join(map(str, primes))}: {'ok' if ok else 'MISMATCH'}"


def _cmd_sweep(args):
    report = default_sweep_report(args.seed)
    lines = []
    for name, section in report["sections"].items():
        flat = json.dumps(section)
        total = flat.count('"ok":')
        bad = flat.count('"ok": false') + flat.count('"ok":false')
        lines.append(f"{name}: {total - bad}/{total} verified")
    lines.append("all verified" if report["ok"] else "MISMATCH FOUND")
    return report, report["ok"], "\n".join(lines)


_DISPATCH = {
    "cyclo": _cmd_cyclo,
    "homology": _cmd_homology,
    "verify-coboundaries": _cmd_verify_coboundaries,
    "verify-pullback": _cmd_verify_pullback,
    "verify-homology": _cmd_verify_homology,
    "verify-coeff-coboundary": _cmd_verify_coeff_coboundary,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, ok, table = _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = table + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
