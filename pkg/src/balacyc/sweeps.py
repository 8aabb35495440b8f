"""Deterministic verification sweeps over subset families.

Sweep sizes are configuration: the defaults below pin the standard runs
(exhaustive at n = 6, all small subsets plus 50 seeded-random ones at
n = 30, ten seeded-random ones at n = 42). Every randomized choice is
drawn from a seeded generator, so a (command, parameters, seed) triple
reproduces byte-identical reports. Items may be evaluated in a thread
pool capped by BALACYC_THREADS; results are always emitted in input
order, independent of scheduling.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor

from .complexes import coboundary_matches_fourier, nested_elements
from .cyclo_family import (
    CycloComplexData,
    all_subsets,
    coefficient_vector_is_coboundary,
    product_group_of,
    pullback_matches_root_kernel,
    quotient_presentation,
    transform_pullback_check,
    verify_homology_tables,
)
from .groups import FiniteAbelianGroup, GroupFunction


def color_group(orders) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(orders))

DEFAULT_SEED = 0

# (primes, exhaustive max size or None, number of random subsets)
DEFAULT_FAMILY_PLANS = (
    ((2, 3), None, 0),
    ((2, 3, 5), 2, 50),
    ((2, 3, 7), 0, 10),
)

DEFAULT_COBOUNDARY_EXHAUSTIVE = ([[2], [2]], [[2], [3]])
DEFAULT_COBOUNDARY_RANDOM = ([[2], [2], [2]], [[4], [3]], [[2, 2], [3]], [[2], [3], [5]])
DEFAULT_COBOUNDARY_RANDOM_COUNT = 50

DEFAULT_PULLBACK_PLANS = (
    ((2, 3), None, 0),
    ((2, 3, 5), -1, 20),
    ((2, 3, 7), -1, 20),
)

DEFAULT_COEFFICIENT_PRIMES = ((2, 3), (2, 3, 5), (2, 3, 7))


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("BALACYC_THREADS", "1")))
    except ValueError:
        return 1


def run_ordered(func, items):
    """Map func over items, in order; threaded when BALACYC_THREADS > 1."""
    items = list(items)
    workers = thread_count()
    if workers <= 1 or len(items) <= 1:
        return [func(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def random_index_subsets(totient: int, count: int, rng: random.Random, nonempty: bool):
    """Seeded random subsets of {0, ..., totient}."""
    universe = list(range(totient + 1))
    low = 1 if nonempty else 0
    out = []
    for _ in range(count):
        size = rng.randint(low, len(universe))
        out.append(tuple(sorted(rng.sample(universe, size))))
    return out


def family_subsets(primes, exhaustive_max, random_count, seed):
    """Nonempty subsets for a homology-table sweep, deduplicated, sorted."""
    data = CycloComplexData.build(primes, ())
    chosen = set()
    if exhaustive_max is None:
        chosen.update(all_subsets(data.totient, include_empty=False))
    elif exhaustive_max > 0:
        for s in all_subsets(data.totient, include_empty=False):
            if len(s) <= exhaustive_max:
                chosen.add(s)
    rng = random.Random(seed)
    for s in random_index_subsets(data.totient, random_count, rng, nonempty=True):
        chosen.add(s)
    return sorted(chosen, key=lambda s: (len(s), s))


def pullback_subsets(primes, exhaustive_max, random_count, seed):
    """Subsets (empty allowed) for a lattice-pullback sweep."""
    data = CycloComplexData.build(primes, ())
    chosen = set()
    if exhaustive_max is None:
        chosen.update(all_subsets(data.totient, include_empty=True))
    elif exhaustive_max >= 0:
        for s in all_subsets(data.totient, include_empty=True):
            if len(s) <= exhaustive_max:
                chosen.add(s)
    rng = random.Random(seed)
    for s in random_index_subsets(data.totient, random_count, rng, nonempty=False):
        chosen.add(s)
    return sorted(chosen, key=lambda s: (len(s), s))


def random_point_subsets(colors, count, rng: random.Random):
    """Seeded random subsets of the product-group point set."""
    universe = list(nested_elements(colors))
    out = []
    for _ in range(count):
        size = rng.randint(0, len(universe))
        out.append(tuple(sorted(rng.sample(universe, size))))
    return out


def run_family_sweep(primes, subsets) -> list[dict]:
    """Homology-table verification items for the given nonempty subsets."""

    def one(subset):
        report = verify_homology_tables(primes, subset)
        item = report.to_json_dict()
        item["ok"] = report.match and report.euler_poincare and report.uct
        return item

    return run_ordered(one, subsets)


def run_coboundary_sweep(colors, point_sets) -> list[dict]:
    """Coboundary-versus-transform lattice items over point subsets."""

    def one(points):
        ok = coboundary_matches_fourier(colors, points)
        return {"A": [[list(v) for v in a] for a in points], "ok": ok}

    return run_ordered(one, point_sets)


def run_pullback_sweep(primes, subsets) -> list[dict]:
    def one(subset):
        return {"A": list(subset), "ok": pullback_matches_root_kernel(primes, subset)}

    return run_ordered(one, subsets)


def run_presentation_sweep(primes, subsets) -> list[dict]:
    def one(subset):
        report = quotient_presentation(primes, subset)
        return {
            "A": list(subset),
            "quotient": str(report.ambient_quotient),
            "ok": report.ok,
        }

    return run_ordered(one, subsets)


def run_transform_pullback_sweep(primes, function_count, bound, seed) -> list[dict]:
    """Seeded random functions, each checked at every residue."""
    group = product_group_of(primes)
    rng = random.Random(seed)
    items = []
    for idx in range(function_count):
        values = {x: rng.randint(-bound, bound) for x in group.elements()}
        h = GroupFunction(group, values)
        items.append({"function": idx, "ok": transform_pullback_check(primes, h)})
    return items


def run_coefficient_coboundary_sweep(prime_tuples) -> list[dict]:
    def one(primes):
        return {"primes": list(primes), "ok": coefficient_vector_is_coboundary(primes)}

    return run_ordered(one, prime_tuples)


def default_sweep_report(seed: int = DEFAULT_SEED) -> dict:
    """The full default verification battery, as one JSON-ready report."""
    sections = {}

    family = []
    for primes, exhaustive, rnd in DEFAULT_FAMILY_PLANS:
        subsets = family_subsets(primes, exhaustive, rnd, seed)
        family.append({"primes": list(primes), "items": run_family_sweep(primes, subsets)})
    sections["homology_tables"] = family

    cob = []
    for raw in DEFAULT_COBOUNDARY_EXHAUSTIVE:
        colors = tuple(color_group(raw_color) for raw_color in raw)
        points = list(nested_elements(colors))
        subsets = [
            tuple(sorted(combo))
            for size in range(len(points) + 1)
            for combo in itertools.combinations(points, size)
        ]
        cob.append({"groups": raw, "items": run_coboundary_sweep(colors, subsets)})
    rng = random.Random(seed)
    for raw in DEFAULT_COBOUNDARY_RANDOM:
        colors = tuple(color_group(raw_color) for raw_color in raw)
        subsets = random_point_subsets(colors, DEFAULT_COBOUNDARY_RANDOM_COUNT, rng)
        cob.append({"groups": raw, "items": run_coboundary_sweep(colors, subsets)})
    sections["coboundary_lattices"] = cob

    pull = []
    for primes, exhaustive, rnd in DEFAULT_PULLBACK_PLANS:
        subsets = pullback_subsets(primes, exhaustive, rnd, seed)
        pull.append({"primes": list(primes), "items": run_pullback_sweep(primes, subsets)})
    sections["pullback_lattices"] = pull

    sections["transform_pullback"] = [
        {"primes": [2, 3], "items": run_transform_pullback_sweep((2, 3), 20, 3, seed)},
        {"primes": [2, 3, 5], "items": run_transform_pullback_sweep((2, 3, 5), 20, 3, seed)},
    ]

    sections["presentations"] = [
        {
            "primes": [2, 3],
            "items": run_presentation_sweep((2, 3), family_subsets((2, 3), None, 0, seed)),
        },
        {
            "primes": [2, 3, 5],
            "items": run_presentation_sweep(
                (2, 3, 5), family_subsets((2, 3, 5), 1, 5, seed)
            ),
        },
    ]

    sections["coefficient_coboundary"] = run_coefficient_coboundary_sweep(
        DEFAULT_COEFFICIENT_PRIMES
    )

    ok = _all_ok(sections)
    return {"schema": 1, "command": "sweep", "seed": seed, "ok": ok, "sections": sections}


def _all_ok(node) -> bool:
    if isinstance(node, dict):
        if "ok" in node and not node["ok"]:
            return False
        return all(_all_ok(v) for k, v in node.items() if k != "ok")
    if isinstance(node, list):
        return all(_all_ok(v) for v in node)
    return True
