#!/usr/bin/env python3
"""Sweep the shape-based deciders against brute-force enumeration.

Runs every ordered pair of nested pairs over ground sizes <= nmax through
all three relations, both routes, then a batch of random instances just
above the exhaustive range.  Prints timing per stage and writes reproducer
files next to the cwd if any disagreement is ever found.

    python3 scripts/crosscheck_sweep.py --nmax 4 --random 500 --seed 7
"""

import argparse
import itertools
import sys
import time

from simpair import (
    PROFILES,
    brute_embedding,
    brute_isomorphism,
    brute_reduction,
    decide_embedding,
    decide_isomorphism,
    decide_reduction,
    enumerate_pairs,
    random_pair,
    serialize_pair,
)

RELATIONS = [
    ("red", decide_reduction, brute_reduction),
    ("emb", decide_embedding, brute_embedding),
    ("iso", decide_isomorphism, brute_isomorphism),
]


def check(p1, p2, mismatches):
    for name, decider, brute in RELATIONS:
        got = decider(p1, p2).answer
        want = brute(p1, p2).answer
        if got is not want:
            mismatches.append((name, p1, p2, got, want))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=4)
    ap.add_argument("--random", type=int, default=500, dest="random_count")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    universe = [
        p for n in range(args.nmax + 1) for p in enumerate_pairs(n)
    ]
    print(f"universe: {len(universe)} nested pairs at sizes 0..{args.nmax}")

    mismatches = []
    start = time.perf_counter()
    for p1, p2 in itertools.product(universe, repeat=2):
        check(p1, p2, mismatches)
    print(
        f"exhaustive: {len(universe) ** 2} ordered pairs x 3 relations "
        f"in {time.perf_counter() - start:.1f}s"
    )

    start = time.perf_counter()
    sizes = (args.nmax + 1, args.nmax + 2)
    for i in range(args.random_count):
        p1 = random_pair(args.seed + 2 * i, sizes[i % 2], PROFILES[i % 2])
        p2 = random_pair(args.seed + 2 * i + 1, sizes[(i // 2) % 2], PROFILES[(i // 3) % 2])
        check(p1, p2, mismatches)
    print(
        f"random: {args.random_count} instances at sizes {sizes} "
        f"in {time.perf_counter() - start:.1f}s"
    )

    if mismatches:
        for name, p1, p2, got, want in mismatches:
            print(f"DISAGREE {name}: decided {got}, oracle says {want}")
            with open(f"simpair-disagree-{name}-src.json", "w") as fh:
                fh.write(serialize_pair(p1))
            with open(f"simpair-disagree-{name}-tgt.json", "w") as fh:
                fh.write(serialize_pair(p2))
        return 1
    print("all routes agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())
