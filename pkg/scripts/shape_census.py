#!/usr/bin/env python3
"""Census of nested pairs at a fixed ground size, bucketed by invariant.

Groups every nested pair on n points by its global fine shape and reports
bucket sizes.  With --certify, confirms by brute force that the buckets
are exactly the isomorphism classes: same bucket iff isomorphic.

    python3 scripts/shape_census.py --n 4 --certify
"""

import argparse
import itertools
import sys
from collections import defaultdict

from simpair import brute_isomorphism, enumerate_pairs, global_fine_shape


def bucket_key(pair):
    gfs = global_fine_shape(pair)
    return tuple(sorted((str(s), str(c)) for s, c in gfs.items()))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--certify", action="store_true")
    args = ap.parse_args()

    pairs = list(enumerate_pairs(args.n))
    buckets = defaultdict(list)
    for p in pairs:
        buckets[bucket_key(p)].append(p)

    print(f"n={args.n}: {len(pairs)} nested pairs, {len(buckets)} shape buckets")
    for key, members in sorted(buckets.items(), key=lambda kv: (-len(kv[1]), kv[0])):
        label = " ".join(f"{s}x{c}" for s, c in key) or "(empty)"
        print(f"  {len(members):4d}  {label}")

    if args.certify:
        bad = 0
        for p1, p2 in itertools.combinations(pairs, 2):
            same_bucket = bucket_key(p1) == bucket_key(p2)
            if same_bucket is not brute_isomorphism(p1, p2).answer:
                bad += 1
        verdict = "certified" if bad == 0 else f"{bad} mismatches"
        print(f"buckets vs brute-force isomorphism: {verdict}")
        return 0 if bad == 0 else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
