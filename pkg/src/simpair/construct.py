"""Generators of nested pairs: canonical realization of a list of local
fine shapes, orbit pairs of nested permutation groups, and seeded random
pairs."""

from __future__ import annotations

import random
import re
from typing import Sequence

from .cardinal import ZERO
from .core import FinEqRel, FinPair
from .errors import InfiniteShape, NotAPermutation, NotSubset
from .shapes import ShapeSeq, is_fine_shape


def build_shape_pair(shapes: Sequence[ShapeSeq]) -> FinPair:
    """The canonical pair with one coarse class per listed shape.

    For the x-th shape, the class holds one fine class of size s for each
    unit counted at position s; the global fine shape of the result is
    exactly the multiset of listed shapes.  Points are tagged
    (class, size, copy, position-in-class) and relabeled in that order.
    Only finitely realizable shapes are accepted.
    """
    tags = []
    for x, shape in enumerate(shapes):
        if not is_fine_shape(shape):
            raise ValueError(f"shape {x} is not a class shape: {shape}")
        if shape.tail != ZERO or shape.omega != ZERO or any(
            not v.is_finite for v in shape.prefix
        ):
            raise InfiniteShape(f"shape {x} needs infinitely many points: {shape}")
        for pos, count in enumerate(shape.prefix, start=1):
            for copy in range(count.value):
                for k in range(pos):
                    tags.append((x, pos, copy, k))
    tags.sort()
    label = {t: i for i, t in enumerate(tags)}

    f_blocks: dict[int, list[int]] = {}
    e_blocks: dict[tuple[int, int, int], list[int]] = {}
    for (x, pos, copy, k), i in label.items():
        f_blocks.setdefault(x, []).append(i)
        e_blocks.setdefault((x, pos, copy), []).append(i)
    n = len(tags)
    return FinPair(
        n,
        FinEqRel(n, tuple(tuple(b) for b in e_blocks.values())),
        FinEqRel(n, tuple(tuple(b) for b in f_blocks.values())),
    )


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> tuple[int, ...]:
    """Permutation of range(n) from cycle notation like "(0 2)(1 3)"."""
    if _CYCLE.sub("", text).strip():
        raise NotAPermutation(f"stray text in {text!r}")
    table = list(range(n))
    seen: set[int] = set()
    for body in _CYCLE.findall(text):
        try:
            cycle = [int(tok) for tok in body.split()]
        except ValueError:
            raise NotAPermutation(f"non-integer entry in {text!r}") from None
        for v in cycle:
            if not 0 <= v < n:
                raise NotAPermutation(f"entry {v} outside range({n})")
            if v in seen:
                raise NotAPermutation(f"entry {v} repeated in {text!r}")
            seen.add(v)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            table[a] = b
    return tuple(table)


def _check_permutation(perm: Sequence[int], n: int) -> tuple[int, ...]:
    p = tuple(perm)
    if sorted(p) != list(range(n)):
        raise NotAPermutation(f"{p} is not a permutation of range({n})")
    return p


def _orbits(n: int, perms: Sequence[tuple[int, ...]]) -> FinEqRel:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i in range(n):
            a, b = find(i), find(p[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return FinEqRel(n, tuple(tuple(g) for g in groups.values()))


def orbit_pair(
    n: int, sub_gens: Sequence[Sequence[int]], full_gens: Sequence[Sequence[int]]
) -> FinPair:
    """Orbit relations of two nested permutation groups on range(n):
    fine classes are orbits under the sub-generators, coarse classes orbits
    under the full generators."""
    sub = [_check_permutation(p, n) for p in sub_gens]
    full = [_check_permutation(p, n) for p in full_gens]
    if not set(sub) <= set(full):
        raise NotSubset("every fine generator must appear among the full generators")
    return FinPair(n, _orbits(n, sub), _orbits(n, full))


UNIFORM_REFINEMENT = "uniform-refinement"
SHAPE_TARGETED = "shape-targeted"
PROFILES = (UNIFORM_REFINEMENT, SHAPE_TARGETED)


def _chinese_restaurant(rng: random.Random, items: Sequence[int]) -> list[list[int]]:
    blocks: list[list[int]] = []
    seated: list[list[int]] = []  # seat index -> block, one seat per item
    for i, x in enumerate(items):
        r = rng.randrange(i + 1)
        if r == i:
            block: list[int] = []
            blocks.append(block)
        else:
            block = seated[r]
        block.append(x)
        seated.append(block)
    return blocks


def random_pair(seed: int, n: int, profile: str = UNIFORM_REFINEMENT) -> FinPair:
    """A pseudorandom nested pair, deterministic in (seed, n, profile).

    uniform-refinement draws the coarse partition by a Chinese restaurant
    process and refines each block by an independent one.  shape-targeted
    splits n into class sizes and realizes a random fine shape on each,
    exercising the canonical shape construction.
    """
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    rng = random.Random(f"{seed}:{n}:{profile}")
    if profile == UNIFORM_REFINEMENT:
        coarse = _chinese_restaurant(rng, list(range(n)))
        fine = [piece for block in coarse for piece in _chinese_restaurant(rng, block)]
        return FinPair(
            n,
            FinEqRel(n, tuple(tuple(b) for b in fine)),
            FinEqRel(n, tuple(tuple(b) for b in coarse)),
        )
    shapes = []
    remaining = n
    while remaining > 0:
        size = rng.randint(1, remaining)
        remaining -= size
        pieces = _chinese_restaurant(rng, list(range(size)))
        counts: dict[int, int] = {}
        for piece in pieces:
            counts[len(piece)] = counts.get(len(piece), 0) + 1
        top = max(counts)
        shapes.append(ShapeSeq(tuple(counts.get(m, 0) for m in range(1, top + 1))))
    return build_shape_pair(shapes)
