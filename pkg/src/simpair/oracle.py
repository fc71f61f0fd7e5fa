"""Brute-force ground truth.

Each decider here enumerates candidate maps in lexicographic order and
checks the defining conditions directly, with no shape theory and no
pruning beyond pigeonhole size checks.  The first verifying map is
returned, so results are reproducible.  Search spaces above the cap raise
CapExceeded instead of running forever.
"""

from __future__ import annotations

import math
from itertools import permutations, product
from typing import Iterator

from .core import (
    EMBEDDING,
    ISOMORPHISM,
    REDUCTION,
    Decision,
    FinEqRel,
    FinPair,
    Witness,
)
from .errors import CapExceeded

DEFAULT_CAP = 10_000_000
DEFAULT_ISO_CAP = math.factorial(8)
ENUMERATION_LIMIT = 6


def _conditions(p1: FinPair):
    """All unordered pairs with their required relatedness in the source."""
    e1, f1 = p1.E.class_index, p1.F.class_index
    return [
        (x, y, e1[x] == e1[y], f1[x] == f1[y])
        for x in range(p1.n)
        for y in range(x + 1, p1.n)
    ]


def _search(p1: FinPair, p2: FinPair, candidates, mode: str) -> Decision:
    conds = _conditions(p1)
    e2, f2 = p2.E.class_index, p2.F.class_index
    for table in candidates:
        for x, y, same_e, same_f in conds:
            if (e2[table[x]] == e2[table[y]]) != same_e:
                break
            if (f2[table[x]] == f2[table[y]]) != same_f:
                break
        else:
            return Decision(True, Witness(mode, tuple(table)))
    return Decision(False, None)


def brute_reduction(p1: FinPair, p2: FinPair, cap: int = DEFAULT_CAP) -> Decision:
    """Try every function table from p1's ground set to p2's."""
    space = p2.n ** p1.n
    if space > cap:
        raise CapExceeded(space, cap)
    return _search(p1, p2, product(range(p2.n), repeat=p1.n), REDUCTION)


def brute_embedding(p1: FinPair, p2: FinPair, cap: int = DEFAULT_CAP) -> Decision:
    """Try every injection; immediately false into a smaller ground set."""
    if p1.n > p2.n:
        return Decision(False, None)
    space = math.perm(p2.n, p1.n)
    if space > cap:
        raise CapExceeded(space, cap)
    return _search(p1, p2, permutations(range(p2.n), p1.n), EMBEDDING)


def brute_isomorphism(p1: FinPair, p2: FinPair, cap: int = DEFAULT_ISO_CAP) -> Decision:
    """Try every bijection; immediately false across different ground sizes."""
    if p1.n != p2.n:
        return Decision(False, None)
    space = math.factorial(p1.n)
    if space > cap:
        raise CapExceeded(space, cap)
    return _search(p1, p2, permutations(range(p1.n)), ISOMORPHISM)


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for blocks in _set_partitions(rest):
        for i in range(len(blocks)):
            yield blocks[:i] + [[head] + blocks[i]] + blocks[i + 1 :]
        yield [[head]] + blocks


def enumerate_pairs(n: int, limit: int = ENUMERATION_LIMIT) -> Iterator[FinPair]:
    """Every labeled nested pair on {0, ..., n-1}: each partition as the
    coarse relation, independently refined block by block."""
    if n > limit:
        raise CapExceeded(n, limit)
    for coarse in _set_partitions(list(range(n))):
        f_rel = FinEqRel(n, tuple(tuple(b) for b in coarse))
        refinements = [list(_set_partitions(list(b))) for b in f_rel.blocks]

        def expand(i: int, acc: list[list[int]]) -> Iterator[FinPair]:
            if i == len(refinements):
                yield FinPair(n, FinEqRel(n, tuple(tuple(b) for b in acc)), f_rel)
                return
            for choice in refinements[i]:
                yield from expand(i + 1, acc + choice)

        yield from expand(0, [])
