"""Upper sets in the pointwise order on realizable coarse shapes.

The order has no infinite descending chains and no infinite antichains, so
every upper set is determined by the finitely many minimal shapes in it.
An UpperSet stores exactly that generating antichain, sorted by literal
text so equal sets compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .cardinal import ALEPH0, Cardinal, as_cardinal, fin
from .core import FinPair
from .errors import CapExceeded, NotInSc, NotRealizable
from .shapes import (
    ShapeSeq,
    is_coarse_shape,
    local_coarse_shape,
    min_class_size,
    print_shape_literal,
    shape_leq,
)

GCS_DISTINCT_SHAPE_CAP = 20


def _check_coarse(shapes: Iterable[ShapeSeq]) -> list[ShapeSeq]:
    out = []
    for s in shapes:
        if not is_coarse_shape(s):
            raise NotInSc(f"{s} is not a realizable coarse shape")
        out.append(s)
    return out


def minimal_elements(shapes: Iterable[ShapeSeq]) -> tuple[ShapeSeq, ...]:
    """The distinct shapes not strictly above another listed shape."""
    uniq = set(_check_coarse(shapes))
    keep = [
        s
        for s in uniq
        if not any(t != s and shape_leq(t, s) for t in uniq)
    ]
    return tuple(sorted(keep, key=print_shape_literal))


@dataclass(frozen=True)
class UpperSet:
    generators: tuple[ShapeSeq, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if minimal_elements(self.generators) != self.generators:
            raise NotInSc("generators must be a canonically sorted antichain")

    def contains(self, s: ShapeSeq) -> bool:
        if not is_coarse_shape(s):
            raise NotInSc(f"{s} is not a realizable coarse shape")
        return any(shape_leq(g, s) for g in self.generators)

    def __str__(self) -> str:
        return "{" + ", ".join(print_shape_literal(g) for g in self.generators) + "}"


def upper_set(shapes: Iterable[ShapeSeq]) -> UpperSet:
    """Upward closure of the given shapes, kept as its minimal generators."""
    return UpperSet(minimal_elements(shapes))


def count_classes_in(pair: FinPair, w: UpperSet) -> Cardinal:
    """How many coarse classes of the pair have local coarse shape in w."""
    hits = sum(
        1
        for c in range(pair.F.num_classes)
        if w.contains(local_coarse_shape(pair, c))
    )
    return fin(hits)


def _partitions(m: int, largest: int):
    if m == 0:
        yield []
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield [first] + rest


def min_size_upper_set(m) -> UpperSet:
    """All coarse shapes whose classes have at least m points.

    For finite m the minimal such shapes are exactly the integer partitions
    of m read as weakly decreasing at-least-size counts.  For the infinite
    threshold they are the two ways a class gets infinitely many points:
    infinitely many singleton fine classes, or a single infinite one.
    """
    m = as_cardinal(m)
    if m == ALEPH0:
        return upper_set(
            [ShapeSeq((ALEPH0,)), ShapeSeq((), fin(1), fin(1))]
        )
    if not m.is_finite or m.value < 1:
        raise NotRealizable(f"threshold must be in 1..aleph0, got {m}")
    shapes = [
        ShapeSeq(tuple(fin(v) for v in p)) for p in _partitions(m.value, m.value)
    ]
    return upper_set(shapes)


def _realized_counts(pair: FinPair) -> dict[ShapeSeq, int]:
    counts: dict[ShapeSeq, int] = {}
    for c in range(pair.F.num_classes):
        s = local_coarse_shape(pair, c)
        counts[s] = counts.get(s, 0) + 1
    return counts


def gcs_leq(p1: FinPair, p2: FinPair, max_distinct: int = GCS_DISTINCT_SHAPE_CAP) -> bool:
    """Class-count domination over every upper set of coarse shapes.

    Only upper sets generated by shapes realized in the first pair need
    checking: replacing an arbitrary upper set W by the closure of the
    realized shapes it contains keeps the first pair's count and can only
    shrink the second pair's.  The subset sweep is exponential in the
    number of distinct realized shapes, hence the cap.
    """
    realized1 = _realized_counts(p1)
    realized2 = _realized_counts(p2)
    distinct = sorted(realized1, key=print_shape_literal)
    if len(distinct) > max_distinct:
        raise CapExceeded(2 ** len(distinct), 2 ** max_distinct)
    for size in range(1, len(distinct) + 1):
        for subset in combinations(distinct, size):
            w = upper_set(subset)
            mine = sum(k for s, k in realized1.items() if w.contains(s))
            theirs = sum(k for s, k in realized2.items() if w.contains(s))
            if mine > theirs:
                return False
    return True
