"""Shape sequences and the shape invariants of relations and nested pairs.

A shape is an eventually constant function on positions 1, 2, ... plus a
final limit position, with cardinal values.  It is stored as an explicit
prefix, the constant value taken at every finite position past the prefix,
and the value at the limit position.  Canonical form keeps the prefix
minimal.

The invariants computed here:

- fine_shape(rel): position m counts classes of size exactly m.
- coarse_shape(rel): position m counts classes of size at least m.
- local fine/coarse shape of one coarse class of a pair: the same counts
  for the fine relation restricted to that class.
- coarse_relative_shape(pair): position m counts coarse classes containing
  at least m fine classes.
- global_fine_shape(pair): exact multiset, as a map, of local fine shapes.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict

from .cardinal import ALEPH0, ZERO, Cardinal, as_cardinal, fin
from .core import FinEqRel, FinPair
from .errors import ClassIndexOutOfRange, NotInSc, NotRealizable, ParseError


@dataclass(frozen=True)
class ShapeSeq:
    prefix: tuple[Cardinal, ...] = ()
    tail: Cardinal = field(default=ZERO)
    omega: Cardinal = field(default=ZERO)

    def __post_init__(self):
        prefix = tuple(as_cardinal(v) for v in self.prefix)
        tail = as_cardinal(self.tail)
        while prefix and prefix[-1] == tail:
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "omega", as_cardinal(self.omega))

    def at(self, m: int) -> Cardinal:
        """Value at finite position m >= 1."""
        if m < 1:
            raise ClassIndexOutOfRange(f"positions start at 1, got {m}")
        return self.prefix[m - 1] if m <= len(self.prefix) else self.tail

    @property
    def is_zero(self) -> bool:
        return not self.prefix and self.tail == ZERO and self.omega == ZERO

    def __str__(self) -> str:
        return print_shape_literal(self)


ZERO_SHAPE = ShapeSeq()


def shape_from_counts(counter: Counter) -> ShapeSeq:
    """Shape with value counter[m] at each finite position m (finite support)."""
    k = max(counter, default=0)
    return ShapeSeq(tuple(fin(counter.get(m, 0)) for m in range(1, k + 1)))


def shape_leq(a: ShapeSeq, b: ShapeSeq) -> bool:
    """Pointwise order over all positions, the limit position included."""
    k = max(len(a.prefix), len(b.prefix))
    if any(a.at(m) > b.at(m) for m in range(1, k + 1)):
        return False
    return a.tail <= b.tail and a.omega <= b.omega


# --- shape literals ------------------------------------------------------
#
# Text form <v1,...,vk|t;w>: explicit prefix, then the repeated finite
# value, then the limit value.  An empty prefix prints as <|t;w>.  The
# token inf denotes the countably infinite value.

_TOKEN = r"(?:\d+|inf)"
_LITERAL = re.compile(rf"<({_TOKEN}(?:,{_TOKEN})*)?\|({_TOKEN});({_TOKEN})>")


def _print_token(v: Cardinal) -> str:
    if v.is_finite:
        return str(v.value)
    if v == ALEPH0:
        return "inf"
    raise NotRealizable(f"no literal token for {v}")


def _parse_token(tok: str) -> Cardinal:
    return ALEPH0 if tok == "inf" else fin(int(tok))


def print_shape_literal(s: ShapeSeq) -> str:
    inner = ",".join(_print_token(v) for v in s.prefix)
    return f"<{inner}|{_print_token(s.tail)};{_print_token(s.omega)}>"


def parse_shape_literal(text: str) -> ShapeSeq:
    m = _LITERAL.fullmatch(text.strip())
    if m is None:
        # best-effort column: first character where the shape grammar breaks
        probe = _LITERAL.match(text.strip())
        col = probe.end() + 1 if probe else 1
        raise ParseError(f"not a shape literal: {text!r}", 1, col)
    prefix = tuple(_parse_token(t) for t in m.group(1).split(",")) if m.group(1) else ()
    return ShapeSeq(prefix, _parse_token(m.group(2)), _parse_token(m.group(3)))


# --- single-relation shapes ----------------------------------------------


def fine_shape(rel: FinEqRel) -> ShapeSeq:
    return shape_from_counts(Counter(len(b) for b in rel.blocks))


def coarse_shape(rel: FinEqRel) -> ShapeSeq:
    sizes = sorted(len(b) for b in rel.blocks)
    k = sizes[-1] if sizes else 0
    # count of classes of size >= m, weakly decreasing in m
    prefix = []
    alive = len(sizes)
    i = 0
    for m in range(1, k + 1):
        while i < len(sizes) and sizes[i] < m:
            alive -= 1
            i += 1
        prefix.append(fin(alive))
    return ShapeSeq(tuple(prefix))


# --- local shapes of a nested pair ---------------------------------------


def _class_block_sizes(pair: FinPair, f_class: int) -> list[int]:
    if not (0 <= f_class < pair.F.num_classes):
        raise ClassIndexOutOfRange(f"no F-class {f_class}")
    return [len(pair.E.blocks[e]) for e in pair.f_class_e_classes[f_class]]


def local_fine_shape(pair: FinPair, f_class: int) -> ShapeSeq:
    """Counts, by exact size, of the fine classes inside one coarse class."""
    return shape_from_counts(Counter(_class_block_sizes(pair, f_class)))


def local_coarse_shape(pair: FinPair, f_class: int) -> ShapeSeq:
    sizes = _class_block_sizes(pair, f_class)
    k = max(sizes, default=0)
    return ShapeSeq(tuple(fin(sum(1 for s in sizes if s >= m)) for m in range(1, k + 1)))


def fine_to_coarse(s: ShapeSeq) -> ShapeSeq:
    """Turn exact-size counts into at-least-size counts.

    Position m of the result sums the fine values at positions >= m plus
    the limit value.  A nonzero repeated value would make every such sum
    range over infinitely many nonzero terms, so the result saturates to
    the countably infinite value at all finite positions.
    """
    if s.tail != ZERO:
        return ShapeSeq((), ALEPH0, s.omega)
    total = s.omega
    out: list[Cardinal] = []
    for v in reversed(s.prefix):
        total = total + v
        out.append(total)
    out.reverse()
    return ShapeSeq(tuple(out), s.omega, s.omega)


def coarse_relative_shape(pair: FinPair) -> ShapeSeq:
    """Position m counts coarse classes containing at least m fine classes."""
    counts = [len(g) for g in pair.f_class_e_classes]
    k = max(counts, default=0)
    return ShapeSeq(tuple(fin(sum(1 for c in counts if c >= m)) for m in range(1, k + 1)))


def global_fine_shape(pair: FinPair) -> Dict[ShapeSeq, Cardinal]:
    """How many coarse classes realize each local fine shape."""
    counts: Counter = Counter(local_fine_shape(pair, c) for c in range(pair.F.num_classes))
    return {s: fin(k) for s, k in counts.items()}


# --- realizability and sizes ----------------------------------------------


def is_fine_shape(s: ShapeSeq) -> bool:
    """Could some class have these exact-size counts?  Needs countable values
    and at least one nonzero position."""
    values = (*s.prefix, s.tail, s.omega)
    return all(v <= ALEPH0 for v in values) and not s.is_zero


def is_coarse_shape(s: ShapeSeq) -> bool:
    """Could some class have these at-least-size counts?

    Requires countable values, at least one nonzero position, weak descent
    along finite positions, and the limit-position law: when the finite
    positions settle at a finite value, the limit position must equal it
    (the settled count is carried by classes of every finite size, which
    must be infinite classes); when every finite position is infinite the
    limit position is unconstrained.
    """
    values = (*s.prefix, s.tail, s.omega)
    if any(v > ALEPH0 for v in values):
        return False
    if s.is_zero:
        return False
    for a, b in zip(s.prefix, s.prefix[1:]):
        if a < b:
            return False
    if s.prefix and s.prefix[-1] < s.tail:
        return False
    if s.tail.is_finite and s.omega != s.tail:
        return False
    return True


def min_class_size(s: ShapeSeq) -> Cardinal:
    """Number of points in any class with at-least-size counts s."""
    if not is_coarse_shape(s):
        raise NotInSc(f"{s} is not a realizable coarse shape")
    if s.tail != ZERO or any(not v.is_finite for v in s.prefix):
        return ALEPH0
    total = ZERO
    for v in s.prefix:
        total = total + v
    return total
