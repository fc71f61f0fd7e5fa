"""Finite equivalence relations, nested pairs, and witness maps.

A relation on ground set {0, ..., n-1} is stored as its canonical block
form: blocks sorted by minimum element, elements ascending.  A nested pair
couples a fine relation E with a coarse relation F on the same ground set,
with every E-class contained in an F-class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    ElementOutOfRange,
    NotAPartition,
    NotNested,
    ParseError,
)

REDUCTION = "reduction"
EMBEDDING = "embedding"
ISOMORPHISM = "isomorphism"
WITNESS_MODES = (REDUCTION, EMBEDDING, ISOMORPHISM)


def _canonical_blocks(n: int, blocks) -> tuple[tuple[int, ...], ...]:
    canon = []
    for b in blocks:
        bb = tuple(sorted(b))
        if not bb:
            raise NotAPartition("empty block")
        canon.append(bb)
    canon.sort()
    flat = [x for b in canon for x in b]
    for x in flat:
        if not isinstance(x, int) or isinstance(x, bool):
            raise NotAPartition(f"non-integer element {x!r}")
    if sorted(flat) != list(range(n)):
        raise NotAPartition(f"blocks do not partition range({n})")
    return tuple(canon)


@dataclass(frozen=True)
class FinEqRel:
    """An equivalence relation on {0, ..., n-1} in canonical block form."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise NotAPartition(f"bad ground size {self.n!r}")
        object.__setattr__(self, "blocks", _canonical_blocks(self.n, self.blocks))

    @cached_property
    def class_index(self) -> tuple[int, ...]:
        idx = [0] * self.n
        for i, b in enumerate(self.blocks):
            for x in b:
                idx[x] = i
        return tuple(idx)

    @property
    def num_classes(self) -> int:
        return len(self.blocks)

    def relates(self, x: int, y: int) -> bool:
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise ElementOutOfRange(f"({x}, {y}) outside range({self.n})")
        return self.class_index[x] == self.class_index[y]


def discrete(n: int) -> FinEqRel:
    """The identity relation: every class a singleton."""
    return FinEqRel(n, tuple((i,) for i in range(n)))


def indiscrete(n: int) -> FinEqRel:
    """The full relation: one class (empty relation when n = 0)."""
    return FinEqRel(n, (tuple(range(n)),) if n else ())


@dataclass(frozen=True)
class FinPair:
    """A nested pair: fine relation E refining coarse relation F."""

    n: int
    E: FinEqRel
    F: FinEqRel

    def __post_init__(self):
        if isinstance(self.E, (list, tuple)):
            object.__setattr__(self, "E", FinEqRel(self.n, self.E))
        if isinstance(self.F, (list, tuple)):
            object.__setattr__(self, "F", FinEqRel(self.n, self.F))
        if self.E.n != self.n or self.F.n != self.n:
            raise NotAPartition("relations disagree on ground size")
        fidx = self.F.class_index
        for b in self.E.blocks:
            target = fidx[b[0]]
            if any(fidx[x] != target for x in b):
                raise NotNested(f"E-class {b} straddles F-classes")

    @cached_property
    def e_class_to_f_class(self) -> tuple[int, ...]:
        fidx = self.F.class_index
        return tuple(fidx[b[0]] for b in self.E.blocks)

    @cached_property
    def f_class_e_classes(self) -> tuple[tuple[int, ...], ...]:
        """For each F-class index, the E-class indices inside it (ascending)."""
        groups: list[list[int]] = [[] for _ in self.F.blocks]
        for e_idx, f_idx in enumerate(self.e_class_to_f_class):
            groups[f_idx].append(e_idx)
        return tuple(tuple(g) for g in groups)


def validate_pair(n: int, e_blocks, f_blocks) -> FinPair:
    """Build the canonical nested pair or raise a validation error."""
    return FinPair(n, FinEqRel(n, e_blocks), FinEqRel(n, f_blocks))


def saturate(rel: FinEqRel, elements: Iterable[int]) -> frozenset[int]:
    """Union of all classes meeting the given set."""
    out: set[int] = set()
    for x in elements:
        if not (0 <= x < rel.n):
            raise ElementOutOfRange(f"{x} outside range({rel.n})")
        out.update(rel.blocks[rel.class_index[x]])
    return frozenset(out)


def restrict(pair: FinPair, elements: Iterable[int]) -> FinPair:
    """Restriction to a subset, relabeled order-isomorphically onto 0..k-1."""
    subset = sorted(set(elements))
    for x in subset:
        if not (0 <= x < pair.n):
            raise ElementOutOfRange(f"{x} outside range({pair.n})")
    relabel = {x: i for i, x in enumerate(subset)}

    def cut(rel: FinEqRel) -> FinEqRel:
        blocks = []
        for b in rel.blocks:
            kept = tuple(relabel[x] for x in b if x in relabel)
            if kept:
                blocks.append(kept)
        return FinEqRel(len(subset), tuple(blocks))

    return FinPair(len(subset), cut(pair.E), cut(pair.F))


def quotient(pair: FinPair) -> FinPair:
    """Collapse each E-class to a point; F descends to the quotient.

    Ground elements are E-class indices in canonical order, so the result
    has one point per E-class and one coarse class per F-class.
    """
    k = pair.E.num_classes
    coarse = tuple(g for g in pair.f_class_e_classes)
    return FinPair(k, discrete(k), FinEqRel(k, coarse))


def kernel_partition(values: Sequence, n: int) -> FinEqRel:
    """The partition of range(n) into fibers of a length-n function table."""
    if len(values) != n:
        raise ElementOutOfRange(f"table of length {len(values)} on range({n})")
    fibers: dict = {}
    for i, v in enumerate(values):
        fibers.setdefault(v, []).append(i)
    return FinEqRel(n, tuple(tuple(f) for f in fibers.values()))


@dataclass(frozen=True)
class Witness:
    """A function table together with the relation mode it is claimed for."""

    mode: str
    map: tuple[int, ...]

    def __post_init__(self):
        if self.mode not in WITNESS_MODES:
            raise ParseError(f"unknown witness mode {self.mode!r}")
        object.__setattr__(self, "map", tuple(self.map))
        for v in self.map:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ParseError(f"bad map entry {v!r}")


@dataclass(frozen=True)
class Decision:
    """Outcome of a decision procedure: the answer plus a witness if it holds."""

    answer: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    violations: tuple[str, ...] = ()


# --- serialization -------------------------------------------------------
#
# Pair files are single-line JSON objects with exactly the keys n, E, F and
# canonical block order; witness files carry exactly mode and map.  Parsing
# is strict so that serialize/parse round-trips bit for bit.


def serialize_pair(pair: FinPair) -> str:
    doc = {
        "n": pair.n,
        "E": [list(b) for b in pair.E.blocks],
        "F": [list(b) for b in pair.F.blocks],
    }
    return json.dumps(doc, separators=(",", ":"))


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _int_field(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"field {key!r} must be an integer")
    return v


def _block_lists(doc: dict, key: str):
    v = doc.get(key)
    if not isinstance(v, list) or not all(isinstance(b, list) for b in v):
        raise ParseError(f"field {key!r} must be a list of blocks")
    for b in v:
        for x in b:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError(f"non-integer element {x!r} in {key!r}")
    return v


def parse_pair(text: str) -> FinPair:
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("pair file must be a JSON object")
    if set(doc) != {"n", "E", "F"}:
        raise ParseError(f"pair object needs exactly keys n, E, F; got {sorted(doc)}")
    n = _int_field(doc, "n")
    if n < 0:
        raise ParseError("n must be nonnegative")
    return validate_pair(n, _block_lists(doc, "E"), _block_lists(doc, "F"))


def serialize_witness(w: Witness) -> str:
    return json.dumps({"mode": w.mode, "map": list(w.map)}, separators=(",", ":"))


def parse_witness(text: str) -> Witness:
    doc = _load_json(text)
    if not isinstance(doc, dict) or set(doc) != {"mode", "map"}:
        raise ParseError("witness object needs exactly keys mode, map")
    mode = doc["mode"]
    if mode not in WITNESS_MODES:
        raise ParseError(f"unknown witness mode {mode!r}")
    table = doc["map"]
    if not isinstance(table, list):
        raise ParseError("witness map must be a list")
    for v in table:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ParseError(f"bad map entry {v!r}")
    return Witness(mode, tuple(table))
