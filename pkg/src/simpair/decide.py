"""Decision procedures for simultaneous reducibility, embeddability, and
isomorphism between nested pairs, with constructive witnesses.

A map between ground sets is simultaneous when it is a reduction for the
fine relations and for the coarse relations at once.  The three deciders
answer from shape invariants alone and then build an explicit witness:

- reduction: compare coarse relative shapes; the witness embeds the
  quotient class structure and routes every point through a transversal.
- embedding: match coarse classes along local coarse shape domination and
  align each matched class greedily.
- isomorphism: compare global fine shapes; the witness pairs classes with
  equal local fine shape and matches fine classes size for size.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .core import (
    EMBEDDING,
    ISOMORPHISM,
    REDUCTION,
    Decision,
    FinPair,
    VerifyResult,
    Witness,
)
from .errors import ElementOutOfRange, ShapeMismatch
from .shapes import (
    coarse_relative_shape,
    local_coarse_shape,
    local_fine_shape,
    global_fine_shape,
    shape_leq,
)


def _pick_least_sufficient(sizes: Sequence[int], used: Sequence[bool], need: int) -> Optional[int]:
    """Index of the unused entry of least size >= need, least index on ties."""
    best = None
    for i, size in enumerate(sizes):
        if used[i] or size < need:
            continue
        if best is None or size < sizes[best]:
            best = i
    return best


def decide_reduction(p1: FinPair, p2: FinPair) -> Decision:
    """Is there a map carrying both relations of p1 onto both of p2 exactly?

    Holds iff the coarse relative shape of p1 is dominated by that of p2.
    The witness matches each coarse class to a target with at least as many
    fine classes (least sufficient count, least index on ties), injects
    fine classes, and sends every point to the least element of its target
    fine class.
    """
    if not shape_leq(coarse_relative_shape(p1), coarse_relative_shape(p2)):
        return Decision(False, None)

    counts2 = [len(g) for g in p2.f_class_e_classes]
    used = [False] * len(counts2)
    table = [0] * p1.n
    for c1, e_classes1 in enumerate(p1.f_class_e_classes):
        c2 = _pick_least_sufficient(counts2, used, len(e_classes1))
        assert c2 is not None, "shape domination guarantees a target class"
        used[c2] = True
        targets = p2.f_class_e_classes[c2]
        for e1, e2 in zip(e_classes1, targets):
            image = p2.E.blocks[e2][0]
            for x in p1.E.blocks[e1]:
                table[x] = image
    return Decision(True, Witness(REDUCTION, tuple(table)))


def compatibility_graph(p1: FinPair, p2: FinPair) -> tuple[tuple[int, int], ...]:
    """Edges (c1, c2) where class c2 of p2 can absorb class c1 of p1,
    i.e. local coarse shape of c1 is dominated by that of c2."""
    lcs1 = [local_coarse_shape(p1, c) for c in range(p1.F.num_classes)]
    lcs2 = [local_coarse_shape(p2, c) for c in range(p2.F.num_classes)]
    return tuple(
        (i, j)
        for i in range(len(lcs1))
        for j in range(len(lcs2))
        if shape_leq(lcs1[i], lcs2[j])
    )


def max_matching(edges: Iterable[Tuple[int, int]]) -> Dict[int, int]:
    """Maximum bipartite matching by augmenting paths.

    Left nodes are processed in ascending order and neighbors tried in
    ascending order, so the result is deterministic in the edge set.
    """
    adjacency: Dict[int, list[int]] = {}
    for left, right in sorted(set(edges)):
        adjacency.setdefault(left, []).append(right)

    owner: Dict[int, int] = {}  # right -> left

    def augment(left: int, seen: set[int]) -> bool:
        for right in adjacency.get(left, ()):
            if right in seen:
                continue
            seen.add(right)
            if right not in owner or augment(owner[right], seen):
                owner[right] = left
                return True
        return False

    for left in sorted(adjacency):
        augment(left, set())
    pairs = sorted((left, right) for right, left in owner.items())
    return dict(pairs)


def align_embedding(p1: FinPair, p2: FinPair, class_map: Mapping[int, int]) -> Witness:
    """Injective point map following an injective coarse-class assignment.

    Within each class, fine classes are processed in canonical order; each
    goes to the unused target fine class of least sufficient size (least
    index on ties), points in ascending order.  Raises ShapeMismatch when
    some fine class cannot be placed.
    """
    targets_of = list(class_map.values())
    assert len(set(targets_of)) == len(targets_of), "class map must be injective"
    table = [0] * p1.n
    for c1 in range(p1.F.num_classes):
        c2 = class_map[c1]
        target_classes = p2.f_class_e_classes[c2]
        sizes = [len(p2.E.blocks[e]) for e in target_classes]
        used = [False] * len(sizes)
        for e1 in p1.f_class_e_classes[c1]:
            block = p1.E.blocks[e1]
            pick = _pick_least_sufficient(sizes, used, len(block))
            if pick is None:
                raise ShapeMismatch(
                    f"no room for a fine class of size {len(block)} in target class {c2}"
                )
            used[pick] = True
            target_block = p2.E.blocks[target_classes[pick]]
            for x, y in zip(block, target_block):
                table[x] = y
    return Witness(EMBEDDING, tuple(table))


def decide_embedding(p1: FinPair, p2: FinPair) -> Decision:
    """Is there an injective simultaneous reduction from p1 into p2?

    Holds iff the compatibility graph has a matching covering every coarse
    class of p1; the matched classes are then aligned greedily.
    """
    matching = max_matching(compatibility_graph(p1, p2))
    if len(matching) < p1.F.num_classes:
        return Decision(False, None)
    return Decision(True, align_embedding(p1, p2, matching))


def decide_isomorphism(p1: FinPair, p2: FinPair) -> Decision:
    """Is there a bijective simultaneous reduction between the pairs?

    Holds iff the two global fine shapes agree exactly.  The witness pairs
    coarse classes with equal local fine shape in canonical order and maps
    fine classes of each size onto each other, points ascending.
    """
    if global_fine_shape(p1) != global_fine_shape(p2):
        return Decision(False, None)

    groups2: Dict[object, list[int]] = {}
    for c in range(p2.F.num_classes):
        groups2.setdefault(local_fine_shape(p2, c), []).append(c)

    table = [0] * p1.n
    for c1 in range(p1.F.num_classes):
        c2 = groups2[local_fine_shape(p1, c1)].pop(0)
        by_size: Dict[int, list[int]] = {}
        for e2 in p2.f_class_e_classes[c2]:
            by_size.setdefault(len(p2.E.blocks[e2]), []).append(e2)
        for e1 in p1.f_class_e_classes[c1]:
            block = p1.E.blocks[e1]
            target_block = p2.E.blocks[by_size[len(block)].pop(0)]
            for x, y in zip(block, target_block):
                table[x] = y
    return Decision(True, Witness(ISOMORPHISM, tuple(table)))


def verify_witness(p1: FinPair, p2: FinPair, w: Witness) -> VerifyResult:
    """Check a claimed witness against the definitions, no theory involved.

    The map must preserve and reflect both relations pairwise; embedding
    witnesses must be injective and isomorphism witnesses bijective.
    Returns every violation found.
    """
    if len(w.map) != p1.n:
        raise ElementOutOfRange(f"map has {len(w.map)} entries for ground size {p1.n}")
    for v in w.map:
        if not (0 <= v < p2.n):
            raise ElementOutOfRange(f"map value {v} outside range({p2.n})")

    e1, f1 = p1.E.class_index, p1.F.class_index
    e2, f2 = p2.E.class_index, p2.F.class_index
    violations: list[str] = []
    for x in range(p1.n):
        for y in range(x + 1, p1.n):
            if (e1[x] == e1[y]) != (e2[w.map[x]] == e2[w.map[y]]):
                violations.append(f"fine relation broken at pair ({x}, {y})")
            if (f1[x] == f1[y]) != (f2[w.map[x]] == f2[w.map[y]]):
                violations.append(f"coarse relation broken at pair ({x}, {y})")
    if w.mode in (EMBEDDING, ISOMORPHISM):
        seen: Dict[int, int] = {}
        for x, v in enumerate(w.map):
            if v in seen:
                violations.append(f"not injective: {seen[v]} and {x} share image {v}")
            else:
                seen[v] = x
    if w.mode == ISOMORPHISM and p1.n != p2.n:
        violations.append(f"not bijective: ground sizes {p1.n} != {p2.n}")
    return VerifyResult(not violations, tuple(violations))
