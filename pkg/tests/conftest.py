import hypothesis.strategies as st

from simpair import ALEPH0, FinEqRel, FinPair, ShapeSeq, fin, fine_to_coarse


@st.composite
def partitions_of(draw, items):
    """A set partition drawn block-assignment by block-assignment."""
    blocks: list[list[int]] = []
    for x in items:
        i = draw(st.integers(0, len(blocks)))
        if i == len(blocks):
            blocks.append([x])
        else:
            blocks[i].append(x)
    return blocks


@st.composite
def nested_pairs(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    coarse = draw(partitions_of(list(range(n))))
    fine = [piece for block in coarse for piece in draw(partitions_of(block))]
    return FinPair(
        n,
        FinEqRel(n, tuple(tuple(b) for b in fine)),
        FinEqRel(n, tuple(tuple(b) for b in coarse)),
    )


small_cardinals = st.one_of(st.integers(0, 4).map(fin), st.just(ALEPH0))


@st.composite
def shape_seqs(draw):
    """Arbitrary canonical shapes, infinite values included."""
    prefix = tuple(draw(st.lists(small_cardinals, max_size=5)))
    return ShapeSeq(prefix, draw(small_cardinals), draw(small_cardinals))


@st.composite
def fine_class_shapes(draw, max_pos=5, max_val=4):
    """Finitely realizable class shapes: finite support, finite values."""
    prefix = draw(st.lists(st.integers(0, max_val), min_size=1, max_size=max_pos))
    if all(v == 0 for v in prefix):
        prefix[draw(st.integers(0, len(prefix) - 1))] = draw(st.integers(1, max_val))
    return ShapeSeq(tuple(prefix))


@st.composite
def coarse_class_shapes(draw):
    """Realizable coarse shapes: accumulated fine shapes, possibly with
    infinite classes, plus the all-infinite family."""
    if draw(st.booleans()):
        return ShapeSeq((), ALEPH0, draw(st.sampled_from([fin(0), fin(2), ALEPH0])))
    fine = draw(fine_class_shapes())
    omega = draw(st.sampled_from([fin(0), fin(0), fin(0), fin(1), fin(2), ALEPH0]))
    return fine_to_coarse(ShapeSeq(fine.prefix, fin(0), omega))
