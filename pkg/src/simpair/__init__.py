"""Simultaneous reducibility, embeddability, and isomorphism for nested
pairs of finite equivalence relations, decided through shape invariants
and certified against brute force."""

from .cardinal import ALEPH0, ALEPH1, CONTINUUM, ZERO, Cardinal, fin
from .construct import (
    PROFILES,
    SHAPE_TARGETED,
    UNIFORM_REFINEMENT,
    build_shape_pair,
    orbit_pair,
    parse_cycles,
    random_pair,
)
from .core import (
    Decision,
    EMBEDDING,
    FinEqRel,
    FinPair,
    ISOMORPHISM,
    REDUCTION,
    VerifyResult,
    Witness,
    discrete,
    indiscrete,
    kernel_partition,
    parse_pair,
    parse_witness,
    quotient,
    restrict,
    saturate,
    serialize_pair,
    serialize_witness,
    validate_pair,
)
from .decide import (
    align_embedding,
    compatibility_graph,
    decide_embedding,
    decide_isomorphism,
    decide_reduction,
    max_matching,
    verify_witness,
)
from .errors import (
    CapExceeded,
    ClassIndexOutOfRange,
    ElementOutOfRange,
    InfiniteShape,
    NotAPartition,
    NotAPermutation,
    NotInSc,
    NotNested,
    NotRealizable,
    NotSubset,
    ParseError,
    ShapeMismatch,
    SimpairError,
)
from .oracle import (
    brute_embedding,
    brute_isomorphism,
    brute_reduction,
    enumerate_pairs,
)
from .shapes import (
    ShapeSeq,
    coarse_relative_shape,
    coarse_shape,
    fine_shape,
    fine_to_coarse,
    global_fine_shape,
    is_coarse_shape,
    is_fine_shape,
    local_coarse_shape,
    local_fine_shape,
    min_class_size,
    parse_shape_literal,
    print_shape_literal,
    shape_leq,
)
from .wpo import (
    UpperSet,
    count_classes_in,
    gcs_leq,
    min_size_upper_set,
    minimal_elements,
    upper_set,
)

__version__ = "0.1.0"
