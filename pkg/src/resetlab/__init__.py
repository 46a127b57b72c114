"""resetlab: synchronizing automata, transformation monoids, and
reset-threshold bound checking, with exhaustive small-n verification
sweeps against independent oracles."""

from ._kernels import BACKEND
from .automaton import (
    Automaton,
    BoundsReport,
    Classification,
    ReachabilityResult,
    Word,
    augment_threshold,
    classify,
    exact_reset_threshold,
    greedy_reset_word,
    reachability,
    subset_witness_word,
    verify_bounds,
)
from .errors import (
    CapacityError,
    DiagonalPairError,
    DimensionError,
    DomainError,
    NotOnePointError,
    ParseError,
    ResetLabError,
    ScopeCappedError,
)
from .groups import (
    BLOCK_ORACLE,
    HIGMAN_SIMS,
    PermutationSet,
    group_closure,
    is_primitive,
    is_transitive,
    nontrivial_block_system,
    orbitals,
    orbits,
)
from .monoid import (
    CERNY,
    RN,
    MonoidStats,
    MonoidTable,
    PartialBijection,
    Theorem17Report,
    build_family,
    enumerate_partial_bijections,
    generate_monoid,
    lemma15_check,
    minimal_generating_sets,
    monoid_reset_threshold,
    monoid_stats,
    verify_theorem17,
)
from .relations import (
    BinaryRelation,
    PiChain,
    cyclic_part,
    is_strongly_connected,
    msc,
    pi_chain,
)
from .transform import (
    KernelType,
    MapProfile,
    OnePointProfile,
    StateSet,
    Transformation,
    augments,
    compose,
    constant,
    identity,
    map_profile,
    one_point_profile,
    preimage,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
