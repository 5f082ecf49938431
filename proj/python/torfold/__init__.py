"""Periodic quivers, orbit-mutation and cluster-level folding."""

from ._torfold import (
    DomainError,
    Error,
    FoldabilityViolationError,
    FoldingError,
    IceQuiver,
    InexactDivisionError,
    InputError,
    MutationAtFrozenError,
    OrbitSeed,
    OverflowError,
    PeriodicQuiver,
    Triangulation,
    UnflippableError,
    YMonomial,
    build_AQ,
    build_gamma_infinity,
    cluster_variable,
    cycle_quiver,
    folded_seed,
    nakajima_leq,
    run_suite,
    verify_exchange_identities,
)

__all__ = [name for name in dir() if not name.startswith("_")]
