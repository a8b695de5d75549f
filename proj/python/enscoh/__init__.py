"""Ensemble coherence measures and restricted one-way LOCC discrimination."""

from ._enscoh import (
    CoherenceReport,
    Criterion,
    DiscriminationResult,
    EnscohError,
    Measure,
    OptimizerConfig,
    ProductEnsemble,
    brute_force_oracle,
    c_l1,
    c_rel,
    check_maximal_superposition,
    coherence,
    ensemble_names,
    make_arb_2x2,
    make_arb_2x3,
    max_coherence,
    mec,
    named_ensemble,
    relative_local_coherence,
    success_probability,
    sweep_csv,
)

__all__ = [
    "CoherenceReport",
    "Criterion",
    "DiscriminationResult",
    "EnscohError",
    "Measure",
    "OptimizerConfig",
    "ProductEnsemble",
    "brute_force_oracle",
    "c_l1",
    "c_rel",
    "check_maximal_superposition",
    "coherence",
    "ensemble_names",
    "make_arb_2x2",
    "make_arb_2x3",
    "max_coherence",
    "mec",
    "named_ensemble",
    "relative_local_coherence",
    "success_probability",
    "sweep_csv",
]
