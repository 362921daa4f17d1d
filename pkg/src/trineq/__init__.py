"""Coherence/concurrence measures and rank-2 triangle-inequality verification."""

from .coherence import (
    CoherenceBasis,
    convex_roof_l1_estimate,
    l1_coherence,
    triangle_check_convex_roof_l1,
    triangle_check_l1,
)
from .concurrence import (
    GeneratorPair,
    TauMatrix,
    coa_estimate,
    generator_pairs,
    highdim_lower_bound,
    pure_concurrence,
    rank2_concurrence_2qubit,
    tau_2qubit,
    tau_mn,
    triangle_check_concurrence,
    wootters_concurrence,
)
from .decompositions import (
    DecompositionSample,
    MixingUnitary,
    figure_ensemble,
    figure_states,
    haar_sample,
    remix,
    sample_decomposition,
    sweep_example,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .linalg import (
    SingularPair2,
    hermitian_eigensystem,
    psd_sqrt,
    singular_values,
    symmetric2_svd_gap,
)
from .report import InequalityReport
from .states import (
    BipartiteShape,
    DensityMatrix,
    PureState,
    Rank2Ensemble,
    density_from_ensemble,
    load_state_file,
    overlap,
    partial_trace_A,
    spin_flip,
    validate_ensemble,
)

__all__ = [
    "BipartiteShape",
    "CoherenceBasis",
    "DecompositionSample",
    "DensityMatrix",
    "GeneratorPair",
    "InequalityReport",
    "KERNEL_BACKEND",
    "MixingUnitary",
    "PureState",
    "Rank2Ensemble",
    "SingularPair2",
    "TauMatrix",
    "coa_estimate",
    "convex_roof_l1_estimate",
    "density_from_ensemble",
    "figure_ensemble",
    "figure_states",
    "generator_pairs",
    "haar_sample",
    "hermitian_eigensystem",
    "highdim_lower_bound",
    "l1_coherence",
    "load_state_file",
    "overlap",
    "partial_trace_A",
    "psd_sqrt",
    "pure_concurrence",
    "rank2_concurrence_2qubit",
    "remix",
    "sample_decomposition",
    "singular_values",
    "spin_flip",
    "sweep_example",
    "symmetric2_svd_gap",
    "tau_2qubit",
    "tau_mn",
    "triangle_check_concurrence",
    "triangle_check_convex_roof_l1",
    "triangle_check_l1",
    "validate_ensemble",
    "wootters_concurrence",
]
__version__ = "0.1.0"
