"""Numerical tolerances, in one place.

Every equality cross-check, inequality slack and validation threshold used by
the package is defined here so the whole tolerance budget can be audited at a
glance.  Rough convention: independent-route equality checks at 1e-8,
inequality slacks at 1e-9, symmetry-by-construction checks at 1e-10 or
tighter.
"""

# -- linear algebra kernels --------------------------------------------------
HERMITICITY_ATOL = 1e-9        # max |m - m†| entry allowed on Hermitian input
JACOBI_OFFDIAG_TOL = 1e-12     # off-diagonal Frobenius norm at convergence
JACOBI_MAX_SWEEPS = 100        # sweep budget before NoConvergence
PSD_EIG_FLOOR = -1e-9          # eigenvalues below this raise NotPSD ...
                               # ... eigenvalues in [floor, 0) are clipped to 0
SYM2_SYMMETRY_ATOL = 1e-12     # 2x2 symmetric-input check (symmetric by construction)
LEMMA_SLACK = 1e-9             # | |x1|-|x2| | <= s1 - s2 + LEMMA_SLACK

# -- states ------------------------------------------------------------------
NORM_ATOL = 1e-10              # pure-state amplitude normalization
TRACE_ATOL = 1e-9              # density-matrix unit trace
WEIGHT_SUM_ATOL = 1e-12        # |p1 + p2 - 1| for ensembles
INDEPENDENCE_MIN_GRAM = 1e-10  # 1 - |<psi1|psi2>|^2 must exceed this
DIMENSION_CAP = 64             # d1*d2 cap keeping everything desk scale

# -- measures and checks -----------------------------------------------------
INEQ_SLACK = 1e-9              # slack for every triangle / sandwich inequality
EQUIV_ATOL = 1e-8              # agreement between independent computation routes
FORMULA_MISMATCH_ATOL = 1e-8   # raise FormulaMismatch beyond this
TAU_SYMMETRY_ATOL = 1e-10      # overlap-matrix symmetry check
SPECTRUM_ABS_FLOOR = 1e-15     # eigenvalues of sqrt(rho) rho~ sqrt(rho) below
                               # this are treated as exact zeros (the matrix has
                               # norm <= 1, so its rounding noise is ~2e-16);
                               # without the floor, the square root turns that
                               # noise into ~sqrt(eps) errors on the exact zero
                               # eigenvalues of rank-deficient states
WOOTTERS_OFFDIAG_TOL = 2e-15   # deeper Jacobi convergence inside the Wootters
                               # route only: at the default 1e-12 the solver can
                               # leave a small-eigenvalue cluster unresolved and
                               # the square root amplifies the misallocation

# -- decompositions ----------------------------------------------------------
DEGENERATE_WEIGHT_MIN = 1e-10  # remixed weight below this is rejected
REMIX_DENSITY_ATOL = 1e-9      # remixed ensemble must reproduce rho this well
MIXING_UNITARY_ATOL = 1e-12    # unitarity of the parameterized 2x2 mixer
REMIX_MAX_RETRIES = 100        # resampling budget on degenerate draws

# -- interfaces ----------------------------------------------------------------
BASIS_UNITARY_ATOL = 1e-9      # basis-change files must be unitary to this
