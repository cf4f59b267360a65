"""Variance lower bounds for a single quantum observable.

The variance of an observable in a fixed state decomposes into a classical
part (the variance of the observable pinched by the state's spectral
projectors) and a noncommutative part bounded by the commutator norm
||[A, ρ^s]||² with an optimal coefficient set by the extreme eigenvalues of
the state.  This package computes the decomposition, certifies tightness,
provides closed-form qubit identities, product bounds for observable pairs,
and analytic/Monte Carlo averaged-bound curves over purity.
"""

from .bounds import (
    BoundReport,
    CoherenceReport,
    LemmaScan,
    classical_variance,
    coherence_report,
    comm_norm_sq,
    covariance,
    expectation,
    is_maximally_mixed,
    lemma_grid_scan,
    lemma_ratio,
    optimal_coefficient,
    pinch,
    single_bound_report,
    tight_witness,
    variance,
)
from .errors import (
    DimensionMismatch,
    DomainError,
    InvalidS,
    MaximallyMixedState,
    NegativeSpectrum,
    NoConvergence,
    NonPositiveInput,
    NotHermitian,
    NotPSD,
    ScalarObservable,
    TraceNotOne,
    ValidationError,
)
from .linalg import (
    SpectralDecomposition,
    clamp_spectrum,
    commutator,
    herm_eig,
    hs_norm,
    hs_norm_sq,
    matrix_power,
)
from .products import (
    ProductReport,
    luo_product,
    optimal_product,
    product_report,
    robertson,
    schrodinger,
    sharp_product,
)
from .qubit import (
    AveragedBounds,
    BoundEstimate,
    MonteCarloAverages,
    averaged_bounds_analytic,
    averaged_bounds_monte_carlo,
    pair_bound_samples,
    qubit_classical_variance,
    qubit_identity_check,
    qubit_variance,
    spin_observable,
)
from .states import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    PAULIS,
    BlochState,
    DensityMatrix,
    Observable,
    from_bloch,
    make_density,
    make_observable,
    purity,
    random_density,
    random_observable,
    random_unit_vector3,
    unit_sphere_samples,
)

__version__ = "0.1.0"

__all__ = [
    "AveragedBounds",
    "BlochState",
    "BoundEstimate",
    "BoundReport",
    "CoherenceReport",
    "DensityMatrix",
    "DimensionMismatch",
    "DomainError",
    "InvalidS",
    "LemmaScan",
    "MaximallyMixedState",
    "MonteCarloAverages",
    "NegativeSpectrum",
    "NoConvergence",
    "NonPositiveInput",
    "NotHermitian",
    "NotPSD",
    "Observable",
    "PAULIS",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "ProductReport",
    "ScalarObservable",
    "SpectralDecomposition",
    "TraceNotOne",
    "ValidationError",
    "averaged_bounds_analytic",
    "averaged_bounds_monte_carlo",
    "clamp_spectrum",
    "classical_variance",
    "coherence_report",
    "comm_norm_sq",
    "commutator",
    "covariance",
    "expectation",
    "from_bloch",
    "herm_eig",
    "hs_norm",
    "hs_norm_sq",
    "is_maximally_mixed",
    "lemma_grid_scan",
    "lemma_ratio",
    "luo_product",
    "make_density",
    "make_observable",
    "matrix_power",
    "optimal_coefficient",
    "optimal_product",
    "pair_bound_samples",
    "pinch",
    "product_report",
    "purity",
    "qubit_classical_variance",
    "qubit_identity_check",
    "qubit_variance",
    "random_density",
    "random_observable",
    "random_unit_vector3",
    "robertson",
    "schrodinger",
    "sharp_product",
    "single_bound_report",
    "spin_observable",
    "tight_witness",
    "unit_sphere_samples",
    "variance",
]
