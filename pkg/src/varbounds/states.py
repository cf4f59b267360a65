"""Validated quantum states and observables, plus seeded random ensembles.

Values are built through ``make_density`` / ``make_observable`` so every
instance carries its invariants; the dataclasses are inert containers and
safe to share between threads.  Random generators are counter-based
(Philox), so a seed fully determines the output independent of call order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotHermitian, NotPSD, TraceNotOne
from .linalg import (
    HERMITICITY_TOL,
    SpectralDecomposition,
    as_operator,
    clamp_spectrum,
    herm_eig,
    hermiticity_defect,
    hs_norm,
    hs_norm_sq,
)

TRACE_TOL = 1e-12

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)


@dataclass(frozen=True)
class Observable:
    """Hermitian operator.  Build through ``make_observable``."""

    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class DensityMatrix:
    """Validated quantum state with its cached spectral decomposition.

    ``lambda_min`` / ``lambda_max`` are the extreme eigenvalues with kernel
    noise snapped to exactly zero (see ``linalg.clamp_spectrum``).
    """

    matrix: np.ndarray
    spectrum: SpectralDecomposition
    lambda_min: float
    lambda_max: float

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class BlochState:
    """Qubit state parameters: length r in [0, 1] and unit direction n."""

    r: float
    n: np.ndarray

    def __post_init__(self):
        if not 0.0 <= self.r <= 1.0:
            raise DomainError(f"Bloch length r={self.r} outside [0, 1]")
        n = np.asarray(self.n, dtype=float)
        if n.shape != (3,):
            raise DomainError("Bloch direction must be a 3-vector")
        if abs(np.linalg.norm(n) - 1.0) > 1e-12:
            raise DomainError("Bloch direction must be a unit vector")
        object.__setattr__(self, "n", n)


def make_observable(matrix) -> Observable:
    """Validate Hermiticity (within 1e-12 * ||M||) and wrap."""
    M = as_operator(matrix)
    if hermiticity_defect(M) > HERMITICITY_TOL * hs_norm(M):
        raise NotHermitian("observable is not Hermitian within 1e-12 * ||M||")
    return Observable(M)


def make_density(matrix, cluster_tol: float | None = None) -> DensityMatrix:
    """Validate a density matrix and cache its spectral decomposition.

    Checks, in order: Hermiticity within 1e-12 * ||M|| (``NotHermitian``),
    unit trace within 1e-12 (``TraceNotOne``), and positive semidefiniteness
    up to -1e-12 (``NotPSD``).
    """
    M = as_operator(matrix)
    spectrum = herm_eig(M, cluster_tol)
    tr = complex(np.trace(M))
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceNotOne(f"trace {tr.real:.15g} differs from 1 by more than 1e-12")
    if spectrum.eigenvalues[0] < -1e-12:
        raise NotPSD(f"eigenvalue {spectrum.eigenvalues[0]:.3e} below -1e-12")
    clamped = clamp_spectrum(spectrum.eigenvalues)
    return DensityMatrix(
        matrix=M,
        spectrum=spectrum,
        lambda_min=float(clamped[0]),
        lambda_max=float(clamped[-1]),
    )


def from_bloch(state: BlochState) -> DensityMatrix:
    """Density matrix (I + r n·σ)/2 with eigenvalues (1 ± r)/2."""
    rho = np.eye(2, dtype=complex)
    for comp, sigma in zip(state.n, PAULIS):
        rho = rho + state.r * comp * sigma
    return make_density(rho / 2)


def purity(rho: DensityMatrix) -> float:
    """Tr ρ², equal to (1 + r²)/2 for a qubit Bloch state of length r."""
    return hs_norm_sq(rho.matrix)


def _generator(seed_stream) -> np.random.Generator:
    """Accept an integer seed or an existing Generator."""
    if isinstance(seed_stream, np.random.Generator):
        return seed_stream
    return np.random.Generator(np.random.Philox(key=int(seed_stream) & (2**128 - 1)))


def random_density(dim: int, rank: int, seed) -> DensityMatrix:
    """Random state GG†/Tr(GG†) with G a dim x rank complex Gaussian matrix.

    This is the standard induced (Hilbert-Schmidt for rank = dim) ensemble;
    deterministic for a given seed.
    """
    if dim < 2:
        raise DomainError("dim must be >= 2")
    if not 1 <= rank <= dim:
        raise DomainError(f"rank must lie in [1, {dim}]")
    rng = _generator(seed)
    G = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    M = G @ G.conj().T
    return make_density(M / np.trace(M).real)


def random_observable(dim: int, seed) -> Observable:
    """GUE-type observable (G + G†)/2, exactly Hermitian by construction."""
    if dim < 2:
        raise DomainError("dim must be >= 2")
    rng = _generator(seed)
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return make_observable((G + G.conj().T) / 2)


def unit_sphere_samples(n: int, seed_stream) -> np.ndarray:
    """(n, 3) array of independent uniform points on the unit sphere.

    Normalized Gaussian triples: rejection-free and exactly uniform.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    rng = _generator(seed_stream)
    v = rng.standard_normal((n, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def random_unit_vector3(seed_stream) -> np.ndarray:
    """One uniform point on the unit sphere."""
    return unit_sphere_samples(1, seed_stream)[0]
