"""Dense complex linear algebra for small Hermitian operators.

Eigendecompositions carry an explicit degeneracy clustering so that
spectral projectors, and everything downstream that pinches by them, stay
well defined for exactly and nearly degenerate spectra. All functions are
pure and operate on plain complex numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    DomainError,
    NegativeSpectrum,
    NoConvergence,
    NotHermitian,
    ValidationError,
)

#: Relative asymmetry above which a matrix is rejected as non-Hermitian.
HERMITICITY_TOL = 1e-12

#: Eigenvalues below this are a PSD violation; values in [-tol, 0) are
#: rounding noise and clamp to zero before powering.
NEGATIVE_EIG_TOL = 1e-12

#: Eigenvalues within this of zero are kernel noise at the eigensolver's
#: backward-error scale and snap to exactly zero.  Keeps s = 1/2 formulas
#: (square roots of nominally zero eigenvalues) from picking up O(1e-8)
#: artifacts.
ZERO_EIG_SNAP = 1e-14


def as_operator(matrix) -> np.ndarray:
    """Coerce input to a square complex array with finite entries."""
    M = np.asarray(matrix, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] < 1:
        raise ValidationError("matrix must have dimension >= 1")
    if not np.all(np.isfinite(M)):
        raise ValidationError("matrix entries must be finite")
    return M


def hs_norm_sq(X) -> float:
    """Squared Hilbert-Schmidt norm, Tr(X†X) = sum of |entries|²."""
    X = np.asarray(X)
    return float(np.vdot(X, X).real)


def hs_norm(X) -> float:
    """Hilbert-Schmidt norm sqrt(Tr X†X)."""
    return math.sqrt(hs_norm_sq(X))


def commutator(A, B) -> np.ndarray:
    """AB - BA.  Anti-Hermitian whenever A and B are both Hermitian."""
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.shape != B.shape:
        raise DimensionMismatch(f"operator shapes {A.shape} and {B.shape} differ")
    return A @ B - B @ A


def hermiticity_defect(M) -> float:
    """HS norm of M - M†, zero exactly for Hermitian input."""
    M = np.asarray(M, dtype=complex)
    return hs_norm(M - M.conj().T)


def default_cluster_tol(M) -> float:
    """Hybrid degeneracy tolerance 1e-9 * max(1, ||M||)."""
    return 1e-9 * max(1.0, hs_norm(M))


def clamp_spectrum(eigenvalues: np.ndarray) -> np.ndarray:
    """Snap |λ| <= 1e-14 to exactly 0 and clamp remaining negatives to 0."""
    w = np.asarray(eigenvalues, dtype=float)
    w = np.where(np.abs(w) <= ZERO_EIG_SNAP, 0.0, w)
    return np.maximum(w, 0.0)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Hermitian eigensystem with eigenvalues grouped into degenerate clusters.

    ``eigenvalues`` are ascending; ``clusters`` partitions their indices into
    groups whose members are within the clustering tolerance of their
    neighbours (chained near-degeneracies merge transitively).  ``projectors``
    holds one orthogonal projector per cluster, same order; column
    ``eigenvectors[:, i]`` belongs to ``eigenvalues[i]``.
    """

    eigenvalues: np.ndarray
    clusters: tuple[tuple[int, ...], ...]
    projectors: tuple[np.ndarray, ...]
    eigenvectors: np.ndarray
    cluster_tol: float

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    def cluster_values(self) -> np.ndarray:
        """Representative (mean) eigenvalue per cluster, ascending."""
        return np.array([float(np.mean(self.eigenvalues[list(c)])) for c in self.clusters])

    def reconstruct(self) -> np.ndarray:
        """Sum of λ_μ P_μ over clusters."""
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for lam, P in zip(self.cluster_values(), self.projectors):
            out += lam * P
        return out


def _cluster_indices(eigenvalues: np.ndarray, tol: float) -> tuple[tuple[int, ...], ...]:
    clusters: list[tuple[int, ...]] = []
    current = [0]
    for i in range(1, len(eigenvalues)):
        if eigenvalues[i] - eigenvalues[i - 1] <= tol:
            current.append(i)
        else:
            clusters.append(tuple(current))
            current = [i]
    clusters.append(tuple(current))
    return tuple(clusters)


def herm_eig(M, cluster_tol: float | None = None) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix with degeneracy clustering.

    Eigenvalues are returned ascending; consecutive eigenvalues separated by
    more than ``cluster_tol`` (default ``1e-9 * max(1, ||M||)``) land in
    distinct clusters, each with a Hermitian, idempotent projector.  The
    numerical work is done by LAPACK's Hermitian solver, a provably
    convergent method for these dense, small inputs.

    Raises ``NotHermitian`` if the asymmetry exceeds ``1e-12 * ||M||`` and
    ``NoConvergence`` if the underlying iteration fails.
    """
    M = as_operator(M)
    if hermiticity_defect(M) > HERMITICITY_TOL * hs_norm(M):
        raise NotHermitian("asymmetry above 1e-12 * ||M||")
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(M)
    if cluster_tol < 0:
        raise DomainError("cluster_tol must be nonnegative")
    H = (M + M.conj().T) / 2
    try:
        w, V = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(str(exc)) from exc
    clusters = _cluster_indices(w, cluster_tol)
    projectors = []
    for c in clusters:
        cols = V[:, list(c)]
        P = cols @ cols.conj().T
        projectors.append((P + P.conj().T) / 2)
    return SpectralDecomposition(
        eigenvalues=w,
        clusters=clusters,
        projectors=tuple(projectors),
        eigenvectors=V,
        cluster_tol=float(cluster_tol),
    )


def matrix_power(decomp: SpectralDecomposition, s: float) -> np.ndarray:
    """Spectral power: sum of λ_μ^s P_μ over the decomposition's clusters.

    Requires a PSD spectrum up to rounding (all eigenvalues >= -1e-12);
    eigenvalues are clamped via :func:`clamp_spectrum` before powering.
    Convention at s = 0: λ^0 = 1 for λ > 0 and 0 for clamped zeros, i.e.
    the result is the support projector.
    """
    if s < 0:
        raise DomainError("exponent s must be >= 0")
    if decomp.eigenvalues[0] < -NEGATIVE_EIG_TOL:
        raise NegativeSpectrum(f"eigenvalue {decomp.eigenvalues[0]:.3e} below -1e-12")
    vals = clamp_spectrum(decomp.cluster_values())
    out = np.zeros((decomp.dim, decomp.dim), dtype=complex)
    for lam, P in zip(vals, decomp.projectors):
        if lam > 0.0:
            out += lam**s * P
    return out
