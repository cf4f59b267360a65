"""Single-observable variance bounds.

Implements the full chain: variance, the classical part via pinching by the
state's spectral projectors, commutator-norm quantities ||[A, ρ^s]||² for
s >= 1/2, the optimal coefficient set by the extreme eigenvalues of the
state, the sharpened bound (classical + noncommutative term), the tightness
witness, the coherence/decoherence bound, and the scalar ratio behind the
coefficient's optimality.

Everything is a pure function of immutable inputs.  The maximally mixed
state is special-cased throughout: its coefficient diverges while the
commutator term vanishes, and the noncommutative term is zero by
convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidS,
    MaximallyMixedState,
    NonPositiveInput,
    ScalarObservable,
)
from .linalg import clamp_spectrum, commutator, herm_eig, hs_norm_sq, matrix_power
from .states import DensityMatrix, Observable

#: Gap below which the state counts as maximally mixed (relative to its
#: largest eigenvalue): λ_max - λ_min <= MIXED_TOL * max(1, λ_max).
MIXED_TOL = 1e-10

#: Below this eigenvalue gap the noncommutative quantities are evaluated in
#: the eigenbasis double-sum form to avoid catastrophic cancellation in
#: coefficient * commutator-norm products.
STABLE_GAP = 1e-6

#: Bounds may undershoot the variance by at most this much before a
#: property run counts as violated.
SLACK_TOL = 1e-9


def _check_s(s: float) -> float:
    if not s >= 0.5:
        raise InvalidS(f"s={s} outside [1/2, inf)")
    return float(s)


def _check_dims(rho: DensityMatrix, *observables: Observable) -> None:
    for obs in observables:
        if obs.matrix.shape != rho.matrix.shape:
            raise DimensionMismatch(
                f"state dim {rho.dim} vs observable dim {obs.matrix.shape[0]}"
            )


def is_maximally_mixed(rho: DensityMatrix) -> bool:
    """True when the spectrum gap is below the maximally-mixed tolerance."""
    return rho.lambda_max - rho.lambda_min <= MIXED_TOL * max(1.0, rho.lambda_max)


def expectation(rho: DensityMatrix, A: Observable) -> float:
    """Expectation value Tr(ρA)."""
    _check_dims(rho, A)
    return float(np.trace(rho.matrix @ A.matrix).real)


def variance(rho: DensityMatrix, A: Observable) -> float:
    """Variance Tr(ρA²) - (Tr ρA)², with tiny negative rounding clamped to 0."""
    _check_dims(rho, A)
    mean_sq = float(np.trace(rho.matrix @ A.matrix @ A.matrix).real)
    mean = float(np.trace(rho.matrix @ A.matrix).real)
    v = mean_sq - mean * mean
    if v < -1e-12:
        raise ArithmeticError(f"variance {v:.3e} below rounding tolerance; invalid inputs")
    return max(v, 0.0)


def covariance(rho: DensityMatrix, A: Observable, B: Observable) -> float:
    """Symmetrized covariance <{A,B}>/2 - <A><B>."""
    _check_dims(rho, A, B)
    anti = A.matrix @ B.matrix + B.matrix @ A.matrix
    return float(
        np.trace(rho.matrix @ anti).real / 2
        - np.trace(rho.matrix @ A.matrix).real * np.trace(rho.matrix @ B.matrix).real
    )


def _cross_block_norms(rho: DensityMatrix, A: np.ndarray) -> list[tuple[int, int, float]]:
    """||P_μ A P_ν||² for all cluster pairs μ < ν of the state's spectrum."""
    projs = rho.spectrum.projectors
    out = []
    for mu in range(len(projs)):
        left = projs[mu] @ A
        for nu in range(mu + 1, len(projs)):
            out.append((mu, nu, hs_norm_sq(left @ projs[nu])))
    return out


def comm_norm_sq(rho: DensityMatrix, A: Observable, s: float) -> float:
    """Squared commutator norm ||[A, ρ^s]||².

    Normally computed as written (spectral power, commutator, HS norm).  For
    spectrum gaps below ``STABLE_GAP`` it switches to the equivalent
    eigenbasis double sum 2 Σ_{μ<ν} (λ_μ^s - λ_ν^s)² ||P_μ A P_ν||² over the
    state's eigenvalue clusters, which has no cancellation.
    """
    s = _check_s(s)
    _check_dims(rho, A)
    if rho.lambda_max - rho.lambda_min < STABLE_GAP:
        vals = clamp_spectrum(rho.spectrum.cluster_values())
        total = 0.0
        for mu, nu, block in _cross_block_norms(rho, A.matrix):
            total += (vals[mu] ** s - vals[nu] ** s) ** 2 * block
        return 2.0 * total
    rho_s = matrix_power(rho.spectrum, s)
    return hs_norm_sq(commutator(A.matrix, rho_s))


def optimal_coefficient(rho: DensityMatrix, s: float) -> float | None:
    """Largest coefficient c with V >= c ||[A, ρ^s]||² valid for every A.

    Equals (λ_max + λ_min) / (2 (λ_max^s - λ_min^s)²); depends on no other
    eigenvalues.  Returns ``None`` for the maximally mixed state, whose
    noncommutative bound term is zero by convention.
    """
    s = _check_s(s)
    if is_maximally_mixed(rho):
        return None
    gap_s = rho.lambda_max**s - rho.lambda_min**s
    return (rho.lambda_max + rho.lambda_min) / (2.0 * gap_s * gap_s)


def _optimal_term(rho: DensityMatrix, A: Observable, s: float) -> float:
    """Noncommutative bound term c_s(ρ) ||[A, ρ^s]||², zero when maximally mixed.

    For tiny gaps the coefficient is huge while the commutator norm is tiny;
    the term is then evaluated in ratio form, where each cluster pair
    contributes (λ_max + λ_min) [(λ_μ^s - λ_ν^s)/(λ_max^s - λ_min^s)]² with
    ratios <= 1, so the product never amplifies rounding.
    """
    coeff = optimal_coefficient(rho, s)
    if coeff is None:
        return 0.0
    if rho.lambda_max - rho.lambda_min >= STABLE_GAP:
        return coeff * comm_norm_sq(rho, A, s)
    vals = clamp_spectrum(rho.spectrum.cluster_values())
    denom = rho.lambda_max**s - rho.lambda_min**s
    total = 0.0
    for mu, nu, block in _cross_block_norms(rho, A.matrix):
        ratio = (vals[mu] ** s - vals[nu] ** s) / denom
        total += ratio * ratio * block
    return (rho.lambda_max + rho.lambda_min) * total


def pinch(rho: DensityMatrix, A: Observable) -> Observable:
    """Pinching Σ_μ P_μ A P_μ by the state's spectral projectors.

    The result is Hermitian, commutes with ρ, is idempotent under repeated
    pinching, and preserves both Tr A and the expectation Tr(ρA).
    """
    _check_dims(rho, A)
    out = np.zeros_like(A.matrix)
    for P in rho.spectrum.projectors:
        out += P @ A.matrix @ P
    return Observable((out + out.conj().T) / 2)


def classical_variance(rho: DensityMatrix, A: Observable) -> float:
    """Variance of the pinched observable: the classical part of V_ρ(A).

    Computed through the pinching map, which realizes the worst case over
    eigenbases diagonalizing the state; always within [0, V_ρ(A)].
    """
    return variance(rho, pinch(rho, A))


@dataclass(frozen=True)
class BoundReport:
    """One bound evaluation for a (state, observable, s) triple.

    ``coefficient`` is ``None`` for the maximally mixed state, in which case
    ``optimal_bound`` is zero by convention.  ``luo_bound`` is always filled
    with half the commutator norm but is only the skew-information bound at
    s = 1/2; ``luo_valid`` flags that.
    """

    s: float
    variance: float
    classical_variance: float
    comm_norm_sq: float
    coefficient: float | None
    luo_bound: float
    luo_valid: bool
    optimal_bound: float
    sharp_bound: float
    slack: float

    @property
    def maximally_mixed(self) -> bool:
        return self.coefficient is None

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "variance": self.variance,
            "classical_variance": self.classical_variance,
            "comm_norm_sq": self.comm_norm_sq,
            "coefficient": self.coefficient,
            "maximally_mixed": self.maximally_mixed,
            "luo_bound": self.luo_bound,
            "luo_valid": self.luo_valid,
            "optimal_bound": self.optimal_bound,
            "sharp_bound": self.sharp_bound,
            "slack": self.slack,
        }


def single_bound_report(rho: DensityMatrix, A: Observable, s: float) -> BoundReport:
    """Evaluate variance, classical part, and every bound for one triple.

    ``sharp_bound = classical_variance + optimal_bound`` is the sharpened
    relation; ``slack = variance - sharp_bound`` is nonnegative up to
    rounding (>= -1e-9) for every valid input.
    """
    s = _check_s(s)
    _check_dims(rho, A)
    v = variance(rho, A)
    vcl = classical_variance(rho, A)
    comm = comm_norm_sq(rho, A, s)
    coeff = optimal_coefficient(rho, s)
    quantum = _optimal_term(rho, A, s)
    sharp = vcl + quantum
    return BoundReport(
        s=s,
        variance=v,
        classical_variance=vcl,
        comm_norm_sq=comm,
        coefficient=coeff,
        luo_bound=0.5 * comm,
        luo_valid=(s == 0.5),
        optimal_bound=quantum,
        sharp_bound=sharp,
        slack=v - sharp,
    )


def tight_witness(rho: DensityMatrix) -> Observable:
    """Observable saturating the sharpened bound for every s >= 1/2.

    Couples the extreme eigenspaces: |v_max><v_min| + |v_min><v_max| with
    the first eigenvector of the bottom and top clusters in solver order.
    Its classical variance vanishes and the noncommutative term meets the
    variance exactly.  Raises ``MaximallyMixedState`` when no gap exists.
    """
    if is_maximally_mixed(rho):
        raise MaximallyMixedState(
            "maximally mixed state: the bound saturates trivially for every "
            "observable and no coupling witness exists"
        )
    spec = rho.spectrum
    v_min = spec.eigenvectors[:, spec.clusters[0][0]]
    v_max = spec.eigenvectors[:, spec.clusters[-1][0]]
    A = np.outer(v_max, v_min.conj()) + np.outer(v_min, v_max.conj())
    return Observable(A)


@dataclass(frozen=True)
class CoherenceReport:
    """Decoherence-based lower bound data for one (state, observable) pair.

    ``decoherence_bound = c_1(ρ) δ_A² C_A(ρ)`` never exceeds the s = 1
    optimal bound: the commutator norm weights each off-diagonal block by
    the squared eigenvalue gap of A, while the coherence form uses the
    minimal gap everywhere.
    """

    delta_A: float
    coherence: float
    decoherence_bound: float
    s1_bound: float


def coherence_report(rho: DensityMatrix, A: Observable) -> CoherenceReport:
    """Minimal gap of A, coherence of ρ relative to A, and the two bounds.

    The coherence is ||ρ - D_A(ρ)||² with D_A the pinching by A's spectral
    projectors (a nonselective projective measurement of A).  Requires A to
    have at least two eigenvalue clusters; raises ``ScalarObservable``
    otherwise.
    """
    _check_dims(rho, A)
    spec_A = herm_eig(A.matrix)
    if len(spec_A.clusters) < 2:
        raise ScalarObservable("observable has a single eigenvalue cluster")
    vals = spec_A.cluster_values()
    delta = float(np.min(np.diff(vals)))
    pinched = np.zeros_like(rho.matrix)
    for P in spec_A.projectors:
        pinched += P @ rho.matrix @ P
    coherence = hs_norm_sq(rho.matrix - pinched)
    coeff = optimal_coefficient(rho, 1.0)
    decoherence_bound = 0.0 if coeff is None else coeff * delta * delta * coherence
    s1_bound = _optimal_term(rho, A, 1.0)
    return CoherenceReport(
        delta_A=delta,
        coherence=coherence,
        decoherence_bound=decoherence_bound,
        s1_bound=s1_bound,
    )


def lemma_ratio(x: float, y: float, s: float) -> float:
    """Scalar ratio (x^s - y^s)² / (x + y) behind the optimal coefficient.

    On any box [m, M]² with 0 < m < M the maximum sits at the corner (M, m);
    ``lemma_grid_scan`` verifies that numerically.
    """
    s = _check_s(s)
    if x <= 0 or y <= 0:
        raise NonPositiveInput(f"lemma ratio needs x, y > 0, got ({x}, {y})")
    if x == y:
        return 0.0
    d = x**s - y**s
    return d * d / (x + y)


@dataclass(frozen=True)
class LemmaScan:
    """Grid maximum of the scalar ratio against its corner value."""

    s: float
    m: float
    M: float
    grid_points: int
    grid_max: float
    corner: float
    x_at_max: float
    y_at_max: float

    @property
    def ok(self) -> bool:
        return self.grid_max <= self.corner * (1 + 1e-12)


def lemma_grid_scan(m: float, M: float, grid_points: int, s: float) -> LemmaScan:
    """Brute-force maximum of the scalar ratio over a grid on [m, M]².

    ``grid_max`` covers the whole square; the reported location is the
    argmax over the canonical x >= y triangle (the ratio is symmetric under
    swapping its arguments, so both corners attain the maximum).
    """
    s = _check_s(s)
    if not 0 < m < M:
        raise NonPositiveInput(f"need 0 < m < M, got m={m}, M={M}")
    if grid_points < 2:
        raise NonPositiveInput("grid must have at least 2 points per axis")
    axis = np.linspace(m, M, grid_points)
    X, Y = np.meshgrid(axis, axis, indexing="ij")
    F = (X**s - Y**s) ** 2 / (X + Y)
    masked = np.where(X >= Y, F, -np.inf)
    i, j = np.unravel_index(int(np.argmax(masked)), F.shape)
    return LemmaScan(
        s=s,
        m=float(m),
        M=float(M),
        grid_points=int(grid_points),
        grid_max=float(F.max()),
        corner=lemma_ratio(M, m, s),
        x_at_max=float(axis[i]),
        y_at_max=float(axis[j]),
    )
