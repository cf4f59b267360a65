"""Closed-form qubit analytics and Monte Carlo cross-checks.

For a qubit state of Bloch length r and a unit spin observable at angle θ
to the Bloch axis, every quantity of interest has a closed form: the
variance 1 - r² cos²θ, its classical part (1 - r²) cos²θ, and an
s-independent noncommutative term sin²θ, which together make the sharpened
bound an exact identity.  Averaging the product bounds uniformly over the
two observable directions yields the purity curves implemented here both
analytically and by seeded Monte Carlo.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .states import PAULIS, Observable, make_observable, unit_sphere_samples

#: Column order of the averaged bounds, shared with the CLI's CSV writer.
BOUND_NAMES = (
    "avg_robertson",
    "avg_schrodinger",
    "avg_luo",
    "avg_optimal",
    "avg_sharp",
    "avg_variance_product",
)


def _check_r_theta(r: float, theta: float) -> tuple[float, float]:
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"Bloch length r={r} outside [0, 1]")
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"angle theta={theta} outside [0, pi]")
    return float(r), float(theta)


def spin_observable(axis) -> Observable:
    """Spin observable a·σ for a 3-vector of Pauli coefficients."""
    a = np.asarray(axis, dtype=float)
    if a.shape != (3,):
        raise DomainError("axis must be a 3-vector")
    M = np.zeros((2, 2), dtype=complex)
    for comp, sigma in zip(a, PAULIS):
        M += comp * sigma
    return make_observable(M)


def qubit_variance(r: float, theta: float) -> float:
    """Variance of a unit spin observable: 1 - r² cos²θ."""
    r, theta = _check_r_theta(r, theta)
    c = math.cos(theta)
    return 1.0 - r * r * c * c


def qubit_classical_variance(r: float, theta: float) -> float:
    """Classical part of the variance: (1 - r²) cos²θ.

    Valid as the pinched-observable variance for r > 0.  At r = 0 the
    maximally mixed state makes every observable classical, so the general
    path returns the full variance instead of this formula's cos²θ.
    """
    r, theta = _check_r_theta(r, theta)
    c = math.cos(theta)
    return (1.0 - r * r) * c * c


def qubit_identity_check(r: float, theta: float, s: float) -> float:
    """Residual of the exact qubit decomposition, zero up to rounding.

    For r > 0 the sharpened bound holds with equality and the optimized
    noncommutative term is sin²θ for every s >= 1/2; the residual is
    V - (V_cl + sin²θ).  At r = 0 the noncommutative term is zero by
    convention and the classical part equals the full variance.
    """
    from .bounds import _check_s

    _check_s(s)
    r, theta = _check_r_theta(r, theta)
    v = qubit_variance(r, theta)
    if r == 0.0:
        return v - v
    sin = math.sin(theta)
    return v - (qubit_classical_variance(r, theta) + sin * sin)


@dataclass(frozen=True)
class AveragedBounds:
    """Uniformly averaged product bounds as functions of purity.

    ``avg_sharp`` coincides with ``avg_variance_product`` because the
    sharpened single-observable bound is an identity for qubits, and
    ``avg_optimal`` is 4/9 for every purity.
    """

    purity: float
    avg_robertson: float
    avg_schrodinger: float
    avg_luo: float
    avg_optimal: float
    avg_sharp: float
    avg_variance_product: float

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(getattr(self, name) for name in BOUND_NAMES)


def averaged_bounds_analytic(P: float) -> AveragedBounds:
    """Closed-form averaged bounds at purity P in [1/2, 1]."""
    if not 0.5 <= P <= 1.0:
        raise DomainError(f"purity P={P} outside [1/2, 1]")
    vp = 4.0 * (2.0 - P) ** 2 / 9.0
    return AveragedBounds(
        purity=float(P),
        avg_robertson=(2.0 / 9.0) * (2.0 * P - 1.0),
        avg_schrodinger=(4.0 / 9.0) * (P * P - P + 1.0),
        avg_luo=(4.0 / 9.0) * (1.0 - math.sqrt(max(0.0, 2.0 * (1.0 - P)))) ** 2,
        avg_optimal=4.0 / 9.0,
        avg_sharp=vp,
        avg_variance_product=vp,
    )


def pair_bound_samples(r: float, a: np.ndarray, b: np.ndarray) -> dict[str, np.ndarray]:
    """Per-sample product bounds for spin observables a·σ, b·σ (unit rows).

    The state is the Bloch state of length r along z.  Each entry is the
    exact value the matrix-level product bounds take on that sample; the
    closed forms here are algebraically identical to the general path (the
    test suite pins that down against explicit 2x2 matrices).

    The optimal bound uses the expression (1 - a₃²)(1 - b₃²), which is
    independent of both s and r; at r = 0 this is the limit value rather
    than the maximally-mixed zero convention, matching the averaged curve
    that stays at 4/9 for every purity.
    """
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"Bloch length r={r} outside [0, 1]")
    a3 = a[:, 2]
    b3 = b[:, 2]
    r2 = r * r
    va = 1.0 - r2 * a3 * a3
    vb = 1.0 - r2 * b3 * b3
    off_a = 1.0 - a3 * a3
    off_b = 1.0 - b3 * b3
    cov = a[:, 0] * b[:, 0] + a[:, 1] * b[:, 1] + (1.0 - r2) * a3 * b3
    robertson = r2 * (a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]) ** 2
    sharp = ((1.0 - r2) * a3 * a3 + off_a) * ((1.0 - r2) * b3 * b3 + off_b)
    return {
        "avg_robertson": robertson,
        "avg_schrodinger": robertson + cov * cov,
        "avg_luo": (1.0 - math.sqrt(1.0 - r2)) ** 2 * off_a * off_b,
        "avg_optimal": off_a * off_b,
        "avg_sharp": sharp,
        "avg_variance_product": va * vb,
    }


@dataclass(frozen=True)
class BoundEstimate:
    """Monte Carlo mean and standard error of one averaged bound."""

    mean: float
    se: float


@dataclass(frozen=True)
class MonteCarloAverages:
    """Monte Carlo estimates of all averaged bounds at one purity."""

    purity: float
    n_samples: int
    avg_robertson: BoundEstimate
    avg_schrodinger: BoundEstimate
    avg_luo: BoundEstimate
    avg_optimal: BoundEstimate
    avg_sharp: BoundEstimate
    avg_variance_product: BoundEstimate

    def estimate(self, name: str) -> BoundEstimate:
        if name not in BOUND_NAMES:
            raise KeyError(name)
        return getattr(self, name)


def averaged_bounds_monte_carlo(P: float, n_samples: int, seed) -> MonteCarloAverages:
    """Monte Carlo estimate of the averaged bounds at purity P.

    Fixes the state along z with r = sqrt(2P - 1) (averages depend only on
    purity), draws two independent uniform sphere directions per sample
    from a counter-based stream keyed by ``seed``, and averages the exact
    per-sample bound values.  Deterministic per seed; standard errors come
    from the per-sample population variance.
    """
    if not 0.5 <= P <= 1.0:
        raise DomainError(f"purity P={P} outside [1/2, 1]")
    if n_samples < 1:
        raise DomainError("n_samples must be >= 1")
    from .states import _generator

    r = math.sqrt(max(0.0, 2.0 * P - 1.0))
    rng = _generator(seed)
    a = unit_sphere_samples(n_samples, rng)
    b = unit_sphere_samples(n_samples, rng)
    samples = pair_bound_samples(r, a, b)
    root_n = math.sqrt(n_samples)
    estimates = {
        name: BoundEstimate(mean=float(arr.mean()), se=float(arr.std() / root_n))
        for name, arr in samples.items()
    }
    return MonteCarloAverages(purity=float(P), n_samples=int(n_samples), **estimates)
