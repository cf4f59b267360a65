"""Lower bounds on products of variances for pairs of observables.

The conventional commutator-based relations (Robertson, Schrödinger) sit
next to products of single-observable bounds: the skew-information product,
the optimal-coefficient product, and the sharpened product including the
classical parts.  All products reuse the single-observable code path so the
coefficient and commutator norms are computed identically everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import (
    _check_dims,
    _check_s,
    comm_norm_sq,
    covariance,
    single_bound_report,
    variance,
)
from .states import DensityMatrix, Observable


def robertson(rho: DensityMatrix, A: Observable, B: Observable) -> float:
    """Commutator bound |<[A, B]>|² / 4."""
    _check_dims(rho, A, B)
    comm = A.matrix @ B.matrix - B.matrix @ A.matrix
    val = complex(np.trace(rho.matrix @ comm))
    return abs(val) ** 2 / 4.0


def schrodinger(rho: DensityMatrix, A: Observable, B: Observable) -> float:
    """Robertson bound plus the squared symmetrized covariance."""
    cov = covariance(rho, A, B)
    return robertson(rho, A, B) + cov * cov


def luo_product(rho: DensityMatrix, A: Observable, B: Observable) -> float:
    """Product of the two skew informations: ||[A,√ρ]||² ||[B,√ρ]||² / 4."""
    return 0.25 * comm_norm_sq(rho, A, 0.5) * comm_norm_sq(rho, B, 0.5)


def optimal_product(rho: DensityMatrix, A: Observable, B: Observable, s: float) -> float:
    """Product of the two optimal-coefficient single bounds at the same s.

    Zero for the maximally mixed state, where each factor is zero by
    convention.
    """
    s = _check_s(s)
    return (
        single_bound_report(rho, A, s).optimal_bound
        * single_bound_report(rho, B, s).optimal_bound
    )


def sharp_product(rho: DensityMatrix, A: Observable, B: Observable, s: float) -> float:
    """Product of the two sharpened bounds (classical + noncommutative).

    For qubits each factor equals the corresponding variance, so this
    product matches the variance product exactly up to rounding.
    """
    s = _check_s(s)
    return (
        single_bound_report(rho, A, s).sharp_bound
        * single_bound_report(rho, B, s).sharp_bound
    )


@dataclass(frozen=True)
class ProductReport:
    """All product bounds for one (state, A, B, s) quadruple.

    Every bound stays below ``variance_product`` up to rounding;
    ``schrodinger >= robertson`` and ``sharp_product >= optimal_product``
    hold term by term.
    """

    s: float
    variance_product: float
    robertson: float
    schrodinger: float
    luo_product: float
    optimal_product: float
    sharp_product: float

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "variance_product": self.variance_product,
            "robertson": self.robertson,
            "schrodinger": self.schrodinger,
            "luo_product": self.luo_product,
            "optimal_product": self.optimal_product,
            "sharp_product": self.sharp_product,
        }


def product_report(rho: DensityMatrix, A: Observable, B: Observable, s: float) -> ProductReport:
    """Evaluate every product bound for one pair of observables."""
    s = _check_s(s)
    _check_dims(rho, A, B)
    report_a = single_bound_report(rho, A, s)
    report_b = single_bound_report(rho, B, s)
    return ProductReport(
        s=s,
        variance_product=variance(rho, A) * variance(rho, B),
        robertson=robertson(rho, A, B),
        schrodinger=schrodinger(rho, A, B),
        luo_product=luo_product(rho, A, B),
        optimal_product=report_a.optimal_bound * report_b.optimal_bound,
        sharp_product=report_a.sharp_bound * report_b.sharp_bound,
    )
