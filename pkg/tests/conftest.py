"""Shared helpers for the test suite."""

from __future__ import annotations

import numpy as np

from varbounds import clamp_spectrum


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (G + G.conj().T) * (scale / 2.0)


def comm_norm_sq_oracle(rho_matrix: np.ndarray, A_matrix: np.ndarray, s: float) -> float:
    """Independent eigenbasis double sum 2 Σ_{i<j} (λ_i^s - λ_j^s)² |A_ij|².

    Works from the raw (unclustered) eigenbasis; shares only the eigenvalue
    zero-snap convention with the implementation, not its commutator or
    matrix-power code paths.
    """
    w, V = np.linalg.eigh(rho_matrix)
    w = clamp_spectrum(w)
    B = V.conj().T @ A_matrix @ V
    ws = w**s
    diff = np.subtract.outer(ws, ws)
    return float(np.sum(diff * diff * (B * B.conj()).real))


def rel_agree(a: float, b: float, rtol: float, floor: float = 1e-12) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b), floor)
