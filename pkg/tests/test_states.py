import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from varbounds import (
    BlochState,
    DomainError,
    NotHermitian,
    NotPSD,
    PAULI_X,
    TraceNotOne,
    from_bloch,
    hs_norm,
    make_density,
    make_observable,
    purity,
    random_density,
    random_observable,
    random_unit_vector3,
    unit_sphere_samples,
)
from varbounds.linalg import hermiticity_defect
from varbounds.states import PAULIS, _generator


class TestMakeDensity:
    @pytest.mark.parametrize("dim", [2, 3, 5])
    def test_maximally_mixed(self, dim):
        rho = make_density(np.eye(dim) / dim)
        assert rho.lambda_min == pytest.approx(1 / dim, abs=1e-14)
        assert rho.lambda_max == pytest.approx(1 / dim, abs=1e-14)

    def test_diagonal(self):
        rho = make_density(np.diag([0.7, 0.3]))
        assert rho.lambda_min == pytest.approx(0.3, abs=1e-14)
        assert rho.lambda_max == pytest.approx(0.7, abs=1e-14)

    def test_trace_not_one(self):
        with pytest.raises(TraceNotOne):
            make_density(np.diag([0.6, 0.6]))

    def test_not_psd(self):
        with pytest.raises(NotPSD):
            make_density(np.diag([1.2, -0.2]))

    def test_not_hermitian(self):
        with pytest.raises(NotHermitian):
            make_density(np.array([[0.5, 1.0], [0.0, 0.5]]))

    def test_extremes_match_spectrum(self):
        rho = random_density(5, 5, 99)
        assert rho.lambda_min == pytest.approx(rho.spectrum.eigenvalues[0], abs=1e-13)
        assert rho.lambda_max == pytest.approx(rho.spectrum.eigenvalues[-1], abs=1e-13)


class TestBloch:
    def test_r_zero_is_maximally_mixed(self):
        rho = from_bloch(BlochState(0.0, np.array([0.0, 0.0, 1.0])))
        np.testing.assert_allclose(rho.matrix, np.eye(2) / 2, atol=1e-15)

    def test_pure_z(self):
        rho = from_bloch(BlochState(1.0, np.array([0.0, 0.0, 1.0])))
        np.testing.assert_allclose(rho.matrix, np.diag([1.0, 0.0]), atol=1e-15)

    def test_eigenvalues_along_x(self):
        rho = from_bloch(BlochState(0.6, np.array([1.0, 0.0, 0.0])))
        np.testing.assert_allclose(rho.spectrum.eigenvalues, [0.2, 0.8], atol=1e-14)

    def test_domain_validation(self):
        with pytest.raises(DomainError):
            BlochState(1.2, np.array([0.0, 0.0, 1.0]))
        with pytest.raises(DomainError):
            BlochState(0.5, np.array([0.0, 0.0, 2.0]))
        with pytest.raises(DomainError):
            BlochState(0.5, np.array([1.0, 0.0]))


class TestPurity:
    def test_maximally_mixed_qubit(self):
        assert purity(make_density(np.eye(2) / 2)) == pytest.approx(0.5, abs=1e-14)

    @pytest.mark.parametrize("dim", [2, 3, 4])
    def test_pure_state(self, dim):
        assert purity(random_density(dim, 1, 17)) == pytest.approx(1.0, abs=1e-12)

    def test_diagonal(self):
        assert purity(make_density(np.diag([0.7, 0.3]))) == pytest.approx(0.58, abs=1e-14)

    @pytest.mark.parametrize("r", [0.0, 0.3, 0.6, 0.9, 1.0])
    def test_bloch_purity_identity(self, r):
        rho = from_bloch(BlochState(r, np.array([0.6, 0.0, 0.8])))
        assert purity(rho) == pytest.approx((1 + r * r) / 2, abs=1e-12)

    @given(st.floats(min_value=0.0, max_value=1.0))
    @settings(max_examples=50, deadline=None)
    def test_bloch_purity_identity_hypothesis(self, r):
        rho = from_bloch(BlochState(r, np.array([0.0, 1.0, 0.0])))
        assert abs(purity(rho) - (1 + r * r) / 2) <= 1e-12


class TestRandomDensity:
    def test_deterministic(self):
        a = random_density(3, 3, 42)
        b = random_density(3, 3, 42)
        np.testing.assert_array_equal(a.matrix, b.matrix)

    def test_rank_one_is_pure(self):
        assert purity(random_density(4, 1, 5)) == pytest.approx(1.0, abs=1e-12)

    def test_full_rank_is_faithful(self):
        rho = random_density(4, 4, 1)
        assert np.all(rho.spectrum.eigenvalues > 0)

    @pytest.mark.parametrize("dim,rank,seed", [(2, 1, 0), (3, 2, 1), (5, 5, 2), (6, 3, 3)])
    def test_spectrum_invariants(self, dim, rank, seed):
        rho = random_density(dim, rank, seed)
        w = rho.spectrum.eigenvalues
        assert w.sum() == pytest.approx(1.0, abs=1e-12)
        assert int(np.sum(w > 1e-10)) == rank
        assert w[0] >= -1e-12

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            random_density(1, 1, 0)
        with pytest.raises(DomainError):
            random_density(3, 4, 0)


class TestRandomObservable:
    def test_deterministic(self):
        np.testing.assert_array_equal(
            random_observable(4, 9).matrix, random_observable(4, 9).matrix
        )

    def test_exactly_hermitian(self):
        assert hermiticity_defect(random_observable(5, 3).matrix) == 0.0

    def test_qubit_pauli_coefficients_real(self):
        A = random_observable(2, 77).matrix
        c0 = np.trace(A) / 2
        assert abs(c0.imag) < 1e-15
        for sigma in PAULIS:
            c = np.trace(A @ sigma) / 2
            assert abs(c.imag) < 1e-15
        # expansion c0 I + c·σ reproduces A
        recon = c0.real * np.eye(2)
        for sigma in PAULIS:
            recon = recon + (np.trace(A @ sigma) / 2).real * sigma
        np.testing.assert_allclose(recon, A, atol=1e-14)


class TestUnitSphere:
    def test_unit_norm(self):
        v = random_unit_vector3(12)
        assert v.shape == (3,)
        assert abs(np.linalg.norm(v) - 1.0) <= 1e-14

    def test_batch_norms(self):
        samples = unit_sphere_samples(1000, 8)
        np.testing.assert_allclose(np.linalg.norm(samples, axis=1), 1.0, atol=1e-14)

    def test_moments_match_uniform_measure(self):
        # 1e6 samples: first moments vanish, second moments are δ_ij / 3
        samples = unit_sphere_samples(10**6, 0)
        means = samples.mean(axis=0)
        assert np.all(np.abs(means) <= 3e-3)
        second = samples.T @ samples / len(samples)
        np.testing.assert_allclose(second, np.eye(3) / 3, atol=3e-3)

    def test_accepts_existing_generator_and_advances(self):
        rng = _generator(4)
        first = unit_sphere_samples(10, rng)
        second = unit_sphere_samples(10, rng)
        assert not np.allclose(first, second)
