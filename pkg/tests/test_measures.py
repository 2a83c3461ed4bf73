"""Entropy, mutual information, concurrence, and probabilities."""

import math

import numpy as np
import pytest

from triqubit import (CouplingConfig, PairDensityMatrix, PairLabel,
                      UnsupportedShapeError, ValidationError, concurrence,
                      density_homogeneous, density_inhomogeneous,
                      initial_state, mutual_information, pair_eigenvalues,
                      pair_measures, probabilities, reduce_pair,
                      von_neumann_entropy, wootters_values)
from triqubit.analysis import EQUAL_TIME_PHASE

from conftest import random_sector_state

CFG = CouplingConfig(0.5, 0.8)
W_ENTROPY = math.log2(3) - 2 / 3


def generic_wootters(pm: PairDensityMatrix) -> np.ndarray:
    """Textbook spin-flip spectrum via a dense non-Hermitian eigensolve."""
    sy = np.array([[0, -1j], [1j, 0]])
    yy = np.kron(sy, sy)
    product = pm.matrix @ yy @ pm.matrix.conj() @ yy
    lam = np.sqrt(np.clip(np.sort(np.linalg.eigvals(product).real)[::-1], 0, None))
    return lam


class TestEntropy:
    def test_pure_state_is_zero(self):
        assert von_neumann_entropy(initial_state().density_matrix()) == pytest.approx(
            0.0, abs=1e-12)

    def test_maximally_mixed_qubit(self):
        assert von_neumann_entropy(np.eye(2) / 2) == pytest.approx(1.0, abs=1e-15)

    def test_w_marginal_entropy(self):
        # Eigenvalues {2/3, 1/3, 0, 0} give log2(3) - 2/3.
        rho = np.diag([2 / 3, 1 / 3, 0, 0]).astype(complex)
        assert von_neumann_entropy(rho) == pytest.approx(W_ENTROPY, abs=1e-12)

    def test_clamps_roundoff_negatives(self):
        rho = np.diag([1.0 + 1e-13, -1e-13]).astype(complex)
        assert von_neumann_entropy(rho) == pytest.approx(0.0, abs=1e-11)

    def test_rejects_genuinely_negative(self):
        with pytest.raises(ValidationError, match="not a density matrix"):
            von_neumann_entropy(np.diag([1.5, -0.5]).astype(complex))


class TestMutualInformation:
    def test_initial_bell_pair(self):
        rho = initial_state().density_matrix()
        assert mutual_information(rho, "ab") == pytest.approx(2.0, abs=1e-12)

    def test_initial_product_pairs(self):
        rho = initial_state().density_matrix()
        assert mutual_information(rho, "ac") == pytest.approx(0.0, abs=1e-12)
        assert mutual_information(rho, "bc") == pytest.approx(0.0, abs=1e-12)

    def test_w_point_all_pairs(self):
        rho = density_homogeneous(1.0, EQUAL_TIME_PHASE)
        for pair in PairLabel:
            assert mutual_information(rho, pair) == pytest.approx(W_ENTROPY, abs=1e-6)

    def test_homogeneous_off_center_pairs_symmetric(self, rng):
        for t in rng.uniform(-20, 20, size=10):
            rho = density_homogeneous(1.0, float(t))
            assert mutual_information(rho, "ac") == pytest.approx(
                mutual_information(rho, "bc"), abs=1e-12)


class TestConcurrence:
    def test_bell_projector(self):
        pm = reduce_pair(initial_state().density_matrix(), "ab")
        assert concurrence(pm) == pytest.approx(1.0, abs=1e-12)

    def test_diagonal_pair_matrix(self):
        pm = PairDensityMatrix(np.diag([0.3, 0.3, 0.4, 0.0]).astype(complex),
                               PairLabel.AB)
        assert concurrence(pm) == pytest.approx(0.0, abs=1e-15)

    def test_w_point_all_pairs(self):
        rho = density_homogeneous(1.0, EQUAL_TIME_PHASE)
        for pair in PairLabel:
            assert concurrence(reduce_pair(rho, pair)) == pytest.approx(2 / 3, abs=1e-9)

    def test_rejects_down_down_population(self):
        pm = PairDensityMatrix(np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex),
                               PairLabel.AB)
        with pytest.raises(UnsupportedShapeError):
            concurrence(pm)

    def test_monogamy_at_start(self):
        rho = initial_state().density_matrix()
        assert concurrence(reduce_pair(rho, "ab")) == pytest.approx(1.0, abs=1e-12)
        assert concurrence(reduce_pair(rho, "ac")) == 0.0
        assert concurrence(reduce_pair(rho, "bc")) == 0.0

    def test_block_form_matches_generic_spin_flip(self, rng):
        # The dense non-Hermitian eigensolve is the sloppier route; agreement
        # at 1e-7 is all it supports.
        for _ in range(50):
            rho = random_sector_state(rng).density_matrix()
            for pair in PairLabel:
                pm = reduce_pair(rho, pair)
                np.testing.assert_allclose(wootters_values(pm), generic_wootters(pm),
                                           atol=1e-7)

    def test_equals_coherence_magnitude(self, rng):
        for t in rng.uniform(-20, 20, size=10):
            rho = density_inhomogeneous(CFG, float(t))
            co = rho.doubled_coefficients()
            assert concurrence(reduce_pair(rho, "ab")) == pytest.approx(
                abs(co.ab), abs=1e-12)


class TestPairEigenvalues:
    def test_bell_spectrum(self):
        pm = reduce_pair(initial_state().density_matrix(), "ab")
        np.testing.assert_allclose(pair_eigenvalues(pm), [1, 0, 0, 0], atol=1e-12)

    def test_matches_dense_diagonalization(self, rng):
        for _ in range(50):
            rho = random_sector_state(rng).density_matrix()
            pm = reduce_pair(rho, "ac")
            expected = np.sort(np.linalg.eigvalsh(pm.matrix))[::-1]
            np.testing.assert_allclose(pair_eigenvalues(pm), expected, atol=1e-12)


class TestProbabilities:
    def test_initial(self):
        p = probabilities(initial_state().density_matrix())
        assert tuple(p) == pytest.approx((0.5, 0.5, 0.0), abs=1e-14)

    def test_w_point(self):
        p = probabilities(density_homogeneous(1.0, EQUAL_TIME_PHASE))
        assert tuple(p) == pytest.approx((1 / 3, 1 / 3, 1 / 3), abs=1e-10)

    def test_near_revival(self):
        p = probabilities(density_inhomogeneous(CFG, 9.4))
        assert p.p_c < 0.02
        assert abs(p.p_a - p.p_b) < 0.05

    def test_sum_to_one(self, rng):
        for t in rng.uniform(-20, 20, size=10):
            p = probabilities(density_inhomogeneous(CFG, float(t)))
            assert sum(p) == pytest.approx(1.0, abs=1e-12)


class TestPairMeasures:
    def test_breakdown_consistency(self, rng):
        for t in rng.uniform(-20, 20, size=5):
            rho = density_inhomogeneous(CFG, float(t))
            for pair in PairLabel:
                br = pair_measures(rho, pair)
                assert br.pair is pair
                assert br.mutual_information == pytest.approx(
                    mutual_information(rho, pair), abs=1e-14)
                assert br.concurrence == pytest.approx(
                    concurrence(reduce_pair(rho, pair)), abs=1e-14)
                assert br.pair_eigenvalues.sum() == pytest.approx(1.0, abs=1e-12)
                assert (np.diff(br.pair_eigenvalues) <= 1e-15).all()
                assert (np.diff(br.wootters_values) <= 1e-15).all()
                assert 0.0 <= br.concurrence <= 1.0
                assert -1e-12 <= br.mutual_information <= 2.0 + 1e-12

    def test_coherence_bounded_by_populations(self, rng):
        # PSD forces |coherence|^2 <= product of the adjoining populations.
        for t in rng.uniform(-20, 20, size=20):
            co = density_inhomogeneous(CFG, float(t)).doubled_coefficients()
            assert abs(co.ab) <= math.sqrt(co.aa * co.bb) + 1e-10
            assert abs(co.ac) <= math.sqrt(co.aa * co.cc) + 1e-10
            assert abs(co.bc) <= math.sqrt(co.bb * co.cc) + 1e-10
