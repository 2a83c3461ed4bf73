"""Spectral solver: roots, energies, modes, against dense diagonalization."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triqubit import (BetheRoot, CouplingConfig, DegenerateCouplingError,
                      PoleError, ValidationError, bethe_residual,
                      build_hamiltonian, solve_bethe_roots, spectral_decomposition)

from triqubit.validation import well_separated

CFG = CouplingConfig(0.5, 0.8)

couplings = st.floats(min_value=0.05, max_value=5.0, allow_nan=False)


class TestCouplingConfig:
    def test_pole_positions(self):
        assert CFG.eps_a == pytest.approx(-2.0, abs=1e-15)
        assert CFG.eps_b == pytest.approx(-1.25, abs=1e-15)

    @pytest.mark.parametrize("a,b", [(0.0, 1.0), (-0.5, 1.0), (1.0, math.inf)])
    def test_rejects_bad_couplings(self, a, b):
        with pytest.raises(ValidationError):
            CouplingConfig(a, b)

    def test_degenerate_error_mentions_homogeneous_engine(self):
        with pytest.raises(DegenerateCouplingError, match="homogeneous"):
            solve_bethe_roots(CouplingConfig(0.5, 0.5))
        with pytest.raises(DegenerateCouplingError):
            spectral_decomposition(CouplingConfig(0.5, 0.5))


class TestRoots:
    def test_reference_roots(self):
        plus, minus, inf = solve_bethe_roots(CFG)
        assert plus.value == pytest.approx(-0.5, abs=1e-12)
        assert minus.value == pytest.approx(-5.0 / 3.0, abs=1e-12)
        assert inf.is_infinite

    def test_roots_satisfy_equation(self):
        for root in solve_bethe_roots(CFG)[:2]:
            assert abs(bethe_residual(root.value, CFG)) < 1e-12

    def test_residual_direct_value(self):
        # 1/(-1+2) + 1/(-1+1.25) + 1/(-1) = 1 + 4 - 1
        assert bethe_residual(-1.0, CFG) == pytest.approx(4.0, abs=1e-12)

    def test_residual_pole(self):
        with pytest.raises(PoleError):
            bethe_residual(-2.0, CFG)
        with pytest.raises(PoleError):
            bethe_residual(0.0, CFG)

    def test_finite_root_rejects_infinity(self):
        with pytest.raises(ValueError):
            BetheRoot.finite(math.inf)

    @settings(max_examples=100, deadline=None)
    @given(couplings, couplings)
    def test_roots_always_real_with_small_residual(self, a, b):
        # The discriminant (eps_a - eps_b/2)^2 + 3 eps_b^2/4 never goes
        # negative, so no complex arithmetic is ever needed.
        if a == b:
            return
        cfg = CouplingConfig(a, b)
        if not well_separated(cfg):
            return
        plus, minus, inf = solve_bethe_roots(cfg)
        assert math.isfinite(plus.value) and math.isfinite(minus.value)
        assert inf.is_infinite
        assert abs(bethe_residual(plus.value, cfg)) < 1e-10
        assert abs(bethe_residual(minus.value, cfg)) < 1e-10


class TestSpectralDecomposition:
    def test_reference_energies(self):
        dec = spectral_decomposition(CFG)
        np.testing.assert_allclose(dec.energies, [-1.35, 0.05, 0.65], atol=1e-12)
        block = build_hamiltonian(CFG).sector_block()
        assert dec.energies.sum() == pytest.approx(np.trace(block), abs=1e-12)

    def test_modes_orthonormal(self):
        w = spectral_decomposition(CFG).amplitude_matrix
        np.testing.assert_allclose(w @ w.T, np.eye(3), atol=1e-12)

    def test_completeness(self):
        w = spectral_decomposition(CFG).amplitude_matrix
        np.testing.assert_allclose(w.T @ w, np.eye(3), atol=1e-12)

    def test_infinite_mode_is_uniform(self):
        mode = spectral_decomposition(CFG).modes[2]
        assert mode.root.is_infinite
        np.testing.assert_allclose(mode.amplitudes, np.ones(3) / math.sqrt(3),
                                   atol=1e-15)
        assert mode.energy == pytest.approx(CFG.mean_coupling, abs=1e-15)

    def test_modes_are_eigenvectors_of_oracle_block(self):
        block = build_hamiltonian(CFG).sector_block()
        for mode in spectral_decomposition(CFG).modes:
            residual = block @ mode.amplitudes - mode.energy * mode.amplitudes
            assert np.abs(residual).max() < 1e-10

    def test_frequency_matrix(self):
        dec = spectral_decomposition(CFG)
        omega = dec.frequency_matrix
        np.testing.assert_allclose(omega, -omega.T, atol=1e-15)
        assert dec.frequency(0, 2) == pytest.approx(dec.energies[0] - dec.energies[2],
                                                    abs=1e-15)

    def test_matches_oracle_over_random_configs(self, rng):
        from triqubit.validation import draw_config
        for _ in range(60):
            cfg = draw_config(rng)
            dec = spectral_decomposition(cfg)
            block = build_hamiltonian(cfg).sector_block()
            ref_vals, ref_vecs = np.linalg.eigh(block)
            np.testing.assert_allclose(np.sort(dec.energies), ref_vals, atol=1e-9)
            order = np.argsort(dec.energies)
            w = dec.amplitude_matrix[order]
            sign = np.sign(np.sum(w * ref_vecs.T, axis=1))
            np.testing.assert_allclose(w, sign[:, None] * ref_vecs.T, atol=1e-8)
