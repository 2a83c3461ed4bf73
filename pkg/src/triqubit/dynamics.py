"""Closed-form time evolution of the Bell-pair-plus-up initial state.

Two engines, one per coupling pattern:

* unequal couplings -- expand the initial state over the three spectral
  modes and rephase each by exp(-i E_k t); the density matrix is also
  available directly from the double-sum coefficient expressions, which the
  tests hold against the outer product of the evolved state;
* equal couplings J -- only two sector eigenvalues (J*alpha with alpha = -1
  and 1/2) overlap the initial state, so the wave function and the density
  matrix reduce to two-frequency closed forms.

Time is a continuous parameter everywhere; negative times evolve backwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bethe import CouplingConfig, SpectralDecomposition, spectral_decomposition
from .core import SubspaceState, SystemDensityMatrix

SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class HomogeneousSpectrum:
    """Sector eigenpairs reachable from the initial state at equal couplings.

    Eigenvalues scale linearly with the coupling J; the vectors sum to the
    central basis state |c>.
    """

    eigvals: tuple[float, float] = (-1.0, 0.5)
    eigvecs: np.ndarray = field(default_factory=lambda: np.array(
        [[-1.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0],
         [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]]))

    def __post_init__(self):
        v = np.asarray(self.eigvecs, dtype=float).copy()
        v.setflags(write=False)
        object.__setattr__(self, "eigvecs", v)


HOMOGENEOUS_SPECTRUM = HomogeneousSpectrum()


def _require_nonzero_coupling(j: float) -> None:
    if j == 0.0:
        raise ValueError("J = 0 leaves the state constant; there is nothing to evolve")


def mode_overlaps(dec: SpectralDecomposition) -> np.ndarray:
    """Overlap of each mode with the initial state, times sqrt(2): w_a + w_b."""
    w = dec.amplitude_matrix
    return w[:, 0] + w[:, 1]


def inhomogeneous_amplitudes(dec: SpectralDecomposition, times) -> np.ndarray:
    """Sector amplitudes at the given times, shape (3, len(times)).

    c_j(t) = (1/sqrt 2) sum_k w_j^k (w_a^k + w_b^k) exp(-i E_k t).
    """
    t = np.atleast_1d(np.asarray(times, dtype=float))
    w = dec.amplitude_matrix
    phases = np.exp(-1j * np.outer(dec.energies, t))
    return (w.T @ (mode_overlaps(dec)[:, None] * phases)) / SQRT2


def evolve_inhomogeneous(cfg: CouplingConfig, t: float) -> SubspaceState:
    """State at time t for unequal couplings."""
    dec = spectral_decomposition(cfg)
    return SubspaceState.from_vector(inhomogeneous_amplitudes(dec, t)[:, 0])


def density_inhomogeneous(cfg: CouplingConfig, t: float) -> SystemDensityMatrix:
    """Density matrix at time t from the six double-sum coefficients.

    This is a deliberately independent code path from evolve_inhomogeneous:
    each coefficient is a double sum over mode pairs weighted by the initial
    overlaps, oscillating at the transition frequencies.  Diagonals carry
    cos(w t); the upper off-diagonals carry exp(-i w t), which is the phase
    orientation that reproduces the outer product |psi(t)><psi(t)|.
    """
    dec = spectral_decomposition(cfg)
    w = dec.amplitude_matrix           # w[k, j]: mode k, site j
    s = mode_overlaps(dec)
    omega = dec.frequency_matrix
    aa = bb = cc = 0.0
    ab = ac = bc = 0.0 + 0.0j
    for k in range(3):
        for kp in range(3):
            weight = s[k] * s[kp]
            cosine = np.cos(omega[k, kp] * t)
            phase = np.exp(-1j * omega[k, kp] * t)
            aa += weight * w[k, 0] * w[kp, 0] * cosine
            bb += weight * w[k, 1] * w[kp, 1] * cosine
            cc += weight * w[k, 2] * w[kp, 2] * cosine
            ab += weight * w[k, 0] * w[kp, 1] * phase
            ac += weight * w[k, 0] * w[kp, 2] * phase
            bc += weight * w[k, 1] * w[kp, 2] * phase
    matrix = 0.5 * np.array([
        [aa, ab, ac],
        [np.conj(ab), bb, bc],
        [np.conj(ac), np.conj(bc), cc],
    ])
    return SystemDensityMatrix(matrix)


def homogeneous_amplitudes(j: float, times) -> np.ndarray:
    """Sector amplitudes for equal couplings, shape (3, len(times))."""
    _require_nonzero_coupling(j)
    t = np.atleast_1d(np.asarray(times, dtype=float))
    a1, a2 = HOMOGENEOUS_SPECTRUM.eigvals
    v1, v2 = HOMOGENEOUS_SPECTRUM.eigvecs
    term1 = np.exp(-1j * j * a1 * t)[None, :] / a1 * v1[:, None]
    term2 = np.exp(-1j * j * a2 * t)[None, :] / a2 * v2[:, None]
    return (term1 + term2) / SQRT2


def evolve_homogeneous(j: float, t: float) -> SubspaceState:
    """State at time t for equal couplings J."""
    return SubspaceState.from_vector(homogeneous_amplitudes(j, t)[:, 0])


def density_homogeneous(j: float, t: float) -> SystemDensityMatrix:
    """Density matrix at time t for equal couplings, from the closed forms.

    Only the difference of the two eigenvalues enters, so every entry
    oscillates at the single frequency 3J/2 and the matrix is periodic with
    period 4*pi/(3J).  Layout: [[A, A, B], [A, A, B], [B*, B*, C]].
    """
    _require_nonzero_coupling(j)
    a1, a2 = HOMOGENEOUS_SPECTRUM.eigvals
    theta = (a2 - a1) * j * t
    diag_a = 0.5 * (1.0 / (9 * a2 * a2) + 1.0 / (9 * a1 * a1)
                    - 2.0 * np.cos(theta) / (9 * a1 * a2))
    coh_b = 0.5 * (1.0 / (9 * a2 * a2) - 2.0 / (9 * a1 * a1)
                   + 2.0 * np.exp(-1j * theta) / (9 * a1 * a2)
                   - np.exp(1j * theta) / (9 * a1 * a2))
    diag_c = 0.5 * (1.0 / (9 * a2 * a2) + 4.0 / (9 * a1 * a1)
                    + 4.0 * np.cos(theta) / (9 * a1 * a2))
    matrix = np.array([
        [diag_a, diag_a, coh_b],
        [diag_a, diag_a, coh_b],
        [np.conj(coh_b), np.conj(coh_b), diag_c],
    ])
    return SystemDensityMatrix(matrix)
