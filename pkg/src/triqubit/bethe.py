"""Exact spectrum of the unequal-coupling three-qubit Hamiltonian.

The model is the N=3, zero-field central spin model restricted to one down
spin.  Writing the couplings as pole positions eps_a = -1/A_a, eps_b = -1/A_b
(with eps_c = 0 for the central qubit), every eigenstate in the sector is
labelled by a spectral parameter nu solving

    1/(nu - eps_a) + 1/(nu - eps_b) + 1/nu = 0,

which clears to the quadratic 3 nu^2 - 2 (eps_a + eps_b) nu + eps_a eps_b = 0
with two real roots; the third eigenstate is the nu -> infinity limit, the
uniform superposition of |a>, |b>, |c>.  Eigenvector components are
proportional to 1/(nu - eps_j) and the energy is (A_a + A_b)/2 + 1/nu.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ValidationError

RESIDUAL_TOL = 1e-10


class DegenerateCouplingError(ValueError):
    """Equal couplings make the spectral-parameter roots collide with a pole."""


class PoleError(ValueError):
    """The spectral-parameter equation was evaluated at one of its poles."""


@dataclass(frozen=True)
class CouplingConfig:
    """Exchange strengths of the a-c and b-c bonds (inverse-time units)."""

    coupling_a: float
    coupling_b: float

    def __post_init__(self):
        for name, val in (("coupling_a", self.coupling_a), ("coupling_b", self.coupling_b)):
            if not (math.isfinite(val) and val > 0.0):
                raise ValidationError(f"{name} must be finite and positive, got {val!r}")

    @property
    def eps_a(self) -> float:
        return -1.0 / self.coupling_a

    @property
    def eps_b(self) -> float:
        return -1.0 / self.coupling_b

    @property
    def mean_coupling(self) -> float:
        return 0.5 * (self.coupling_a + self.coupling_b)

    def require_inhomogeneous(self) -> None:
        if self.coupling_a == self.coupling_b:
            raise DegenerateCouplingError(
                f"coupling_a == coupling_b == {self.coupling_a}: the spectral-parameter "
                "solver needs unequal couplings; use the homogeneous engine with "
                f"J = {2 * self.coupling_a} instead")


@dataclass(frozen=True)
class BetheRoot:
    """One spectral parameter; the infinite root is carried as IEEE infinity."""

    value: float

    @classmethod
    def finite(cls, value: float) -> "BetheRoot":
        if not math.isfinite(value):
            raise ValueError(f"finite root expected, got {value!r}")
        return cls(float(value))

    @classmethod
    def infinite(cls) -> "BetheRoot":
        return cls(math.inf)

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)


@dataclass(frozen=True, eq=False)
class EigenMode:
    """One sector eigenstate: root, energy, and unit amplitude vector on (a, b, c)."""

    root: BetheRoot
    energy: float
    amplitudes: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.amplitudes, dtype=float)
        if w.shape != (3,):
            raise ValidationError(f"mode amplitudes must be a 3-vector, got {w.shape}")
        w = w.copy()
        w.setflags(write=False)
        object.__setattr__(self, "amplitudes", w)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """All three eigenmodes of one coupling configuration."""

    modes: tuple[EigenMode, EigenMode, EigenMode]

    @property
    def energies(self) -> np.ndarray:
        return np.array([m.energy for m in self.modes])

    @property
    def amplitude_matrix(self) -> np.ndarray:
        """Rows are mode amplitude vectors; an orthogonal 3x3 matrix."""
        return np.array([m.amplitudes for m in self.modes])

    def frequency(self, k: int, kp: int) -> float:
        """Transition frequency between modes k and kp."""
        return self.modes[k].energy - self.modes[kp].energy

    @property
    def frequency_matrix(self) -> np.ndarray:
        e = self.energies
        return e[:, None] - e[None, :]


def bethe_residual(nu: float, cfg: CouplingConfig) -> float:
    """Left-hand side of the spectral-parameter equation; zero at a root."""
    poles = (cfg.eps_a, cfg.eps_b, 0.0)
    if nu in poles:
        raise PoleError(f"nu = {nu!r} sits on a pole of the spectral-parameter equation")
    return 1.0 / (nu - cfg.eps_a) + 1.0 / (nu - cfg.eps_b) + 1.0 / nu


def solve_bethe_roots(cfg: CouplingConfig) -> tuple[BetheRoot, BetheRoot, BetheRoot]:
    """The two finite quadratic roots ("+" branch first) and the infinite root.

    The discriminant eps_a^2 + eps_b^2 - eps_a*eps_b = (eps_a - eps_b/2)^2
    + 3 eps_b^2/4 is strictly positive for distinct nonzero poles, so both
    finite roots are always real.
    """
    cfg.require_inhomogeneous()
    ea, eb = cfg.eps_a, cfg.eps_b
    half_width = math.sqrt(ea * ea + eb * eb - ea * eb)
    plus = (ea + eb + half_width) / 3.0
    minus = (ea + eb - half_width) / 3.0
    return BetheRoot.finite(plus), BetheRoot.finite(minus), BetheRoot.infinite()


def _finite_mode(root: BetheRoot, cfg: CouplingConfig) -> EigenMode:
    nu = root.value
    w = np.array([1.0 / (nu - cfg.eps_a), 1.0 / (nu - cfg.eps_b), 1.0 / nu])
    w /= np.linalg.norm(w)
    return EigenMode(root, cfg.mean_coupling + 1.0 / nu, w)


def spectral_decomposition(cfg: CouplingConfig) -> SpectralDecomposition:
    """Solve the sector spectrum: roots, energies, and orthonormal amplitudes.

    The infinite root is handled by its analytic limit (uniform amplitudes,
    energy (A_a + A_b)/2) rather than a large stand-in value, which would
    cancel catastrophically in 1/(nu - eps_j).
    """
    plus, minus, inf = solve_bethe_roots(cfg)
    uniform = np.full(3, 1.0 / math.sqrt(3.0))
    modes = (
        _finite_mode(plus, cfg),
        _finite_mode(minus, cfg),
        EigenMode(inf, cfg.mean_coupling, uniform),
    )
    return SpectralDecomposition(modes)
