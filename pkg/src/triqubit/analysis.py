"""Special-time analysis: equal-entanglement times, revivals, lab units.

The equal-coupling dynamics passes through W-state configurations at the
times (+/- (2/3) arccos(1/4) + (4/3) n pi) / J; the unequal-coupling
dynamics never reaches an exact triple point but shows near-revivals of the
initial state, located here by scanning the probability of the
central-qubit-flipped basis state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import dynamics, measures
from .bethe import CouplingConfig, spectral_decomposition

EQUAL_TIME_PHASE = 2.0 / 3.0 * math.acos(0.25)
EQUAL_TIME_PERIOD = 4.0 * math.pi / 3.0
REFINE_TOL = 1e-6
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class RydbergParams:
    """Dipolar exchange parameters: C3 in MHz*um^3 and spacing R in um.

    Unit convention: 1 MHz * 1 us = 1 dimensionless phase unit, so a
    dimensionless time tau converts to tau / J microseconds.
    """

    c3: float
    r: float

    def __post_init__(self):
        if not (self.c3 > 0 and self.r > 0):
            raise ValueError(f"C3 and R must be positive, got C3={self.c3}, R={self.r}")

    @property
    def exchange_mhz(self) -> float:
        return self.c3 / self.r ** 3


@dataclass(frozen=True)
class RevivalReport:
    """Location and quality of a near-revival of the initial state."""

    t_star: float
    prob_c: float
    prob_gap_ab: float
    fidelity: float


def equal_entanglement_times(j: float, n_max: int) -> list[float]:
    """All positive equal-entanglement times with period index up to n_max.

    Both sign branches are generated for n = 0 .. n_max; non-positive
    representatives (the minus branch at n = 0) drop out, reappearing one
    period later as the folded positive time.
    """
    if j == 0.0:
        raise ValueError("J = 0 has no entanglement dynamics")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    times = set()
    for n in range(n_max + 1):
        for branch in (EQUAL_TIME_PHASE, -EQUAL_TIME_PHASE):
            t = branch + EQUAL_TIME_PERIOD * n
            if t > 0.0:
                times.add(round(t, 15))
    return sorted(t / abs(j) for t in times)


def _golden_min(f, a: float, b: float, xtol: float) -> float:
    """Golden-section minimum of a unimodal f on [a, b], to absolute xtol."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > xtol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def find_revival(cfg: CouplingConfig, window: tuple[float, float],
                 grid_points: int = 3001) -> RevivalReport:
    """Locate the minimum of P_c inside a time window.

    The grid argmin is refined by golden-section search between its
    neighbours.  The report also carries the return fidelity, which stays
    below one for unequal couplings: qubit c disentangles at the revival
    but the a/b imbalance never fully undoes itself.
    """
    t_lo, t_hi = float(window[0]), float(window[1])
    if not t_lo < t_hi:
        raise ValueError(f"empty window [{t_lo}, {t_hi}]")
    if grid_points < 100:
        raise ValueError(f"grid_points must be >= 100, got {grid_points}")
    dec = spectral_decomposition(cfg)

    def prob_c(t: float) -> float:
        return float(abs(dynamics.inhomogeneous_amplitudes(dec, t)[2, 0]) ** 2)

    grid = np.linspace(t_lo, t_hi, grid_points)
    probs = np.abs(dynamics.inhomogeneous_amplitudes(dec, grid)[2, :]) ** 2
    best = int(np.argmin(probs))
    t_star = float(grid[best])
    if 0 < best < grid_points - 1:
        refined = _golden_min(prob_c, float(grid[best - 1]), float(grid[best + 1]), REFINE_TOL)
        if prob_c(refined) <= probs[best]:
            t_star = refined
    amps = dynamics.inhomogeneous_amplitudes(dec, t_star)[:, 0]
    p = np.abs(amps) ** 2
    fidelity = float(abs((amps[0] + amps[1]) / np.sqrt(2.0)) ** 2)
    return RevivalReport(t_star=t_star, prob_c=float(p[2]),
                         prob_gap_ab=float(abs(p[0] - p[1])), fidelity=fidelity)


def near_equal_spread(cfg: CouplingConfig, t: float) -> float:
    """Spread (max - min) of the three pairwise mutual informations at time t."""
    rho = dynamics.density_inhomogeneous(cfg, t)
    values = [measures.mutual_information(rho, pair) for pair in ("ab", "ac", "bc")]
    return float(max(values) - min(values))


def rydberg_time(params: RydbergParams, tau: float) -> float:
    """Convert a dimensionless time to microseconds via J = C3 / R^3."""
    if tau < 0:
        raise ValueError(f"tau must be >= 0, got {tau}")
    return tau / params.exchange_mhz
