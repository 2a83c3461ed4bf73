"""Entanglement and information measures on the sector density matrices.

Entropies are in bits (base-2 logarithms).  Pair concurrences exploit the
sector structure: every reduced pair matrix is an X-state with an empty
down-down population, for which the spin-flip spectrum has a closed form
and the concurrence collapses to twice the single coherence magnitude.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (PairDensityMatrix, PairLabel, SystemDensityMatrix,
                   ValidationError, as_matrix, reduce_pair, reduce_single)

ENTROPY_CLAMP = 1e-12
NEGATIVE_EIGENVALUE_LIMIT = 1e-9
SECTOR_SHAPE_TOL = 1e-12


class UnsupportedShapeError(ValueError):
    """The pair matrix has down-down population, outside the sector shape."""


@dataclass(frozen=True)
class Probabilities:
    """Projection probabilities onto the three sector basis states."""

    p_a: float
    p_b: float
    p_c: float

    def __iter__(self):
        yield from (self.p_a, self.p_b, self.p_c)


@dataclass(frozen=True, eq=False)
class MeasureBreakdown:
    """Everything the pair measures are built from, for one qubit pair."""

    pair: PairLabel
    pair_eigenvalues: np.ndarray      # descending, sum 1
    wootters_values: np.ndarray       # descending spin-flip singular values
    entropy_pair: float
    entropy_left: float
    entropy_right: float
    mutual_information: float
    concurrence: float


def von_neumann_entropy(rho) -> float:
    """-sum p log2 p over the eigenvalues of a density matrix, in bits.

    Eigenvalues inside the round-off window [-1e-12, 0) are clamped to zero;
    anything below -1e-9 means the input is not a state.
    """
    m = as_matrix(rho)
    eigs = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    low = float(eigs[0])
    if low < -NEGATIVE_EIGENVALUE_LIMIT:
        raise ValidationError(
            f"not a density matrix: eigenvalue {low:.3e} < -{NEGATIVE_EIGENVALUE_LIMIT:.1e}")
    p = np.clip(eigs, 0.0, None)
    p = p[p > 0.0]
    return float(-(p * np.log2(p)).sum()) if p.size else 0.0


def probabilities(rho_s: SystemDensityMatrix) -> Probabilities:
    """Diagonal of the sector matrix: P_x = <x|rho|x>."""
    return Probabilities(rho_s.population("a"), rho_s.population("b"), rho_s.population("c"))


def mutual_information(rho_s: SystemDensityMatrix, pair: PairLabel | str) -> float:
    """S(x) + S(y) - S(x, y) for the given qubit pair."""
    pair = PairLabel(pair)
    s_left = von_neumann_entropy(reduce_single(rho_s, pair.first))
    s_right = von_neumann_entropy(reduce_single(rho_s, pair.second))
    s_pair = von_neumann_entropy(reduce_pair(rho_s, pair))
    return s_left + s_right - s_pair


def _sector_blocks(rho_pair: PairDensityMatrix):
    """Populations (uu, ud, du, dd) and the ud/du coherence, checking the shape."""
    m = rho_pair.matrix
    dd = float(m[3, 3].real)
    if dd > SECTOR_SHAPE_TOL:
        raise UnsupportedShapeError(
            f"pair ({rho_pair.pair.value}) has down-down population {dd:.3e}; "
            "only one-down-spin-sector states are supported")
    return float(m[0, 0].real), float(m[1, 1].real), float(m[2, 2].real), complex(m[1, 2])


def wootters_values(rho_pair: PairDensityMatrix) -> np.ndarray:
    """Square roots of the eigenvalues of rho * rho-tilde, descending.

    For the sector shape, the spin-flipped product rho*rho-tilde is nonzero
    only on the middle (ud, du) block, whose singular values are
    sqrt(p_ud * p_du) +/- |coherence|; the other two values vanish with the
    empty down-down corner.
    """
    _, p_ud, p_du, coh = _sector_blocks(rho_pair)
    geo = np.sqrt(max(p_ud, 0.0) * max(p_du, 0.0))
    lam = np.array([geo + abs(coh), abs(geo - abs(coh)), 0.0, 0.0])
    return np.sort(lam)[::-1]


def concurrence(rho_pair: PairDensityMatrix) -> float:
    """Wootters concurrence max(0, lam1 - lam2 - lam3 - lam4)."""
    lam = wootters_values(rho_pair)
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def pair_eigenvalues(rho_pair: PairDensityMatrix) -> np.ndarray:
    """Eigenvalues of the pair matrix, descending, by 2x2 block diagonalization."""
    p_uu, p_ud, p_du, coh = _sector_blocks(rho_pair)
    mean = 0.5 * (p_ud + p_du)
    split = np.hypot(0.5 * (p_ud - p_du), abs(coh))
    gamma = np.array([mean + split, mean - split, p_uu, 0.0])
    return np.sort(gamma)[::-1]


def pair_measures(rho_s: SystemDensityMatrix, pair: PairLabel | str) -> MeasureBreakdown:
    """Full measure breakdown for one pair of one system state."""
    pair = PairLabel(pair)
    rho_pair = reduce_pair(rho_s, pair)
    s_left = von_neumann_entropy(reduce_single(rho_s, pair.first))
    s_right = von_neumann_entropy(reduce_single(rho_s, pair.second))
    s_pair = von_neumann_entropy(rho_pair)
    lam = wootters_values(rho_pair)
    return MeasureBreakdown(
        pair=pair,
        pair_eigenvalues=pair_eigenvalues(rho_pair),
        wootters_values=lam,
        entropy_pair=s_pair,
        entropy_left=s_left,
        entropy_right=s_right,
        mutual_information=s_left + s_right - s_pair,
        concurrence=max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3])),
    )
