"""Brute-force ground truth in the full eight-dimensional Hilbert space.

The Hamiltonian is assembled from elementary spin-1/2 operators by tensor
products, evolved by dense eigendecomposition, and reduced by generic index
contraction.  Nothing here touches the spectral solver or the closed-form
engines, so agreement between the two routes certifies the analytic
formulas rather than restating them.

Bit ordering is fixed: basis index = 4*[a is down] + 2*[b is down] +
[c is down], i.e. qubit a is the most significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .bethe import CouplingConfig
from .core import (PairDensityMatrix, PairLabel, QubitLabel,
                   SingleDensityMatrix, SubspaceState, SystemDensityMatrix,
                   ValidationError)

SECTOR_LEAKAGE_TOL = 1e-12

# Sector basis states |a>, |b>, |c> as full-space indices.
SECTOR_INDICES = (4, 2, 1)

_LOWER = np.array([[0.0, 0.0], [1.0, 0.0]])     # s^-, basis (up, down)
_RAISE = _LOWER.T
_SZ = np.diag([0.5, -0.5])
_ID = np.eye(2)


class SectorLeakageError(ValueError):
    """The full state carries weight outside the one-down-spin sector."""


def _embed(ops: dict[str, np.ndarray]) -> np.ndarray:
    mats = [ops.get(q, _ID) for q in "abc"]
    return np.kron(np.kron(mats[0], mats[1]), mats[2])


def _exchange(q1: str, q2: str) -> np.ndarray:
    """Heisenberg bond s_q1 . s_q2 on the full space."""
    flip = 0.5 * (_embed({q1: _RAISE, q2: _LOWER}) + _embed({q1: _LOWER, q2: _RAISE}))
    return flip + _embed({q1: _SZ, q2: _SZ})


@dataclass(frozen=True, eq=False)
class FullState:
    """Eight complex amplitudes over the (a, b, c) tensor basis."""

    amplitudes: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.amplitudes, dtype=complex)
        if v.shape != (8,):
            raise ValidationError(f"full state needs 8 amplitudes, got shape {v.shape}")
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > 1e-12:
            raise ValidationError(f"full state norm {norm!r} is not 1 within 1e-12")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "amplitudes", v)

    def sector_weight(self) -> float:
        return float(sum(abs(self.amplitudes[i]) ** 2 for i in SECTOR_INDICES))


@dataclass(frozen=True, eq=False)
class FullHamiltonian:
    """8x8 real symmetric Hamiltonian matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (8, 8):
            raise ValidationError(f"full Hamiltonian must be 8x8, got {m.shape}")
        if float(np.abs(m - m.T).max()) > 1e-12:
            raise ValidationError("full Hamiltonian is not symmetric")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @cached_property
    def eigensystem(self) -> tuple[np.ndarray, np.ndarray]:
        """(eigenvalues, orthonormal eigenvector columns); cached per instance."""
        return np.linalg.eigh(self.matrix)

    def sector_block(self) -> np.ndarray:
        """The 3x3 restriction to the one-down-spin sector basis (a, b, c)."""
        idx = np.asarray(SECTOR_INDICES)
        return self.matrix[np.ix_(idx, idx)]


def build_hamiltonian(coupling: CouplingConfig | float) -> FullHamiltonian:
    """Assemble H from spin operators.

    A CouplingConfig builds 2*(A_a s_a.s_c + A_b s_b.s_c); a bare float J
    builds the equal-coupling J*(s_a.s_c + s_b.s_c).
    """
    if isinstance(coupling, CouplingConfig):
        h = 2.0 * (coupling.coupling_a * _exchange("a", "c")
                   + coupling.coupling_b * _exchange("b", "c"))
    else:
        h = float(coupling) * (_exchange("a", "c") + _exchange("b", "c"))
    return FullHamiltonian(h)


def initial_full_state() -> FullState:
    """The Bell-pair-plus-up initial state embedded in the full space."""
    v = np.zeros(8, dtype=complex)
    v[SECTOR_INDICES[0]] = v[SECTOR_INDICES[1]] = 1.0 / np.sqrt(2.0)
    return FullState(v)


def embed_sector_state(state: SubspaceState) -> FullState:
    """Lift a sector state to the full space (zero outside the sector)."""
    v = np.zeros(8, dtype=complex)
    v[list(SECTOR_INDICES)] = state.vector
    return FullState(v)


def evolve_oracle(h: FullHamiltonian, psi0: FullState, t: float) -> FullState:
    """exp(-i H t) |psi0> via the cached eigendecomposition."""
    if t == 0.0:
        return psi0
    energies, vectors = h.eigensystem
    coeffs = vectors.T @ psi0.amplitudes
    return FullState(vectors @ (np.exp(-1j * energies * t) * coeffs))


class OracleReductions(NamedTuple):
    system: SystemDensityMatrix
    pairs: dict[PairLabel, PairDensityMatrix]
    singles: dict[QubitLabel, SingleDensityMatrix]


def oracle_reductions(psi: FullState) -> OracleReductions:
    """All reduced matrices of a sector-supported full state, by contraction.

    The pair and single matrices are genuine partial traces of the full
    8-amplitude tensor, independent of the sector bookkeeping used by the
    analytic route.
    """
    leak = 1.0 - psi.sector_weight()
    if leak > SECTOR_LEAKAGE_TOL:
        raise SectorLeakageError(
            f"state has weight {leak:.3e} outside the one-down-spin sector")
    amps = psi.amplitudes
    idx = np.asarray(SECTOR_INDICES)
    system = SystemDensityMatrix(np.outer(amps[idx], amps[idx].conj()))

    tensor = amps.reshape(2, 2, 2)
    pair_specs = {
        PairLabel.AB: np.einsum("ijk,lmk->ijlm", tensor, tensor.conj()),
        PairLabel.AC: np.einsum("ijk,ljm->iklm", tensor, tensor.conj()),
        PairLabel.BC: np.einsum("ijk,ilm->jklm", tensor, tensor.conj()),
    }
    pairs = {label: PairDensityMatrix(t4.reshape(4, 4), label)
             for label, t4 in pair_specs.items()}

    single_specs = {
        QubitLabel.A: np.einsum("ijk,ljk->il", tensor, tensor.conj()),
        QubitLabel.B: np.einsum("ijk,imk->jm", tensor, tensor.conj()),
        QubitLabel.C: np.einsum("ijk,ijm->km", tensor, tensor.conj()),
    }
    singles = {label: SingleDensityMatrix(m2, label) for label, m2 in single_specs.items()}
    return OracleReductions(system, pairs, singles)


def total_sz() -> np.ndarray:
    """Total magnetization operator, for conservation checks."""
    return _embed({"a": _SZ}) + _embed({"b": _SZ}) + _embed({"c": _SZ})
