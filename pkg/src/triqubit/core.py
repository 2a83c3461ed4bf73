"""Basis conventions, state containers, and partial traces for three qubits.

Everything dynamical in this package lives in the one-down-spin sector of
three spin-1/2 qubits, spanned by the product states

    |a> = |down,up,up>,   |b> = |up,down,up>,   |c> = |up,up,down>,

in that fixed order.  Qubit ``c`` is the central one, coupled to both
others.  The containers below hold sector states and the density matrices
obtained from them; the partial traces return the two-qubit and one-qubit
reductions in the standard (up/down) product bases.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-12


class ValidationError(ValueError):
    """A matrix or state fails its structural invariants."""


class QubitLabel(str, enum.Enum):
    A = "a"
    B = "b"
    C = "c"

    @property
    def index(self) -> int:
        """Position in the fixed sector ordering (a, b, c)."""
        return "abc".index(self.value)


class PairLabel(str, enum.Enum):
    AB = "ab"
    AC = "ac"
    BC = "bc"

    @classmethod
    def of(cls, q1: QubitLabel | str, q2: QubitLabel | str) -> "PairLabel":
        """Canonical label for an unordered pair of distinct qubits."""
        a, b = QubitLabel(q1), QubitLabel(q2)
        if a is b:
            raise ValueError(f"a pair needs two distinct qubits, got {a.value!r} twice")
        return cls("".join(sorted(a.value + b.value)))

    @property
    def first(self) -> QubitLabel:
        return QubitLabel(self.value[0])

    @property
    def second(self) -> QubitLabel:
        return QubitLabel(self.value[1])

    @property
    def traced_out(self) -> QubitLabel:
        """The qubit that is summed over when reducing to this pair."""
        return QubitLabel(next(q for q in "abc" if q not in self.value))


def _check_hermitian_unit_trace(m: np.ndarray, tol: float, what: str) -> None:
    herm = float(np.abs(m - m.conj().T).max())
    if herm > tol:
        raise ValidationError(f"{what} is not Hermitian: defect {herm:.3e} > {tol:.1e}")
    tr = float(abs(m.trace() - 1.0))
    if tr > tol:
        raise ValidationError(f"{what} has trace defect {tr:.3e} > {tol:.1e}")


def _check_psd(m: np.ndarray, tol: float, what: str) -> None:
    low = float(np.linalg.eigvalsh(m)[0])
    if low < -tol:
        raise ValidationError(f"{what} has negative eigenvalue {low:.3e} < -{tol:.1e}")


def _freeze(m: np.ndarray) -> np.ndarray:
    out = np.array(m, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class SubspaceState:
    """Pure state in the one-down-spin sector: amplitudes on |a>, |b>, |c>."""

    c_a: complex
    c_b: complex
    c_c: complex

    def __post_init__(self):
        norm = abs(self.c_a) ** 2 + abs(self.c_b) ** 2 + abs(self.c_c) ** 2
        if abs(norm - 1.0) > DEFAULT_TOL:
            raise ValidationError(f"state norm^2 = {norm!r} is not 1 within {DEFAULT_TOL:.1e}")

    @classmethod
    def from_vector(cls, v) -> "SubspaceState":
        v = np.asarray(v, dtype=complex)
        if v.shape != (3,):
            raise ValidationError(f"expected 3 amplitudes, got shape {v.shape}")
        return cls(complex(v[0]), complex(v[1]), complex(v[2]))

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.c_a, self.c_b, self.c_c], dtype=complex)

    def amplitude(self, q: QubitLabel | str) -> complex:
        return self.vector[QubitLabel(q).index]

    def overlap(self, other: "SubspaceState") -> complex:
        """Inner product <self|other>."""
        return complex(np.vdot(self.vector, other.vector))

    def density_matrix(self) -> "SystemDensityMatrix":
        v = self.vector
        return SystemDensityMatrix(np.outer(v, v.conj()))


def initial_state() -> SubspaceState:
    """Bell pair on (a, b) with qubit c up: amplitudes (1, 1, 0)/sqrt(2)."""
    r = 1.0 / math.sqrt(2.0)
    return SubspaceState(r, r, 0.0)


class SectorCoefficients:
    """The six doubled matrix entries that parameterize a sector state.

    The convention throughout is that the sector density matrix stores half
    of each coefficient: diagonal (aa/2, bb/2, cc/2) and upper off-diagonals
    (ab/2, ac/2, bc/2).  The doubled values are what the closed-form measure
    expressions are written in; aa + bb + cc = 2 for a unit-trace matrix.
    """

    __slots__ = ("aa", "bb", "cc", "ab", "ac", "bc")

    def __init__(self, aa: float, bb: float, cc: float, ab: complex, ac: complex, bc: complex):
        self.aa, self.bb, self.cc = aa, bb, cc
        self.ab, self.ac, self.bc = ab, ac, bc

    def __repr__(self):
        return (f"SectorCoefficients(aa={self.aa:.6g}, bb={self.bb:.6g}, cc={self.cc:.6g}, "
                f"ab={self.ab:.6g}, ac={self.ac:.6g}, bc={self.bc:.6g})")


@dataclass(frozen=True, eq=False)
class SystemDensityMatrix:
    """3x3 density matrix of the three-qubit system over the sector basis (a, b, c)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (3, 3):
            raise ValidationError(f"system density matrix must be 3x3, got {m.shape}")
        _check_hermitian_unit_trace(m, DEFAULT_TOL, "system density matrix")
        _check_psd(m, DEFAULT_TOL, "system density matrix")
        object.__setattr__(self, "matrix", _freeze(m))

    def population(self, q: QubitLabel | str) -> float:
        """Probability of the basis state with qubit q flipped down."""
        i = QubitLabel(q).index
        return float(self.matrix[i, i].real)

    def coherence(self, q1: QubitLabel | str, q2: QubitLabel | str) -> complex:
        i, j = QubitLabel(q1).index, QubitLabel(q2).index
        return complex(self.matrix[i, j])

    def doubled_coefficients(self) -> SectorCoefficients:
        m = self.matrix
        return SectorCoefficients(
            aa=2.0 * m[0, 0].real, bb=2.0 * m[1, 1].real, cc=2.0 * m[2, 2].real,
            ab=2.0 * complex(m[0, 1]), ac=2.0 * complex(m[0, 2]), bc=2.0 * complex(m[1, 2]),
        )


@dataclass(frozen=True, eq=False)
class PairDensityMatrix:
    """4x4 reduced density matrix of a qubit pair, basis (uu, ud, du, dd).

    The first arrow refers to the first qubit of the pair label.  For states
    reduced from the one-down-spin sector the (dd, dd) entry is zero; it is
    kept in the matrix so that generic two-qubit code applies unchanged.
    """

    matrix: np.ndarray
    pair: PairLabel

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValidationError(f"pair density matrix must be 4x4, got {m.shape}")
        _check_hermitian_unit_trace(m, DEFAULT_TOL, f"pair ({self.pair.value}) density matrix")
        _check_psd(m, DEFAULT_TOL, f"pair ({self.pair.value}) density matrix")
        object.__setattr__(self, "matrix", _freeze(m))
        object.__setattr__(self, "pair", PairLabel(self.pair))


@dataclass(frozen=True, eq=False)
class SingleDensityMatrix:
    """2x2 reduced density matrix of one qubit, basis (up, down).

    Off-diagonals vanish for every state in scope: the dynamics conserves
    total magnetization, so single-qubit coherences never develop.
    """

    matrix: np.ndarray
    qubit: QubitLabel

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValidationError(f"single-qubit density matrix must be 2x2, got {m.shape}")
        _check_hermitian_unit_trace(m, DEFAULT_TOL, f"qubit {self.qubit.value} density matrix")
        _check_psd(m, DEFAULT_TOL, f"qubit {self.qubit.value} density matrix")
        object.__setattr__(self, "matrix", _freeze(m))
        object.__setattr__(self, "qubit", QubitLabel(self.qubit))


def _pair_matrix_ordered(m: np.ndarray, first: int, second: int) -> np.ndarray:
    """4x4 pair reduction of a sector matrix with an explicit qubit order.

    Basis index is 2*[first down] + [second down].  A down spin on the pair
    singles out the matching sector basis state; both up means the down spin
    sits on the traced-out qubit.
    """
    third = 3 - first - second
    out = np.zeros((4, 4), dtype=complex)
    out[0, 0] = m[third, third]
    out[1, 1] = m[second, second]
    out[2, 2] = m[first, first]
    out[1, 2] = m[second, first]
    out[2, 1] = m[first, second]
    return out


def _sector_matrix(rho) -> np.ndarray:
    """Validated 3x3 matrix of a sector state (container or raw array)."""
    m = as_matrix(rho)
    if m.shape != (3, 3):
        raise ValidationError(f"expected a 3x3 sector matrix, got {m.shape}")
    _check_hermitian_unit_trace(m, DEFAULT_TOL, "system density matrix")
    return m


def reduce_pair(rho: SystemDensityMatrix, pair: PairLabel | str) -> PairDensityMatrix:
    """Trace out the third qubit, keeping the given pair."""
    pair = PairLabel(pair)
    m = _sector_matrix(rho)
    out = _pair_matrix_ordered(m, pair.first.index, pair.second.index)
    return PairDensityMatrix(out, pair)


def reduce_single(rho: SystemDensityMatrix, q: QubitLabel | str) -> SingleDensityMatrix:
    """Trace out two qubits, keeping qubit q."""
    q = QubitLabel(q)
    m = _sector_matrix(rho)
    down = float(m[q.index, q.index].real)
    return SingleDensityMatrix(np.diag([1.0 - down, down]).astype(complex), q)


def swap_pair_qubits(matrix: np.ndarray) -> np.ndarray:
    """Exchange the two qubits of a 4x4 two-qubit matrix (ud <-> du)."""
    perm = [0, 2, 1, 3]
    return np.asarray(matrix)[np.ix_(perm, perm)]


@dataclass(frozen=True)
class ValidationReport:
    """Structural defects of a candidate density matrix, against a tolerance."""

    dimension: int
    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float
    tol: float

    @property
    def passed(self) -> bool:
        return (self.hermiticity_defect <= self.tol
                and self.trace_defect <= self.tol
                and self.min_eigenvalue >= -self.tol)

    def __str__(self):
        verdict = "pass" if self.passed else "FAIL"
        return (f"{self.dimension}x{self.dimension} density matrix {verdict} at tol {self.tol:.1e}: "
                f"hermiticity {self.hermiticity_defect:.3e}, trace {self.trace_defect:.3e}, "
                f"min eigenvalue {self.min_eigenvalue:.3e}")


def as_matrix(rho) -> np.ndarray:
    """Raw complex matrix of an array or any of the density-matrix containers."""
    m = getattr(rho, "matrix", rho)
    return np.asarray(m, dtype=complex)


def validate_density(rho, tol: float = DEFAULT_TOL) -> ValidationReport:
    """Report Hermiticity, trace, and positivity defects; never raises on bad values."""
    m = as_matrix(rho)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (2, 3, 4):
        raise ValidationError(f"expected a square matrix of dimension 2, 3 or 4, got {m.shape}")
    herm = float(np.abs(m - m.conj().T).max())
    trace = float(abs(m.trace() - 1.0))
    low = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0])
    return ValidationReport(m.shape[0], herm, trace, low, tol)
