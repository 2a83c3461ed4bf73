"""Exact entanglement dynamics of three pairwise-interacting qubits.

A Bell pair on qubits (a, b) next to an up-polarized central qubit c
evolves under Heisenberg exchange with couplings A_a and A_b.  The package
provides the closed-form spectrum and time evolution for both the unequal-
and equal-coupling cases, the pairwise entanglement measures, and an
independent brute-force oracle that certifies every analytic expression.
"""

from .analysis import (RevivalReport, RydbergParams, equal_entanglement_times,
                       find_revival, near_equal_spread, rydberg_time)
from .bethe import (BetheRoot, CouplingConfig, DegenerateCouplingError,
                    EigenMode, PoleError, SpectralDecomposition,
                    bethe_residual, solve_bethe_roots, spectral_decomposition)
from .core import (PairDensityMatrix, PairLabel, QubitLabel,
                   SingleDensityMatrix, SubspaceState, SystemDensityMatrix,
                   ValidationError, ValidationReport, initial_state,
                   reduce_pair, reduce_single, validate_density)
from .dynamics import (HOMOGENEOUS_SPECTRUM, HomogeneousSpectrum,
                       density_homogeneous, density_inhomogeneous,
                       evolve_homogeneous, evolve_inhomogeneous)
from .measures import (MeasureBreakdown, Probabilities, UnsupportedShapeError,
                       concurrence, mutual_information, pair_eigenvalues,
                       pair_measures, probabilities, von_neumann_entropy,
                       wootters_values)
from .oracle import (FullHamiltonian, FullState, SectorLeakageError,
                     build_hamiltonian, embed_sector_state, evolve_oracle,
                     initial_full_state, oracle_reductions)

__version__ = "0.1.0"

__all__ = [
    "BetheRoot", "CouplingConfig", "DegenerateCouplingError", "EigenMode",
    "FullHamiltonian", "FullState", "HOMOGENEOUS_SPECTRUM",
    "HomogeneousSpectrum", "MeasureBreakdown", "PairDensityMatrix",
    "PairLabel", "PoleError", "Probabilities", "QubitLabel", "RevivalReport",
    "RydbergParams", "SectorLeakageError", "SingleDensityMatrix",
    "SpectralDecomposition", "SubspaceState", "SystemDensityMatrix",
    "UnsupportedShapeError", "ValidationError", "ValidationReport",
    "bethe_residual", "build_hamiltonian", "concurrence",
    "density_homogeneous", "density_inhomogeneous", "embed_sector_state",
    "equal_entanglement_times", "evolve_homogeneous", "evolve_inhomogeneous",
    "evolve_oracle", "find_revival", "initial_full_state", "initial_state",
    "mutual_information", "near_equal_spread", "oracle_reductions",
    "pair_eigenvalues", "pair_measures", "probabilities", "reduce_pair",
    "reduce_single", "rydberg_time", "solve_bethe_roots",
    "spectral_decomposition", "validate_density", "von_neumann_entropy",
    "wootters_values",
]
