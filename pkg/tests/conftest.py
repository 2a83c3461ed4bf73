"""Shared helpers: random states in the one-down-spin sector."""

import numpy as np
import pytest

from triqubit import SubspaceState, SystemDensityMatrix


def random_sector_state(rng: np.random.Generator) -> SubspaceState:
    v = rng.normal(size=3) + 1j * rng.normal(size=3)
    return SubspaceState.from_vector(v / np.linalg.norm(v))


def random_sector_density(rng: np.random.Generator, mixed: bool = True) -> SystemDensityMatrix:
    """Random valid sector density matrix; a convex mixture unless mixed=False."""
    n = int(rng.integers(1, 4)) if mixed else 1
    weights = rng.dirichlet(np.ones(n))
    m = np.zeros((3, 3), dtype=complex)
    for w in weights:
        v = random_sector_state(rng).vector
        m += w * np.outer(v, v.conj())
    return SystemDensityMatrix(m)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240811)
