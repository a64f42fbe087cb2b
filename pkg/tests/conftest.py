"""
Pytest Configuration and Fixtures

Provides common fixtures for all tests including:
- Seeded random number generator
- Random density matrix / unitary factories
- Named states as density matrices
- Settings with small grids for fast CLI runs
"""

from typing import Callable

import numpy as np
import pytest
import structlog

from entanglement_filter.config import Settings
from entanglement_filter.core.models.quantum import DensityMatrix
from entanglement_filter.core.states import density, ghz3, w3, wwbar3


@pytest.fixture(autouse=True)
def reset_structlog():
    """CLI runs bind the log stream of the capturing test; drop it afterwards"""
    yield
    structlog.reset_defaults()


@pytest.fixture
def rng() -> np.random.Generator:
    """Deterministic generator so property tests are reproducible"""
    return np.random.default_rng(20240611)


@pytest.fixture
def random_unitary(rng) -> Callable[[int], np.ndarray]:
    """Haar-ish random unitary from the QR of a complex Gaussian matrix"""

    def factory(dim: int) -> np.ndarray:
        z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        q, r = np.linalg.qr(z)
        phases = np.diag(r) / np.abs(np.diag(r))
        return q * phases

    return factory


@pytest.fixture
def random_density(rng) -> Callable[[int], DensityMatrix]:
    """Random full-rank mixed state on n qubits: G G† / Tr(G G†)"""

    def factory(n_qubits: int) -> DensityMatrix:
        dim = 1 << n_qubits
        g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        m = g @ np.conj(g).T
        m = m / np.trace(m).real
        return DensityMatrix(n_qubits=n_qubits, mat=(m + np.conj(m).T) / 2.0)

    return factory


@pytest.fixture
def rho_w() -> DensityMatrix:
    return density(w3())


@pytest.fixture
def rho_ghz() -> DensityMatrix:
    return density(ghz3())


@pytest.fixture
def rho_wwbar() -> DensityMatrix:
    return density(wwbar3())


@pytest.fixture
def fast_settings() -> Settings:
    """Small grids and a coarse ESD scan"""
    return Settings(
        k_points=5,
        gamma_t_points=5,
        gamma_t_max=2.0,
        k_family=[0.0, 0.5, 1.0],
        esd_tolerance=1e-4,
        _env_file=None,
    )
