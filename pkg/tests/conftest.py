import numpy as np
import pytest


def random_density(seed: int, dim: int = 4) -> np.ndarray:
    """Random full-rank density matrix via A A+/tr."""
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_psd(seed: int, dim: int = 4) -> np.ndarray:
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return a @ a.conj().T


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
