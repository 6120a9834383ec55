"""Seeded random instances for the invariant suites."""

from __future__ import annotations

import numpy as np

from ..core import Observable, State, make_state
from ..errors import BadParams
from ..multi import WeightVector


def _ginibre(rng: np.random.Generator, d: int) -> np.ndarray:
    return rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))


def random_observable(rng: np.random.Generator, d: int) -> Observable:
    g = _ginibre(rng, d)
    return Observable((g + g.conj().T) / 2)


def random_ket(rng: np.random.Generator, d: int) -> State:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return make_state(ket=v / np.linalg.norm(v))


def random_density_matrix(rng: np.random.Generator, d: int) -> State:
    """Full-rank (almost surely) mixed state ``G G^dagger / Tr``."""
    g = _ginibre(rng, d)
    rho = g @ g.conj().T
    return make_state(rho=rho / np.trace(rho).real)


def random_complex(rng: np.random.Generator, size=None):
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def random_instance(dim: int, n_obs: int, seed: int) -> tuple[State, list[Observable], WeightVector]:
    """Pure state, ``n_obs`` Hermitian observables and complex weights.

    A pure function of ``(dim, n_obs, seed)``.
    """
    if dim < 2 or n_obs < 2:
        raise BadParams(f"need dim >= 2 and n_obs >= 2, got {dim}, {n_obs}")
    rng = np.random.default_rng(seed)
    obs = [random_observable(rng, dim) for _ in range(n_obs)]
    state = random_ket(rng, dim)
    weights = WeightVector(tuple(random_complex(rng, n_obs)))
    return state, obs, weights
