"""Shared fixtures for the helmbem test suite."""

import numpy as np
import pytest

from helmbem import builtin_curve, sample_grids


@pytest.fixture
def circle4():
    """Unit circle sampled with four nodes and the default companion shift."""
    return sample_grids([builtin_curve("circle", 1.0)], [4])


@pytest.fixture
def make_circle():
    """Factory for unit-circle grids: make_circle(N, eps=1/6, radius=1.0)."""

    def _make(N, eps=1.0 / 6.0, radius=1.0):
        return sample_grids([builtin_curve("circle", radius)], [N], eps=eps)

    return _make


@pytest.fixture
def make_ellipse():
    """Factory for the shifted 2:1 ellipse used by the convergence studies."""

    def _make(N, eps=1.0 / 6.0):
        return sample_grids([builtin_curve("paper_ellipse")], [N], eps=eps)

    return _make


@pytest.fixture
def rng():
    """Deterministic generator so stochastic tests are reproducible."""
    return np.random.default_rng(20260816)
