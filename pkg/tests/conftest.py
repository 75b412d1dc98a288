"""Shared fixtures for the logos test suite."""

import numpy as np
import pytest

from logos.core.hilbert import StateVector, computational_basis
from logos.core.powergraph import PowerGraph, graph_from_bases
from logos.io.fixtures import Fixture, load_fixture, load_state


@pytest.fixture
def stern_gerlach() -> Fixture:
    return load_fixture("stern-gerlach")


@pytest.fixture
def up_x():
    rho, _ = load_state("up-x")
    return rho


@pytest.fixture
def two_contexts() -> Fixture:
    return load_fixture("two-contexts")


@pytest.fixture
def cabello() -> Fixture:
    return load_fixture("cabello-18")


@pytest.fixture
def peres() -> Fixture:
    return load_fixture("peres-33")


@pytest.fixture
def chained_d3() -> PowerGraph:
    """Three d=3 bases sharing one ray pairwise: 7 nodes."""
    s = 1 / np.sqrt(2)
    return graph_from_bases([
        computational_basis(3),
        [StateVector([1, 0, 0]), StateVector([0, s, s]), StateVector([0, s, -s])],
        [StateVector([s, s, 0]), StateVector([s, -s, 0]), StateVector([0, 0, 1])],
    ])
