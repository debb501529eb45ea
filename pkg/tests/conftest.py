"""Fixtures for tests."""

from collections.abc import Iterator
from pathlib import Path

import numpy as np
import pytest

from steerdyn import HOMod, LorentzBath, ScenarioConfig, TimeGrid
from steerdyn.database import Database
from steerdyn.heom import HeomConfig
from steerdyn.runs import RunRecord, simulate

DATA_PATH = Path(__file__).parent / "data"

FIG1_LAMBDAS = (0.0, 0.1, 1.0, 2.0, 3.0)
FIG4_LAMBDAS = (0.0, 0.1, 0.2, 0.3)


@pytest.fixture
def fig1_bath() -> LorentzBath:
    """Fixture for the oscillator-modulated decay bath."""
    return LorentzBath(alpha=0.25, omega_c=7.5, epsilon=1.0)


@pytest.fixture
def fig3_bath() -> LorentzBath:
    """Fixture for the reservoir-modulated decay bath."""
    return LorentzBath(alpha=0.2, omega_c=5.0, epsilon=1.0)


@pytest.fixture
def short_grid() -> TimeGrid:
    """Fixture for a grid over [0, 2]."""
    return TimeGrid(t_start=0.0, t_end=2.0, n_points=201)


@pytest.fixture
def fig1_config() -> ScenarioConfig:
    """Fixture for a scenario with an oscillator at lam = 1."""
    return ScenarioConfig(
        alpha=0.25,
        omega_c=7.5,
        epsilon=1.0,
        modulator=HOMod(g0=5.0, omega0=5.0),
        grid=TimeGrid(t_start=0.0, t_end=2.0, n_points=101),
    )


@pytest.fixture
def small_heom() -> HeomConfig:
    """Fixture for a small hierarchy."""
    return HeomConfig(
        epsilon=1.5,
        omega0=1.0,
        g0=0.3,
        alpha=0.05,
        omega_c=0.5,
        fock_dim=3,
        ell_c=2,
        dt=0.01,
    )


@pytest.fixture
def fig4_heom() -> HeomConfig:
    """Fixture for the oscillator-modulated hierarchy at lam = 0.3."""
    return HeomConfig.from_lambda(
        lam=0.3, epsilon=1.5, alpha=0.01, omega_c=0.2, fock_dim=10, ell_c=8
    )


@pytest.fixture
def heom_grid() -> TimeGrid:
    """Fixture for a hierarchy grid over [0, 2]."""
    return TimeGrid(t_start=0.0, t_end=2.0, n_points=21)


@pytest.fixture
def rng() -> np.random.Generator:
    """Fixture for a seeded random generator."""
    return np.random.default_rng(20240611)


@pytest.fixture
def record(fig1_config: ScenarioConfig) -> RunRecord:
    """Fixture for a simulated run record."""
    return simulate(fig1_config)


@pytest.fixture
def blank_database() -> Iterator[Database]:
    """In-memory blank database fixture."""
    db = Database(":memory:")
    try:
        yield db
    finally:
        db.close()


@pytest.fixture
def record_database(record: RunRecord) -> Iterator[Database]:
    """In-memory database holding one run record."""
    db = Database(":memory:")
    db.save_record(record)
    try:
        yield db
    finally:
        db.close()
