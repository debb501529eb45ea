"""Tests for modulation module."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from steerdyn.core import DriveMod, LorentzBath
from steerdyn.modulation import (
    ReservoirSpectral,
    bessel_j0,
    driven_bath,
    effective_alpha,
    modulation_G,
    multimode_weights,
    reservoir_spectral_density,
)

J0_ZERO = 2.404826


def quadrature_j0(x: float, n: int = 10_000) -> float:
    """J0 from (1/pi) * int_0^pi cos(x sin(theta)) dtheta, midpoint rule."""
    theta = (np.arange(n) + 0.5) * math.pi / n
    return float(np.mean(np.cos(x * np.sin(theta))))


def test__bessel_j0_values() -> None:
    """Test J0 at the origin and at its first zero."""
    assert bessel_j0(0.0) == 1.0
    assert abs(bessel_j0(J0_ZERO)) < 1e-5
    assert abs(quadrature_j0(J0_ZERO)) < 1e-5


def test__bessel_j0_quadrature() -> None:
    """Test J0 against the integral representation on [0, 30]."""
    xs = np.linspace(0, 30, 61)
    expected = [quadrature_j0(x) for x in xs]
    assert np.allclose(bessel_j0(xs), expected, atol=1e-8, rtol=0)


def test__bessel_j0_even() -> None:
    """Test J0 is even and bounded by one."""
    xs = np.linspace(0, 40, 81)
    assert np.array_equal(bessel_j0(-xs), bessel_j0(xs))
    assert np.all(np.abs(bessel_j0(xs)) <= 1.0)


def test__effective_alpha() -> None:
    """Test the renormalized coupling."""
    assert effective_alpha(DriveMod(amplitude_A=0.0, frequency_Omega=2.0), 0.3) == 0.3
    at_zero = DriveMod(amplitude_A=J0_ZERO * 4.0, frequency_Omega=4.0)
    assert effective_alpha(at_zero, 0.3) < 1e-10
    for amp in np.linspace(0, 20, 41):
        drive = DriveMod(amplitude_A=amp, frequency_Omega=1.5)
        assert 0.0 <= effective_alpha(drive, 0.3) <= 0.3


def test__effective_alpha_invalid() -> None:
    """Test invalid drives and couplings."""
    drive = DriveMod(amplitude_A=1.0, frequency_Omega=1.0)
    with pytest.raises(ValueError, match="alpha must be positive"):
        effective_alpha(drive, 0.0)
    with pytest.raises(ValidationError, match="frequency_Omega must be positive"):
        DriveMod(amplitude_A=1.0, frequency_Omega=0.0)


def test__driven_bath(fig1_bath: LorentzBath) -> None:
    """Test the driven bath keeps omega_c and epsilon."""
    drive = DriveMod(amplitude_A=1.0, frequency_Omega=2.0)
    bath = driven_bath(fig1_bath, drive)
    assert bath.alpha == effective_alpha(drive, fig1_bath.alpha)
    assert bath.omega_c == fig1_bath.omega_c
    assert bath.epsilon == fig1_bath.epsilon


def test__reservoir_spectral_density() -> None:
    """Test the super-Ohmic density."""
    spec = ReservoirSpectral(chi=3.0, eta=3.0)
    assert reservoir_spectral_density(spec, 0.0) == 0.0
    assert reservoir_spectral_density(spec, 3.0) == pytest.approx(3 / (2 * math.pi))
    far = reservoir_spectral_density(spec, 1e6 * spec.eta)
    assert far == pytest.approx(spec.chi / math.pi, rel=1e-6)
    assert spec.Lam == 1.0


def test__reservoir_spectral_invalid() -> None:
    """Test reservoir invariants."""
    with pytest.raises(ValidationError, match="eta must be positive"):
        ReservoirSpectral(chi=1.0, eta=0.0)
    with pytest.raises(ValidationError):
        ReservoirSpectral(chi=-1.0, eta=1.0)


def test__modulation_g_limits() -> None:
    """Test G(0) = 1 and G(inf) = exp(-Lam)."""
    assert modulation_G(0.0, 1.0, 3.0) == 1.0
    assert abs(modulation_G(100 / 3.0, 1.0, 3.0) - math.exp(-1.0)) < 1e-10
    assert isinstance(modulation_G(0.5, 1.0, 3.0), complex)


def test__modulation_g_series() -> None:
    """Test the closed form against its Poisson series."""
    lam, eta, t = 1.0, 3.0, 0.5
    series = sum(
        math.exp(-lam) * lam**k / math.factorial(k) * math.exp(-k * eta * t)
        for k in range(60)
    )
    assert abs(modulation_G(t, lam, eta) - series) < 1e-12
    weights = multimode_weights(lam)
    shifted = np.sum(weights * np.exp(-np.arange(weights.size) * eta * t))
    assert abs(modulation_G(t, lam, eta) - shifted) < 1e-11


def test__modulation_g_monotone() -> None:
    """Test G decreases in t for Lam > 0."""
    values = modulation_G(np.linspace(0, 5, 200), 2.0, 3.0).real
    assert np.all(np.diff(values) < 0)
    with pytest.raises(ValueError, match="non-negative"):
        modulation_G(-1.0, 1.0, 3.0)
