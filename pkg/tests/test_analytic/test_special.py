"""Tests for the special-function wrappers against mpmath references."""

from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest

from rxscaling import InvalidParameterError
from rxscaling.analytic import (
    bessel_i,
    bessel_k,
    cosine_integral,
    digamma,
    gamma_function,
    harmonic_digamma,
    hyp2f1_family,
    hyp2f1_family_integral,
    log_gamma,
    sinc,
    sine_integral,
)

ALPHAS = (2.5, 3.0, 4.0, 5.0, 6.0)
ARGUMENTS = (0.0, 1e-4, 0.1, 0.5, 1.0, 2.0, 10.0, 1e3, 1e6)


class TestHyp2f1Family:
    """Tests for hyp2f1_family and its integral form."""

    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("v", ARGUMENTS)
    def test_against_mpmath(self, alpha: float, v: float) -> None:
        """Both sides of the unit disk match mpmath to 1e-10."""
        delta = 2.0 / alpha
        want = float(mpmath.hyp2f1(1, 1 - mpmath.mpf(delta), 2 - mpmath.mpf(delta), -v))
        assert hyp2f1_family(alpha, v) == pytest.approx(want, rel=1e-10)

    @pytest.mark.parametrize("v", (0.01, 0.9, 1.1, 50.0))
    def test_integral_route_agrees(self, v: float) -> None:
        """Euler's integral gives the same value."""
        assert hyp2f1_family_integral(3.0, v) == pytest.approx(hyp2f1_family(3.0, v), rel=1e-10)

    def test_alpha_four_is_arctangent(self) -> None:
        """For alpha = 4 the family is atan(sqrt(v)) / sqrt(v)."""
        assert hyp2f1_family(4.0, 1.0) == pytest.approx(math.pi / 4.0, rel=1e-14)
        assert hyp2f1_family(4.0, 9.0) == pytest.approx(math.atan(3.0) / 3.0, rel=1e-12)

    def test_negative_argument_rejected(self) -> None:
        """v < 0 is outside the family's domain."""
        with pytest.raises(InvalidParameterError):
            hyp2f1_family(4.0, -0.5)

    def test_alpha_must_exceed_two(self) -> None:
        """alpha <= 2 is rejected."""
        with pytest.raises(InvalidParameterError):
            hyp2f1_family(2.0, 1.0)


class TestTrigonometricIntegrals:
    """Tests for Si, Ci and sinc."""

    @pytest.mark.parametrize("z", np.linspace(0.05, 30.0, 24).tolist())
    def test_si_ci(self, z: float) -> None:
        """Si and Ci match mpmath."""
        assert sine_integral(z) == pytest.approx(float(mpmath.si(z)), rel=1e-12)
        assert cosine_integral(z) == pytest.approx(float(mpmath.ci(z)), rel=1e-10, abs=1e-13)

    def test_ci_needs_positive_argument(self) -> None:
        """Ci(0) is rejected."""
        with pytest.raises(InvalidParameterError):
            cosine_integral(0.0)

    def test_sinc(self) -> None:
        """sinc is the normalised form with sinc(0) = 1."""
        assert sinc(0.0) == 1.0
        assert sinc(0.5) == pytest.approx(2.0 / math.pi)


class TestGammaFamily:
    """Tests for Gamma, ln Gamma and the digamma function."""

    @pytest.mark.parametrize("x", (0.25, 0.5, 1.0, 3.5, 10.0, 40.5, -0.5, -2.5))
    def test_gamma(self, x: float) -> None:
        """Gamma matches mpmath away from the poles."""
        assert gamma_function(x) == pytest.approx(float(mpmath.gamma(x)), rel=1e-13)

    @pytest.mark.parametrize("x", (0.0, -1.0, -4.0))
    def test_poles_rejected(self, x: float) -> None:
        """Non-positive integers raise."""
        with pytest.raises(InvalidParameterError):
            gamma_function(x)
        with pytest.raises(InvalidParameterError):
            digamma(x)

    @pytest.mark.parametrize("x", (1e-3, 0.5, 7.0, 250.0))
    def test_log_gamma(self, x: float) -> None:
        """ln Gamma matches mpmath."""
        assert log_gamma(x) == pytest.approx(float(mpmath.loggamma(x)), rel=1e-13)

    @pytest.mark.parametrize("n", range(1, 30))
    def test_digamma_harmonic(self, n: int) -> None:
        """psi(n) = -gamma + H_(n-1) and matches mpmath."""
        want = float(mpmath.digamma(n))
        assert digamma(float(n)) == pytest.approx(want, rel=1e-13, abs=1e-15)
        assert harmonic_digamma(n) == pytest.approx(want, rel=1e-13, abs=1e-15)

    def test_digamma_at_one(self) -> None:
        """psi(1) is minus the Euler-Mascheroni constant."""
        assert digamma(1.0) == pytest.approx(-0.5772156649015329, rel=1e-15)


class TestBessel:
    """Tests for the modified Bessel functions."""

    @pytest.mark.parametrize("order", (1, 2, 5, 16))
    @pytest.mark.parametrize("x", (0.05, 0.5, 2.0, 10.0, 80.0))
    def test_against_mpmath(self, order: int, x: float) -> None:
        """I_L and K_L, plain and scaled, match mpmath."""
        i_ref = mpmath.besseli(order, x)
        k_ref = mpmath.besselk(order, x)
        assert bessel_i(order, x, scaled=True) == pytest.approx(float(i_ref * mpmath.exp(-x)), rel=1e-10)
        assert bessel_k(order, x, scaled=True) == pytest.approx(float(k_ref * mpmath.exp(x)), rel=1e-10)
        if x <= 10.0:
            assert bessel_k(order, x) == pytest.approx(float(k_ref), rel=1e-10)

    def test_k_needs_positive_argument(self) -> None:
        """K_L(0) is rejected."""
        with pytest.raises(InvalidParameterError):
            bessel_k(1, 0.0)

    def test_i_needs_non_negative_argument(self) -> None:
        """I_L at negative x is rejected."""
        with pytest.raises(InvalidParameterError):
            bessel_i(1, -1.0)
