"""Duality engine: kappa(E) = max_s gamma(s) - s E."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupest.errors import BoundaryHitError, InvalidCurveError, InvalidInputError
from groupest.legendre import (
    GammaCurve,
    gamma_from_operator,
    kappa_from_gamma,
    maximize_unimodal,
)
from groupest.spectra import TridiagonalOperator

WIDE = (1e-6, 1e6)


def sqrt_curve(c: float) -> GammaCurve:
    return GammaCurve(lambda s: c * math.sqrt(s), WIDE)


class TestRoundTrip:
    @pytest.mark.parametrize("E", [0.1, 0.5, 1.0, 3.0, 10.0, 100.0])
    def test_three_sqrt_s(self, E):
        # max_s 3 sqrt(s) - s E = 9/(4E), at s_E = (3/(2E))^2
        res = kappa_from_gamma(sqrt_curve(3.0), E)
        assert res.kappa == pytest.approx(9.0 / (4.0 * E), abs=1e-9, rel=1e-9)
        assert res.s_E == pytest.approx((1.5 / E) ** 2, rel=1e-6)

    @pytest.mark.parametrize("E", [0.2, 1.0, 5.0])
    def test_half_inverse_curve(self, E):
        # gamma = sqrt(s/2) gives kappa = 1/(8E)
        res = kappa_from_gamma(sqrt_curve(1.0 / math.sqrt(2.0)), E)
        assert res.kappa == pytest.approx(1.0 / (8.0 * E), rel=1e-9)

    @given(
        c=st.floats(min_value=0.1, max_value=10),
        E=st.floats(min_value=0.05, max_value=50),
    )
    @settings(max_examples=50, deadline=None)
    def test_general_sqrt_round_trip(self, c, E):
        res = kappa_from_gamma(sqrt_curve(c), E)
        assert res.kappa == pytest.approx(c * c / (4.0 * E), rel=1e-8)


class TestMonotonicity:
    def test_kappa_decreasing_and_convex(self):
        grid = np.linspace(0.2, 20, 40)
        kappas = [kappa_from_gamma(sqrt_curve(3.0), E).kappa for E in grid]
        assert np.all(np.diff(kappas) < 0)
        assert np.all(np.diff(kappas, 2) > -1e-12)

    def test_s_E_decreasing(self):
        grid = np.linspace(0.2, 20, 20)
        s = [kappa_from_gamma(sqrt_curve(3.0), E).s_E for E in grid]
        assert np.all(np.diff(s) < 0)
        assert np.all(np.array(s) > 0)


class TestGuards:
    def test_boundary_hit(self):
        # gamma = s with E < 1: objective s(1-E) increases without bound
        linear = GammaCurve(lambda s: s, (1e-3, 1e3))
        with pytest.raises(BoundaryHitError):
            kappa_from_gamma(linear, 0.5)

    def test_concavity_check(self):
        convex = GammaCurve(lambda s: s * s - 4 * s, (1e-2, 1e2))
        with pytest.raises(InvalidCurveError):
            kappa_from_gamma(convex, 1.0, check_concavity=True)

    def test_negative_energy_rejected(self):
        with pytest.raises(InvalidInputError):
            kappa_from_gamma(sqrt_curve(1.0), -1.0)

    def test_bad_domain(self):
        with pytest.raises(InvalidInputError):
            maximize_unimodal(lambda s: -s, (0.0, 1.0))


class TestOperatorCurve:
    def test_truncation_convergence(self):
        # ground value of diag(m^2) + s on the off-diagonals; at fixed s the
        # doubling truncations must converge to the dense answer
        def builder(s):
            n = 512
            d = np.arange(n, dtype=float) ** 2
            return TridiagonalOperator(d, np.full(n - 1, s))

        gamma = gamma_from_operator(builder, (1e-2, 1e2))
        for s in (0.5, 2.0, 10.0):
            n = 512
            a = np.diag(np.arange(n, dtype=float) ** 2)
            a += np.diag(np.full(n - 1, s), 1) + np.diag(np.full(n - 1, s), -1)
            dense = np.linalg.eigvalsh(a)[0]
            assert gamma(s) == pytest.approx(dense, abs=1e-9)
