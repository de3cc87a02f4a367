"""Gauss-Kronrod panel and the adaptive driver."""

import math

import numpy as np
import pytest

from fpgft.errors import QuadratureNonConvergence
from fpgft.quadrature import _GAUSS_IDX, _WG, _WK, _XK, adaptive_quadrature, gk15


class TestRuleConstants:
    def test_weights_integrate_constants(self):
        # both embedded rules integrate 1 over [-1, 1] exactly
        assert np.sum(_WK) == pytest.approx(2.0, abs=1e-15)
        assert np.sum(_WG) == pytest.approx(2.0, abs=1e-15)

    def test_nodes_symmetric(self):
        assert np.allclose(_XK, -_XK[::-1], atol=0.0)
        assert np.allclose(_WK, _WK[::-1], atol=0.0)

    def test_gauss_nodes_are_every_other_kronrod_node(self):
        assert list(_GAUSS_IDX) == [1, 3, 5, 7, 9, 11, 13]

    def test_polynomial_exactness(self):
        # Kronrod-15 is exact through degree 22; spot-check degree 10
        val, err = gk15(lambda x: x ** 10, -1.0, 1.0)
        assert val.real == pytest.approx(2.0 / 11.0, rel=1e-14)
        assert err <= 1e-12


class TestAdaptive:
    def test_smooth_integral(self):
        v = adaptive_quadrature(lambda x: np.exp(x), 0.0, 1.0)
        assert v.real == pytest.approx(math.e - 1.0, abs=1e-12)
        assert v.imag == pytest.approx(0.0, abs=1e-14)

    def test_endpoint_derivative_singularity(self):
        # u^0.1 has unbounded derivative at 0; adaptivity must resolve it
        v = adaptive_quadrature(lambda x: np.power(x, 0.1), 0.0, 1.0)
        assert v.real == pytest.approx(1.0 / 1.1, abs=1e-9)

    def test_boundary_layer_power(self):
        v = adaptive_quadrature(lambda x: np.power(x, 200.0), 0.0, 1.0)
        assert v.real == pytest.approx(1.0 / 201.0, abs=1e-10)

    def test_complex_integrand(self):
        v = adaptive_quadrature(lambda x: np.exp(1j * x), 0.0, math.pi)
        assert v == pytest.approx(2j, abs=1e-12)

    def test_interval_budget_raises(self):
        with pytest.raises(QuadratureNonConvergence):
            adaptive_quadrature(lambda x: np.power(np.abs(x - 1.0 / 3.0), 0.02),
                                0.0, 1.0, tol=1e-14, max_intervals=4)

    def test_oscillatory(self):
        v = adaptive_quadrature(lambda x: np.sin(40.0 * x), 0.0, 1.0)
        exact = (1.0 - math.cos(40.0)) / 40.0
        assert v.real == pytest.approx(exact, abs=1e-11)
