"""Operators I^m, H1, H2: closed forms, recurrence, quadrature oracles."""

import cmath
import math

import pytest

from conftest import draw_params, draw_series, seeded
from fpgft.errors import COutOfRange, GammaOutOfRange, OrderOutOfRange, OutsideDomain
from fpgft.membership import ClassParams
from fpgft.operators import (
    H1Param,
    H2Param,
    ImOrder,
    apply_H1_transform,
    apply_H2_transform,
    apply_Im_closed,
    apply_Im_recurrence,
    h1_factor,
    h2_factor,
    quadrature_oracle_H1,
    quadrature_oracle_H2,
)
from fpgft.series import evaluate, linear_combine, make_series


class TestImOrder:
    def test_validation(self):
        assert ImOrder(0).m == 0
        assert ImOrder(12).m == 12
        with pytest.raises(OrderOutOfRange):
            ImOrder(-1)
        with pytest.raises(OrderOutOfRange):
            ImOrder(13)
        with pytest.raises(OrderOutOfRange):
            ImOrder(1.5)


class TestImClosed:
    def test_empty_tail_fixed_point(self):
        f0 = make_series(0.3, 1, {})
        assert apply_Im_closed(f0, 5).is_close(f0)

    def test_m0_is_identity(self):
        f = make_series(0.0, 2, {2: 0.05, 7: 0.001})
        g = apply_Im_closed(f, 0)
        assert g.coeffs == f.coeffs
        assert g is f

    def test_hand_value(self):
        f = make_series(0.0, 2, {2: 0.05})
        assert apply_Im_closed(f, 3).coeff(2) == pytest.approx(0.4, abs=1e-16)

    def test_composition_law(self):
        rng = seeded(5)
        for _ in range(20):
            f = draw_series(rng, draw_params(rng), nmax=30)
            m1 = int(rng.integers(0, 5))
            m2 = int(rng.integers(0, 5))
            lhs = apply_Im_closed(apply_Im_closed(f, m1), m2)
            rhs = apply_Im_closed(f, m1 + m2)
            assert lhs.k == rhs.k and lhs.trunc == rhs.trunc
            for n in rhs.coeffs:
                assert lhs.coeff(n) == pytest.approx(rhs.coeff(n), rel=1e-12)


class TestImRecurrence:
    def test_one_step_on_pole(self):
        f0 = make_series(0.0, 1, {})
        assert apply_Im_recurrence(f0, 1).is_close(f0)

    def test_two_steps_quadruple_a2(self):
        f = make_series(0.0, 2, {2: 0.03})
        g = apply_Im_recurrence(f, 2)
        assert g.coeff(2) == pytest.approx(0.12, rel=1e-14)

    def test_single_step_triples_a3(self):
        f = make_series(0.0, 3, {3: 0.01})
        g = apply_Im_recurrence(f, 1)
        assert g.coeff(3) == pytest.approx(0.03, rel=1e-14)

    def test_matches_closed_form(self):
        rng = seeded(6)
        for _ in range(30):
            f = draw_series(rng, draw_params(rng), nmax=64)
            m = int(rng.integers(0, 9))
            rec = apply_Im_recurrence(f, m)
            clo = apply_Im_closed(f, m)
            assert rec.w == clo.w and rec.k == clo.k and rec.trunc == clo.trunc
            assert set(rec.coeffs) == set(clo.coeffs)
            for n in clo.coeffs:
                assert rec.coeff(n) == pytest.approx(clo.coeff(n), rel=1e-12)


class TestDiagonalTransforms:
    def test_h1_empty_tail(self):
        f0 = make_series(0.0, 1, {})
        assert apply_H1_transform(f0, H1Param(2.0)).is_close(f0)

    def test_h1_hand_value(self):
        f = make_series(0.0, 2, {2: 0.06})
        g = apply_H1_transform(f, H1Param(3.0))
        assert g.coeff(2) == pytest.approx(0.024, abs=1e-17)

    def test_h1_alt_factor_differs(self):
        f = make_series(0.0, 2, {2: 0.06})
        g = apply_H1_transform(f, H1Param(3.0), alt_factor=True)
        assert g.coeff(2) == pytest.approx(0.012, abs=1e-17)
        # the two factor candidates coincide exactly at gamma = 2
        assert h1_factor(5, H1Param(2.0)) == h1_factor(5, H1Param(2.0), True)

    def test_h2_empty_tail(self):
        f0 = make_series(0.0, 1, {})
        assert apply_H2_transform(f0, H2Param(1.0)).is_close(f0)

    def test_h2_hand_value(self):
        f = make_series(0.0, 2, {2: 0.06})
        g = apply_H2_transform(f, H2Param(2.0))
        assert g.coeff(2) == pytest.approx(0.024, abs=1e-17)

    def test_factors_below_one(self):
        for n in range(1, 65):
            assert 0.0 < h1_factor(n, H1Param(1.5)) < 1.0
            assert 0.0 < h1_factor(n, H1Param(9.5)) < 1.0
            assert 0.0 < h2_factor(n, H2Param(1.0)) < 1.0
            assert 0.0 < h2_factor(n, H2Param(10.0)) < 1.0

    def test_param_validation(self):
        with pytest.raises(GammaOutOfRange):
            H1Param(1.0)
        with pytest.raises(GammaOutOfRange):
            H1Param(math.inf)
        with pytest.raises(COutOfRange):
            H2Param(0.99)

    def test_preserve_structure(self):
        rng = seeded(8)
        for _ in range(10):
            f = draw_series(rng, draw_params(rng))
            for g in (apply_H1_transform(f, H1Param(2.5)),
                      apply_H2_transform(f, H2Param(3.0)),
                      apply_Im_closed(f, 4)):
                assert g.w == f.w and g.k == f.k and g.trunc == f.trunc
                assert set(g.coeffs) == set(f.coeffs)
                assert all(a >= 0.0 for a in g.coeffs.values())

    def test_commutes_with_linear_combine(self):
        rng = seeded(9)
        p = draw_params(rng)
        fa = draw_series(rng, p, k=1)
        fb = draw_series(rng, p, k=1)
        h1 = H1Param(4.0)
        lhs = apply_H1_transform(linear_combine([(0.4, fa), (0.6, fb)]), h1)
        rhs = linear_combine([(0.4, apply_H1_transform(fa, h1)),
                              (0.6, apply_H1_transform(fb, h1))])
        assert lhs.is_close(rhs, tol=1e-15)


class TestOracles:
    def test_h1_pole_only_is_exact(self):
        f0 = make_series(0.0, 1, {})
        v = quadrature_oracle_H1(f0, H1Param(2.0), 0.5)
        assert v == pytest.approx(2.0, abs=1e-13)

    def test_h2_pole_only_is_exact(self):
        f0 = make_series(0.0, 1, {})
        for z in (0.5, 0.5j, -0.25 + 0.33j):
            v = quadrature_oracle_H2(f0, H2Param(1.0), z)
            assert abs(v - 1.0 / z) <= 1e-13

    def test_h1_matches_transform(self):
        f = make_series(0.0, 2, {2: 0.06})
        g = apply_H1_transform(f, H1Param(3.0))
        v = quadrature_oracle_H1(f, H1Param(3.0), 0.5)
        assert abs(v - evaluate(g, 0.5)) <= 1e-8

    def test_h2_matches_transform_rotated_direction(self):
        f = make_series(0.0, 2, {2: 0.06})
        g = apply_H2_transform(f, H2Param(2.0))
        for z in (0.5, 0.5j):
            v = quadrature_oracle_H2(f, H2Param(2.0), z)
            assert abs(v - evaluate(g, z)) <= 1e-8

    def test_h1_disagrees_with_alt_factor_as_predicted(self):
        f = make_series(0.0, 1, {1: 0.2, 3: 0.1})
        gamma = 3.5
        z = 0.7 * cmath.exp(0.4j)
        oracle = quadrature_oracle_H1(f, H1Param(gamma), z)
        alt = apply_H1_transform(f, H1Param(gamma), alt_factor=True)
        actual = abs(oracle - evaluate(alt, z))
        predicted = abs(sum(
            (gamma - 2.0) / (gamma + n) * a * z ** n for n, a in f.sorted_items()
        ))
        assert predicted > 1e-3
        assert abs(actual - predicted) <= 1e-6 * predicted

    def test_oracle_domain_checks(self):
        f = make_series(0.0, 1, {})
        with pytest.raises(OutsideDomain):
            quadrature_oracle_H1(f, H1Param(2.0), 1.2)

    def test_small_gamma_still_converges(self):
        f = make_series(0.0, 1, {1: 0.3})
        g = apply_H1_transform(f, H1Param(1.05))
        v = quadrature_oracle_H1(f, H1Param(1.05), 0.6)
        assert abs(v - evaluate(g, 0.6)) <= 1e-8
