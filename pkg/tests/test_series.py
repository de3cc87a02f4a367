"""Series core: construction, differentiation, evaluation, combination."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import draw_params, draw_series, seeded
from fpgft.errors import (
    EvalAtPole,
    FixedPointOutsideDisk,
    IndexBelowK,
    MixedFixedPoints,
    NegativeCoefficient,
    OutsideDomain,
    TruncationLimitExceeded,
    WeightsNotConvex,
)
from fpgft.series import (
    FpSeries,
    GeneralSeries,
    differentiate,
    evaluate,
    linear_combine,
    make_series,
    to_general,
)


class TestMakeSeries:
    def test_empty_tail_is_pole_only(self):
        f = make_series(0.0, 1, {})
        assert f.coeffs == {}
        assert f.k == 1
        assert f.trunc == 1

    def test_valid_tail_sets_trunc(self):
        f = make_series(0.3 + 0.0j, 2, {2: 0.05})
        assert f.trunc == 2
        assert f.coeff(2) == 0.05
        assert f.coeff(3) == 0.0

    def test_index_below_k_rejected(self):
        with pytest.raises(IndexBelowK):
            make_series(0.0, 2, {1: 0.1})

    def test_negative_coefficient_rejected(self):
        with pytest.raises(NegativeCoefficient):
            make_series(0.0, 1, {2: -0.01})

    def test_nonfinite_coefficient_rejected(self):
        with pytest.raises(NegativeCoefficient):
            make_series(0.0, 1, {2: math.nan})

    def test_fixed_point_outside_disk_rejected(self):
        with pytest.raises(FixedPointOutsideDisk):
            make_series(1.0, 1, {})
        with pytest.raises(FixedPointOutsideDisk):
            make_series(0.8 + 0.7j, 1, {})

    def test_k_must_be_positive_integer(self):
        with pytest.raises(IndexBelowK):
            make_series(0.0, 0, {})

    def test_truncation_cap_enforced(self, monkeypatch):
        monkeypatch.setenv("FPGFT_MAX_TRUNC", "16")
        with pytest.raises(TruncationLimitExceeded):
            make_series(0.0, 1, {17: 0.1})
        make_series(0.0, 1, {16: 0.1})

    def test_explicit_trunc_may_exceed_support(self):
        f = make_series(0.0, 1, {2: 0.1}, trunc=10)
        assert f.trunc == 10
        with pytest.raises(TruncationLimitExceeded):
            make_series(0.0, 1, {5: 0.1}, trunc=3)


class TestDifferentiate:
    def test_principal_part_power_rule(self):
        g = differentiate(make_series(0.2, 1, {}))
        assert g.terms == {-2: -1.0 + 0.0j}

    def test_tail_power_rule(self):
        g = differentiate(make_series(0.0, 2, {2: 0.25}))
        assert g.terms[-2] == -1.0
        assert g.terms[1] == 0.5

    def test_second_derivative_of_principal(self):
        g = differentiate(differentiate(make_series(0.0, 1, {})))
        assert g.terms == {-3: 2.0 + 0.0j}

    def test_constant_term_vanishes(self):
        g = differentiate(GeneralSeries(w=0.0, terms={0: 3.0 + 0.0j, 2: 1.0}))
        assert g.terms == {1: 2.0 + 0.0j}

    def test_linearity(self):
        rng = seeded(101)
        fa = draw_series(rng, draw_params(rng), k=1)
        fb = draw_series(rng, draw_params(rng), k=1)
        comb = linear_combine([(0.3, fa), (0.7, fb)])
        d_comb = differentiate(comb)
        da = differentiate(fa)
        db = differentiate(fb)
        for p in set(d_comb.terms) | set(da.terms) | set(db.terms):
            lhs = d_comb.terms.get(p, 0.0)
            rhs = 0.3 * da.terms.get(p, 0.0) + 0.7 * db.terms.get(p, 0.0)
            assert abs(lhs - rhs) <= 1e-14


class TestEvaluate:
    def test_pole_only_series(self):
        assert evaluate(make_series(0.0, 1, {}), 0.5) == pytest.approx(2.0)

    def test_hand_sum(self):
        f = make_series(0.0, 2, {2: 0.05})
        assert evaluate(f, 0.5) == pytest.approx(2.0125, abs=1e-15)

    def test_eval_at_pole_rejected(self):
        f = make_series(0.3, 1, {})
        with pytest.raises(EvalAtPole):
            evaluate(f, 0.3)
        with pytest.raises(EvalAtPole):
            evaluate(f, 0.3 + 1e-15j)

    def test_outside_domain_rejected(self):
        f = make_series(0.0, 1, {})
        with pytest.raises(OutsideDomain):
            evaluate(f, 1.0)

    def test_derivative_matches_finite_difference(self):
        rng = seeded(77)
        h = 1e-6
        checked = 0
        while checked < 50:
            f = draw_series(rng, draw_params(rng))
            g = differentiate(f)
            r = float(rng.uniform(0.1, 0.9))
            theta = float(rng.uniform(0.0, 2.0 * math.pi))
            z = complex(f.w) + r * complex(math.cos(theta), math.sin(theta))
            if abs(z + h - f.w) >= 1.0 or abs(z - h - f.w) >= 1.0:
                continue
            fd = (evaluate(f, z + h) - evaluate(f, z - h)) / (2.0 * h)
            exact = evaluate(g, z)
            assert abs(fd - exact) <= 1e-6 * max(1.0, abs(exact))
            checked += 1

    def test_horner_matches_naive_power_sum(self):
        rng = seeded(31)
        for _ in range(40):
            f = draw_series(rng, draw_params(rng), nmax=64)
            r = float(rng.uniform(0.1, 0.95))
            theta = float(rng.uniform(0.0, 2.0 * math.pi))
            u = r * complex(math.cos(theta), math.sin(theta))
            z = complex(f.w) + u
            naive = 1.0 / u
            for n, a in f.sorted_items():
                naive += a * u ** n
            got = evaluate(f, z)
            assert abs(got - naive) <= 1e-12 * max(1.0, abs(naive))


class TestLinearCombine:
    def test_identity_combination(self):
        f = make_series(0.1, 2, {3: 0.2})
        g = linear_combine([(1.0, f)])
        assert g.is_close(f)

    def test_idempotent_on_equal_inputs(self):
        f0 = make_series(0.0, 1, {})
        g = linear_combine([(0.5, f0), (0.5, f0)])
        assert g.is_close(f0)

    def test_hand_arithmetic(self):
        fa = make_series(0.0, 2, {2: 0.04})
        fb = make_series(0.0, 2, {2: 0.08})
        g = linear_combine([(0.25, fa), (0.75, fb)])
        assert g.coeff(2) == pytest.approx(0.07, abs=1e-15)

    def test_k_and_trunc_resolution(self):
        fa = make_series(0.0, 2, {2: 0.1})
        fb = make_series(0.0, 3, {5: 0.1})
        g = linear_combine([(0.5, fa), (0.5, fb)])
        assert g.k == 2
        assert g.trunc == 5

    def test_nonconvex_weights_rejected(self):
        f = make_series(0.0, 1, {})
        with pytest.raises(WeightsNotConvex):
            linear_combine([(0.5, f), (0.6, f)])
        with pytest.raises(WeightsNotConvex):
            linear_combine([(-0.1, f), (1.1, f)])
        with pytest.raises(WeightsNotConvex):
            linear_combine([])

    def test_mixed_fixed_points_rejected(self):
        fa = make_series(0.0, 1, {})
        fb = make_series(0.2, 1, {})
        with pytest.raises(MixedFixedPoints):
            linear_combine([(0.5, fa), (0.5, fb)])

    @given(
        a2=st.floats(min_value=0.0, max_value=1.0),
        b2=st.floats(min_value=0.0, max_value=1.0),
        d=st.floats(min_value=0.0, max_value=1.0),
    )
    @settings(max_examples=60, deadline=None)
    def test_convex_combinations_keep_nonnegative_tails(self, a2, b2, d):
        fa = make_series(0.0, 1, {2: a2})
        fb = make_series(0.0, 1, {2: b2, 3: 0.5 * b2})
        g = linear_combine([(d, fa), (1.0 - d, fb)])
        assert all(a >= 0.0 for a in g.coeffs.values())


def test_series_is_immutable():
    f = make_series(0.0, 1, {2: 0.1})
    with pytest.raises(AttributeError):
        f.k = 3
