import math
from fractions import Fraction as F

import pytest
from hypothesis import given
import hypothesis.strategies as st

from poleint import (
    INFINITY,
    InvZSeries,
    NotIntegrableInRing,
    Poly,
    RootConfig,
    partial_fractions,
)

from conftest import rationals, nonzero_rationals

series_values = st.lists(rationals, min_size=1, max_size=10).map(
    InvZSeries.from_coefficients
)


def S(*coeffs):
    return InvZSeries.from_coefficients(coeffs)


class TestConstruction:
    def test_length_must_match_truncation(self):
        with pytest.raises(ValueError):
            InvZSeries(3, (F(1),))

    def test_padding_and_cutting(self):
        assert InvZSeries.from_coefficients([1], truncation=3) == S(1, 0, 0, 0)
        assert InvZSeries.from_coefficients([1, 2, 3], truncation=1) == S(1, 2)

    def test_coefficient_outside_window_raises(self):
        f = S(0, 1)
        assert f.coefficient(1) == 1
        with pytest.raises(ValueError, match="window"):
            f.coefficient(2)

    def test_truncate(self):
        assert S(1, 2, 3).truncate(1) == S(1, 2)
        with pytest.raises(ValueError):
            S(1, 2).truncate(5)


class TestAddition:
    def test_identity(self):
        f = S(1, 2, 3)
        assert f + InvZSeries.zero(2) == f

    def test_cancellation(self):
        assert (S(0, 1) + S(0, -1)).valuation() == INFINITY

    def test_truncation_is_information_minimum(self):
        f = InvZSeries.zero(8)
        g = InvZSeries.zero(16)
        assert (f + g).truncation == 8


class TestMultiplication:
    def test_difference_of_squares(self):
        one_plus = S(1, 1, 0)
        one_minus = S(1, -1, 0)
        assert one_plus * one_minus == S(1, 0, -1)

    def test_identity(self):
        f = S(2, 3, 4)
        one = S(1, 0, 0)
        assert f * one == f

    def test_scalar(self):
        assert S(1, 2) * F(1, 2) == S(F(1, 2), 1)
        assert 2 * S(1, 2) == S(2, 4)

    def test_window_gains_from_valuation(self):
        # f known to 8, g has valuation 2 and window 16: the unknown tail of
        # f enters at order 9 + 2, so the product is good through order 10.
        f = InvZSeries.from_coefficients([1] * 9)
        g = InvZSeries.from_coefficients([0, 0, 1], truncation=16)
        assert (f * g).truncation == 10

    @given(series_values, series_values)
    def test_commutes(self, f, g):
        assert f * g == g * f

    @given(series_values, series_values)
    def test_valuations_add(self, f, g):
        vf, vg = f.valuation(), g.valuation()
        p = f * g
        if vf != INFINITY and vg != INFINITY and vf + vg <= p.truncation:
            assert p.valuation() == vf + vg

    @given(series_values, series_values)
    def test_leibniz_rule(self, f, g):
        lhs = (f * g).derivative()
        rhs = f.derivative() * g + f * g.derivative()
        assert lhs.agrees_with(rhs)


class TestCalculus:
    def test_derivative_power_rule(self):
        assert S(0, 1).derivative() == S(0, 0, -1)

    def test_derivative_of_constant(self):
        assert S(7).derivative() == InvZSeries.zero(1)

    def test_derivative_fixture(self):
        assert S(0, 0, F(-1, 2)).derivative() == S(0, 0, 0, 1)

    def test_derivative_gains_one_order(self):
        assert S(1, 2, 3).derivative().truncation == 3

    def test_antiderivative_power_rule(self):
        assert S(0, 0, 0, 1).antiderivative() == S(0, 0, F(-1, 2))

    def test_antiderivative_of_zero(self):
        assert InvZSeries.zero(4).antiderivative() == InvZSeries.zero(3)

    def test_logarithmic_obstruction(self):
        with pytest.raises(NotIntegrableInRing, match="logarithm"):
            S(0, 1, 0).antiderivative()

    def test_constant_obstruction(self):
        with pytest.raises(NotIntegrableInRing):
            S(1, 0, 0).antiderivative()

    def test_tiny_window_cannot_certify(self):
        with pytest.raises(ValueError):
            S(0).antiderivative()

    @given(st.lists(rationals, max_size=8))
    def test_round_trip(self, tail):
        f = InvZSeries.from_coefficients([0, 0] + tail)
        g = f.antiderivative()
        assert g.coefficient(0) == 0
        assert g.derivative().agrees_with(f)


class TestValuation:
    def test_first_nonzero_index(self):
        assert S(0, 0, 0, 1, 0, 1).valuation() == 3

    def test_zero_series(self):
        assert InvZSeries.zero(5).valuation() == INFINITY
        assert InvZSeries.zero(5).valuation() == math.inf

    def test_constant_term_counts(self):
        assert S(5, 1).valuation() == 0


class TestInverseLinear:
    def test_zero_root(self):
        assert InvZSeries.inverse_linear(0, 3) == S(0, 1, 0, 0)

    def test_geometric_one(self):
        assert InvZSeries.inverse_linear(1, 4) == S(0, 1, 1, 1, 1)

    def test_geometric_two(self):
        assert InvZSeries.inverse_linear(2, 3) == S(0, 1, 2, 4)

    @given(rationals)
    def test_multiplying_back_gives_inverse_z(self, a):
        f = InvZSeries.inverse_linear(a, 8)
        one_minus = InvZSeries.from_coefficients([1, -a], truncation=8)
        assert (one_minus * f).agrees_with(S(0, 1, 0, 0, 0, 0, 0, 0, 0))

    @given(rationals)
    def test_z_shift_recovers_one(self, a):
        f = InvZSeries.inverse_linear(a, 8)
        one_minus = InvZSeries.from_coefficients([1, -a], truncation=8)
        assert (one_minus * f).mul_z_power(1) == InvZSeries.from_coefficients(
            [1], truncation=7
        )


class TestLogFactor:
    def test_zero_root_is_zero_series(self):
        assert InvZSeries.log_factor(0, 5) == InvZSeries.zero(5)

    def test_unit_root(self):
        assert InvZSeries.log_factor(1, 3) == S(0, -1, F(-1, 2), F(-1, 3))

    def test_derivative_contract_fixture(self):
        # L(2)' must match 2/(z(z-2)) = 2 * inverse_linear(2) / z
        lhs = InvZSeries.log_factor(2, 6).derivative()
        rhs = (InvZSeries.inverse_linear(2, 6) * 2).mul_z_power(-1)
        assert lhs.agrees_with(rhs)

    @given(rationals)
    def test_derivative_contract(self, a):
        lhs = InvZSeries.log_factor(a, 8).derivative()
        rhs = (InvZSeries.inverse_linear(a, 8) * a).mul_z_power(-1)
        assert lhs.agrees_with(rhs)

    @given(rationals)
    def test_derivative_times_argument(self, a):
        # L(a)' * (1 - a/z) telescopes to a/z^2
        lhs = InvZSeries.log_factor(a, 8).derivative()
        arg = InvZSeries.from_coefficients([1, -a], truncation=9)
        expected = InvZSeries.from_coefficients([0, 0, a], truncation=9)
        assert (lhs * arg).agrees_with(expected)


class TestFromRational:
    def test_cubic_fixture(self):
        q = Poly((0, 2, -3, 1))
        f = InvZSeries.from_rational(Poly.one(), q, 6)
        assert f == S(0, 0, 0, 1, 3, 7, 15)

    def test_inverse_z(self):
        assert InvZSeries.from_rational(Poly.one(), Poly.z(), 4) == S(0, 1, 0, 0, 0)

    @given(rationals)
    def test_matches_inverse_linear(self, a):
        den = Poly((-a, 1))
        lhs = InvZSeries.from_rational(Poly.one(), den, 8)
        assert lhs == InvZSeries.inverse_linear(a, 8)

    def test_degree_error(self):
        with pytest.raises(ValueError, match="degree"):
            InvZSeries.from_rational(Poly.z(), Poly.z(), 4)

    def test_zero_denominator_error(self):
        with pytest.raises(ValueError, match="nonzero"):
            InvZSeries.from_rational(Poly.one(), Poly.zero(), 4)

    def test_non_monic_denominator_normalized(self):
        lhs = InvZSeries.from_rational(Poly.one(), Poly((0, 2)), 4)
        assert lhs == S(0, F(1, 2), 0, 0, 0)

    @given(st.lists(nonzero_rationals, min_size=1, max_size=4, unique=True))
    def test_matches_partial_fraction_sum(self, roots):
        cfg = RootConfig(tuple(roots))
        q = cfg.polynomial()
        direct = InvZSeries.from_rational(Poly.one(), q, 10)
        assert direct == partial_fractions(Poly.one(), cfg).as_series(10)


class TestZPowerShift:
    def test_shift_down_pads(self):
        assert S(1, 2).mul_z_power(-2) == S(0, 0, 1, 2)

    def test_shift_up_requires_leading_zeros(self):
        assert S(0, 0, 5).mul_z_power(2) == S(5)
        with pytest.raises(ValueError, match="positive powers"):
            S(1, 0).mul_z_power(1)

    def test_shift_up_window_exhausted(self):
        with pytest.raises(ValueError, match="window"):
            S(0, 0).mul_z_power(2)


class TestEvaluate:
    def test_matches_direct_sum(self):
        f = S(0, 0, F(-1, 2), -1)
        z = 4 + 1j
        expected = -0.5 * z**-2 - z**-3
        assert abs(f.evaluate(z) - expected) < 1e-15

    def test_equality_only_on_shared_window(self):
        assert S(1, 2).agrees_with(S(1, 2, 3))
        assert not S(1, 2).agrees_with(S(1, 3, 3))
