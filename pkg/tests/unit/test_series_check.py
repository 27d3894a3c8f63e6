"""Tests for the generating-product series check."""

import pytest

from src.components.interval_polys import L_FAMILY, P_FAMILY, build_poly
from src.components.series_check import (
    KERNEL,
    QLaurent,
    SeriesMismatch,
    TruncatedSeries,
    check_generating_product,
    divide_by_kernel,
    product_series,
    quotient_series,
    rhs_series,
    series_equal,
    truncate,
)
from src.utils.exceptions import ContractViolation


class TestQLaurent:
    """Test suite for sparse Laurent polynomials."""

    def test_zero_terms_are_dropped(self):
        """Test zeros never appear in the stored terms."""
        p = QLaurent({-1: 0, 2: 3})
        assert p.terms == {2: 3}
        assert (p - p).is_zero()

    def test_arithmetic(self):
        """Test addition, multiplication and shifting."""
        p = QLaurent({-1: 1, 0: 1, 1: 1})
        assert p + QLaurent.constant(1) == QLaurent({-1: 1, 0: 2, 1: 1})
        assert KERNEL * p == QLaurent({2: 1, 1: -1, -1: -1, -2: 1})
        assert p.shift(2) == QLaurent({1: 1, 2: 1, 3: 1})
        assert p.scale(-2).coefficient(0) == -2

    def test_valuation_and_degree(self):
        """Test extreme exponents."""
        p = QLaurent({-3: 1, 4: 2})
        assert p.valuation() == -3
        assert p.degree() == 4
        assert QLaurent().valuation() is None

    def test_shape_predicates(self):
        """Test palindromic and non-negative checks."""
        assert QLaurent({-1: 1, 0: 2, 1: 1}).is_palindromic()
        assert not QLaurent({-1: 1, 1: 2}).is_palindromic()
        assert QLaurent({0: 1}).is_nonnegative()
        assert not KERNEL.is_nonnegative()


class TestKernelDivision:
    """Test suite for division by q + q^-1 - 2."""

    def test_kernel_divides_itself(self):
        """Test KERNEL / KERNEL = 1."""
        quotient, remainder = divide_by_kernel(KERNEL)
        assert quotient == QLaurent.constant(1)
        assert remainder.is_zero()

    @pytest.mark.parametrize(
        "terms",
        [{0: 1}, {-3: 2, 0: 5, 4: -1}, {-1: 1, 0: 1, 1: 1}, {7: 4}],
    )
    def test_exact_multiples(self, terms):
        """Test multiples of the kernel come back exactly."""
        q = QLaurent(terms)
        quotient, remainder = divide_by_kernel(KERNEL * q)
        assert quotient == q
        assert remainder.is_zero()

    def test_non_multiple_leaves_remainder(self):
        """Test a constant is not divisible by the kernel."""
        quotient, remainder = divide_by_kernel(QLaurent.constant(1))
        assert not remainder.is_zero()
        assert quotient * KERNEL + remainder == QLaurent.constant(1)

    def test_zero(self):
        """Test the zero polynomial divides to zero."""
        quotient, remainder = divide_by_kernel(QLaurent())
        assert quotient.is_zero() and remainder.is_zero()


class TestSeries:
    """Test suite for the truncated product and P_n series."""

    def test_low_coefficients(self):
        """Test t^0, t^1 and t^2 of the product."""
        product = product_series(6)
        assert product[0] == QLaurent.constant(1)
        assert product[1] == KERNEL
        assert product[2] == QLaurent({2: 1, 1: -1, -1: -1, -2: 1})

    def test_product_matches_p_series(self):
        """Test both sides agree through t^48."""
        ok, mismatch = series_equal(product_series(48), rhs_series(48))
        assert ok
        assert mismatch is None

    def test_kernel_division_gives_p_n(self):
        """Test dividing each product coefficient by the kernel returns P_n."""
        product = product_series(20)
        for n in range(1, 21):
            quotient, remainder = divide_by_kernel(product[n])
            assert remainder.is_zero()
            assert quotient == QLaurent(build_poly(n, P_FAMILY).to_laurent_dict())

    def test_truncation_is_consistent(self):
        """Test truncating a longer expansion equals a shorter expansion."""
        assert truncate(product_series(20), 10).coeffs == product_series(10).coeffs

    def test_truncate_rejects_higher_order(self):
        """Test truncation cannot extend a series."""
        with pytest.raises(ContractViolation):
            truncate(product_series(3), 5)

    def test_order_mismatch(self):
        """Test series of different orders are not compared."""
        with pytest.raises(ContractViolation):
            series_equal(product_series(3), product_series(4))

    def test_mismatch_location(self):
        """Test a perturbed coefficient is reported at its t-power and q-exponent."""
        lhs = product_series(5)
        coeffs = list(lhs.coeffs)
        coeffs[3] = coeffs[3] + QLaurent.constant(1)
        ok, mismatch = series_equal(lhs, TruncatedSeries(order=5, coeffs=coeffs))
        assert not ok
        assert mismatch == SeriesMismatch(t_power=3, q_exponent=0, expected=2, actual=3)

    def test_quotient_series_for_l(self, l6_coefficients):
        """Test the L_n series carries the centred L_n coefficients."""
        series = quotient_series(L_FAMILY, 6)
        assert series[0].is_zero()
        expected = {k - 5: c for k, c in enumerate(l6_coefficients)}
        assert series[6] == QLaurent(expected)

    def test_rejects_zero_order(self):
        """Test order >= 1 is required."""
        with pytest.raises(ContractViolation):
            product_series(0)


class TestGeneratingProductCheck:
    """Test suite for the combined check."""

    def test_passes(self):
        """Test the check holds through t^24."""
        result = check_generating_product(24)
        assert result.passed
        assert result.mismatches == {}
        assert result.division_failures == {}

    def test_selected_powers(self):
        """Test restricting the check to some t-powers."""
        assert check_generating_product(10, powers=[0, 5, 10]).passed
