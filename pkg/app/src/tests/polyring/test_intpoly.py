import pytest
from hypothesis import given
from hypothesis import strategies as st

from apps.polyring.exceptions import InexactDivisionError, NonMonicDivisorError, ZeroDivisorError
from apps.polyring.intpoly import KARATSUBA_THRESHOLD, IntPoly, _schoolbook, mul_coeffs, poly_gcd

coefficients = st.lists(st.integers(min_value=-(10**6), max_value=10**6), max_size=3 * KARATSUBA_THRESHOLD)


def test_trailing_zeros_are_stripped():
    assert IntPoly.of((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly.of((0, 0)).is_zero
    assert IntPoly.zero().degree == -1


def test_arithmetic():
    one_plus_q = IntPoly.of((1, 1))

    assert one_plus_q * one_plus_q == IntPoly.of((1, 2, 1))
    assert one_plus_q - one_plus_q == IntPoly.zero()
    assert 3 - one_plus_q == IntPoly.of((2, -1))
    assert one_plus_q**3 == IntPoly.of((1, 3, 3, 1))
    assert one_plus_q * 0 == IntPoly.zero()


def test_binomial_and_shift():
    assert IntPoly.binomial(1, 3) == IntPoly.of((1, 0, 0, -1))
    assert IntPoly.binomial(-1, 2) == IntPoly.of((1, 0, 1))
    assert IntPoly.of((1, 1)).shift(2) == IntPoly.of((0, 0, 1, 1))


def test_monomial_rejects_negative_exponent():
    with pytest.raises(ValueError, match="needs a RatPoly"):
        IntPoly.monomial(-1)


@given(coefficients, coefficients)
def test_karatsuba_matches_schoolbook(a, b):
    expected = _schoolbook(a, b) if a and b else []
    assert IntPoly.of(mul_coeffs(a, b)) == IntPoly.of(expected)


@given(coefficients, st.integers(min_value=1, max_value=12))
def test_multiplying_by_binomial_matches_product(a, exponent):
    f = IntPoly.of(a)
    assert f.mul_binomial(1, exponent) == f * IntPoly.binomial(1, exponent)


def test_divrem():
    quotient, remainder = IntPoly.of((1, 0, 0, 1)).divrem(IntPoly.of((1, 1)))

    assert quotient == IntPoly.of((1, -1, 1))
    assert remainder.is_zero


def test_divrem_errors():
    with pytest.raises(ZeroDivisorError, match="zero divisor in divrem"):
        IntPoly.one().divrem(IntPoly.zero())
    with pytest.raises(NonMonicDivisorError, match="leading coefficient is 2"):
        IntPoly.one().divrem(IntPoly.of((0, 2)))


def test_exact_quotient_non_monic():
    product = IntPoly.of((2, 2)) * IntPoly.of((-1, 3))

    assert product.exact_quotient(IntPoly.of((2, 2))) == IntPoly.of((-1, 3))


@pytest.mark.parametrize(
    ("dividend", "divisor"),
    [
        ((1, 1), (2,)),
        ((1, 0, 1), (1, 1)),
        ((3,), (0, 1)),
    ],
)
def test_exact_quotient_inexact(dividend, divisor):
    with pytest.raises(InexactDivisionError):
        IntPoly.of(dividend).exact_quotient(IntPoly.of(divisor))


def test_content_and_primitive_part():
    f = IntPoly.of((4, -6, -2))

    assert f.content() == 2
    assert f.primitive_part() == IntPoly.of((-2, 3, 1))


def test_subst_power_and_evaluate():
    f = IntPoly.of((1, 2, 3))

    assert f.subst_power(2) == IntPoly.of((1, 0, 2, 0, 3))
    assert f.evaluate(2) == 17
    with pytest.raises(ValueError, match="must be positive"):
        f.subst_power(0)


def test_poly_gcd():
    a = IntPoly.of((-1, 0, 1))
    b = IntPoly.of((1, 2, 1))

    assert poly_gcd(a, b) == IntPoly.of((1, 1))
    assert poly_gcd(IntPoly.of((2, 2)), IntPoly.of((3,))) == IntPoly.one()


def test_poly_gcd_of_zeros():
    with pytest.raises(ZeroDivisorError):
        poly_gcd(IntPoly.zero(), IntPoly.zero())
