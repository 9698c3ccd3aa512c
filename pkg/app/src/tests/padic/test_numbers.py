from fractions import Fraction

import pytest

from apps.padic.exceptions import NotPadicIntegerError, PadicPrecisionError
from apps.padic.numbers import PadicInt, padic_of_rational, padic_valuation


@pytest.mark.parametrize(
    ("x", "p", "expected"),
    [
        (Fraction(25, 64), 5, 2),
        (Fraction(9, 2), 3, 2),
        (Fraction(-30625, 8192), 5, 4),
        (Fraction(1, 8), 2, -3),
        (7, 5, 0),
        (0, 5, None),
    ],
)
def test_padic_valuation(x, p, expected):
    assert padic_valuation(x, p) == expected


def test_of_rational_residue():
    assert padic_of_rational(Fraction(7, 3), 5, 2).residue() == 19
    assert padic_of_rational(Fraction(603, 512), 5, 2).residue() == 19
    assert padic_of_rational(-1, 5, 3).residue() == 124


def test_of_rational_splits_valuation():
    value = padic_of_rational(Fraction(50, 3), 5, 2)

    assert value.valuation == 2
    assert value.unit == 2 * pow(3, -1, 25) % 25
    assert value.absolute_precision == 4


def test_of_rational_rejects_denominator():
    with pytest.raises(NotPadicIntegerError, match="has 5 in its denominator"):
        padic_of_rational(Fraction(1, 5), 5, 2)


def test_zero():
    zero = padic_of_rational(0, 7, 3)

    assert zero.is_zero
    assert zero.lower_bound == 3
    assert zero.residue() == 0
    assert repr(zero) == "PadicInt(0 mod 7^3)"


def test_precision_must_be_positive():
    with pytest.raises(PadicPrecisionError, match="got 0"):
        PadicInt(5, 0)


# ── arithmetic ──


def test_cancellation_loses_precision():
    a = padic_of_rational(26, 5, 3)

    difference = a - 1

    assert difference.valuation == 2
    assert difference.absolute_precision == 3
    assert a.congruent(1, 2)
    assert not a.congruent(1, 3)


def test_self_difference_is_zero():
    a = padic_of_rational(Fraction(2, 7), 5, 4)

    assert (a - a).is_zero
    assert (a - a).lower_bound == 4


def test_product_and_quotient():
    a = padic_of_rational(25, 5, 3)
    b = padic_of_rational(5, 5, 3)

    assert (a * b).valuation == 3
    assert (a / b).valuation == 1
    assert (a / b).residue() == 5


def test_quotient_leaving_zp_raises():
    with pytest.raises(NotPadicIntegerError):
        padic_of_rational(1, 5, 3) / padic_of_rational(5, 5, 3)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        padic_of_rational(1, 5, 3) / PadicInt.zero(5, 3)


def test_powers():
    a = padic_of_rational(3, 5, 2)

    assert (a**2).residue() == 9
    assert (a**-1).residue() == pow(3, -1, 25)
    assert (a**0).residue() == 1


def test_mixed_primes_rejected():
    with pytest.raises(ValueError, match="cannot combine 5-adic and 7-adic"):
        padic_of_rational(1, 5, 2) + padic_of_rational(1, 7, 2)


def test_rational_operands_are_coerced():
    a = padic_of_rational(Fraction(1, 2), 3, 3)

    assert (a * 2).congruent(1, 3)
    assert (2 * a - 1).congruent(0, 3)


# ── properties ──


def _random_padic(p: int, rng) -> PadicInt:
    precision = rng.randint(1, 6)
    unit = rng.randrange(1, p**precision)
    while unit % p == 0:
        unit = rng.randrange(1, p**precision)
    return PadicInt.of_unit(p, precision, unit, rng.randint(0, 3))


def test_product_then_quotient_restores_the_dividend(rng):
    for _ in range(500):
        p = rng.choice([2, 3, 5, 7, 13])
        a, b = _random_padic(p, rng), _random_padic(p, rng)

        product = a * b
        restored = product / b

        assert product.valuation == a.valuation + b.valuation
        assert restored.valuation == a.valuation
        assert restored.congruent(a, a.valuation + min(a.precision, b.precision)), (a, b)


def test_rational_valuation_is_additive(rng):
    for _ in range(500):
        p = rng.choice([2, 3, 5, 7, 13])
        x = Fraction(rng.randint(1, 10**4) * rng.choice([-1, 1]), rng.randint(1, 10**3))
        y = Fraction(rng.randint(1, 10**4), rng.randint(1, 10**3))

        assert padic_valuation(x * y, p) == padic_valuation(x, p) + padic_valuation(y, p)
