from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from apps.localring.exceptions import IndexMismatchError, NonUnitInversionError, PrecisionExhaustedError
from apps.localring.values import (
    LocalValue,
    local_binomial,
    local_constant,
    local_embed,
    local_monomial,
    local_pochhammer,
    local_q_integer,
    pochhammer_valuation,
)
from apps.polyring.cyclotomic import cyclotomic, phi_valuation
from apps.polyring.intpoly import IntPoly
from apps.polyring.ratpoly import RatPoly
from apps.qcomb.qseries import PochFactorSpec, q_integer, q_pochhammer


def agree(a: LocalValue, b: LocalValue) -> bool:
    """Equal modulo the precision both values carry."""
    return (a - b).lower_bound >= min(a.absolute_precision, b.absolute_precision)


def test_embed_strips_phi_powers():
    f = RatPoly(cyclotomic(5) ** 3 * IntPoly.of((1, 1)), cyclotomic(5))
    value = local_embed(f, 5, 2)

    assert value.valuation == 2
    assert value.absolute_precision == 4


def test_embed_zero():
    value = local_embed(0, 7, 3)

    assert value.is_zero
    assert value.lower_bound == 3


@pytest.mark.parametrize(("sign", "exponent", "index"), [(1, 6, 3), (1, 7, 3), (-1, 3, 6), (-1, 4, 6), (1, 0, 5)])
def test_local_binomial(sign, exponent, index):
    expected = local_embed(IntPoly.binomial(sign, exponent), index, 4)

    assert agree(local_binomial(sign, exponent, index, 4), expected)


@pytest.mark.parametrize(("exponent", "index"), [(100, 7), (-9, 5), (0, 3)])
def test_local_monomial(exponent, index):
    assert agree(local_monomial(exponent, index, 3), local_embed(RatPoly.monomial(exponent), index, 3))


def test_local_q_integer():
    value = local_q_integer(10, 1, 5, 3)

    assert value.valuation == 1
    assert agree(value, local_embed(q_integer(10), 5, 3))


@settings(max_examples=60, deadline=None)
@given(
    sign=st.sampled_from((1, -1)),
    offset=st.integers(min_value=0, max_value=4),
    step=st.integers(min_value=1, max_value=3),
    exponent=st.sampled_from((1, 2, -1, -2)),
    count=st.integers(min_value=0, max_value=12),
    index=st.integers(min_value=2, max_value=9),
)
def test_local_pochhammer_matches_dense(sign, offset, step, exponent, count, index):
    assume(not (sign == 1 and offset == 0))
    spec = PochFactorSpec(sign, offset, step, exponent)
    dense = q_pochhammer(spec, count)

    local = local_pochhammer(spec, count, index, 3)

    assert local.valuation == phi_valuation(dense, index)[0]
    assert pochhammer_valuation(spec, count, index) == local.valuation
    assert agree(local, local_embed(dense, index, 3))


def test_arithmetic_matches_dense():
    f = RatPoly(IntPoly.of((1, 2, 3)), IntPoly.of((1, 1)))
    g = RatPoly(cyclotomic(7) * IntPoly.of((2, 0, 1)))
    a, b = local_embed(f, 7, 3), local_embed(g, 7, 3)

    assert agree(a + b, local_embed(f + g, 7, 3))
    assert agree(a - b, local_embed(f - g, 7, 3))
    assert agree(a * b, local_embed(f * g, 7, 3))
    assert agree(a / b, local_embed(f / g, 7, 3))
    assert agree(b**3, local_embed(g**3, 7, 3))
    assert agree(a**-2, local_embed(f**-2, 7, 3))


def test_cancellation_loses_precision():
    f = RatPoly(IntPoly.of((1, 1)))
    x = local_embed(f, 5, 2)
    y = local_embed(f + cyclotomic(5) ** 3, 5, 2)

    difference = x - y

    assert difference.is_zero
    assert difference.lower_bound == 2
    with pytest.raises(PrecisionExhaustedError, match="need 3"):
        difference.ensure_precision(3)


def test_adding_zero_keeps_known_digits():
    x = local_embed(cyclotomic(5) * IntPoly.of((1, 1)), 5, 3)

    assert (x + LocalValue.zero(5, 2)).absolute_precision == 2
    assert (x + LocalValue.zero(5, 1)).is_zero


def test_constants_and_unit_part():
    third = local_constant(Fraction(1, 3), 5, 2)

    assert third.unit_part() == Fraction(1, 3)
    assert (third * 3).is_one
    assert local_constant(0, 5, 2).is_zero


def test_unit_part_of_zero():
    with pytest.raises(NonUnitInversionError):
        LocalValue.zero(5, 2).unit_part()


def test_division_by_zero_value():
    with pytest.raises(NonUnitInversionError):
        local_constant(1, 5, 2) / LocalValue.zero(5, 2)


def test_index_mismatch():
    with pytest.raises(IndexMismatchError, match="Φ_3 and Φ_5"):
        local_constant(1, 3, 2) + local_constant(1, 5, 2)
