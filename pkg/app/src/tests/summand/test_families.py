from fractions import Fraction

import pytest

from apps.polyring.cyclotomic import value_at_one
from apps.polyring.intpoly import IntPoly
from apps.polyring.ratpoly import RatPoly
from apps.qcomb.qseries import PochFactorSpec, q_binomial
from apps.summand.evaluation import sum_classical, sum_q, term_classical, term_q
from apps.summand.exceptions import InvalidSummandSpecError, UnknownFamilyError
from apps.summand.families import CLASSICAL_FAMILIES, Q_FAMILIES, get_classical, get_family
from apps.summand.specs import Bracket, CountedFactor, OnePlus, QSummandSpec, QuadraticExponent


@pytest.mark.parametrize("name", sorted(Q_FAMILIES))
def test_q_to_one_limit_is_classical_term(name):
    spec = get_family(name)
    classical = get_classical(spec.classical)

    for k in range(4):
        assert value_at_one(term_q(spec, k)) == term_classical(classical, k), f"{name} at k={k}"


@pytest.mark.parametrize("k", range(5))
def test_central_binomial_term(k):
    assert term_q(get_family("F6"), k) == q_binomial(2 * k, k).shift(k)


def test_square_term():
    assert term_q(get_family("F3"), 1) == RatPoly(IntPoly.one(), IntPoly.of((1, 1)) ** 2)
    assert sum_q(get_family("F3"), 0, 1) == 1 + RatPoly(IntPoly.one(), IntPoly.of((1, 1)) ** 2)


def test_scaled_sum_substitutes_q_power():
    spec = get_family("F3")

    assert sum_q(spec, 0, 3, scale=2) == sum_q(spec, 0, 3).subst_power(2)


def test_empty_range():
    assert sum_q(get_family("F1"), 3, 2).is_zero
    assert sum_classical(get_classical("H"), 3, 2) == 0


@pytest.mark.parametrize(
    ("name", "k", "expected"),
    [
        ("H", 1, Fraction(1, 8)),
        ("H", 2, Fraction(27, 512)),
        ("J", 1, Fraction(7, 32)),
        ("RV", 1, Fraction(1, 4)),
        ("RV2", 1, Fraction(1, 8)),
        ("CB", 2, Fraction(6)),
        ("CB2", 2, Fraction(3, 2)),
        ("K3", 1, Fraction(-5, 8)),
        ("K8", 1, Fraction(-4)),
        ("ONE", 7, Fraction(1)),
    ],
)
def test_classical_terms(name, k, expected):
    assert term_classical(CLASSICAL_FAMILIES[name], k) == expected


def test_classical_sum():
    assert sum_classical(get_classical("H"), 0, 2) == Fraction(603, 512)
    assert sum_classical(get_classical("ONE"), 0, 4) == 5


@pytest.mark.parametrize("lookup", (get_family, get_classical))
def test_unknown_family(lookup):
    with pytest.raises(UnknownFamilyError, match="Unknown summand family: nope"):
        lookup("nope")


def test_unknown_family_is_key_error():
    with pytest.raises(KeyError):
        get_family("nope")


_POCH = PochFactorSpec(1, 1, 2)


@pytest.mark.parametrize(
    ("kwargs", "reason"),
    [
        ({"factors": (CountedFactor(_POCH, 3),)}, "multiplier must be 1 or 2"),
        ({"bracket": Bracket(4, 0)}, "does not define a q-integer"),
        ({"one_plus": (OnePlus(1, 1, 0),)}, "malformed"),
        ({"one_plus": (OnePlus(2, 1, -1),)}, "positive exponents"),
        ({"qexp": QuadraticExponent(c1=-1)}, "nonnegative"),
    ],
)
def test_invalid_summand_spec(kwargs, reason):
    with pytest.raises(InvalidSummandSpecError, match=reason):
        QSummandSpec("bad", **kwargs)


def test_scaled_identity():
    spec = get_family("F7")

    assert spec.scaled(1) is spec
    assert spec.scaled(3).bracket == Bracket(4, 1, 3)
