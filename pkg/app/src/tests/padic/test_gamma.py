from fractions import Fraction

import pytest

from apps.padic.exceptions import NotPadicIntegerError, UnsupportedPrimeError
from apps.padic.gamma import (
    gamma_identities_check,
    gamma_integer,
    gamma_integers,
    gamma_p,
    quarter_gamma_fourth,
    representative,
)


@pytest.mark.parametrize(
    ("x", "expected"),
    [
        (0, 1),
        (1, 24),
        (2, 1),
        (3, 23),
        (6, 24),
    ],
)
def test_gamma_at_integers(x, expected):
    assert gamma_p(x, 5, 2).residue() == expected


def test_gamma_integer_skips_multiples_of_p():
    # 1·2·4·5 with the sign of n = 6
    assert gamma_integer(6, 3, 1000) == 40


def test_representative():
    assert representative(Fraction(1, 4), 5, 2) == 19
    assert representative(Fraction(-1, 2), 7, 1) == 3

    with pytest.raises(NotPadicIntegerError):
        representative(Fraction(1, 5), 5, 2)


def test_quarter_gamma_fourth_matches_truncated_sum():
    assert quarter_gamma_fourth(5, 2).residue() == 19


def test_gamma_is_lipschitz():
    near = gamma_p(Fraction(1, 4) + 125, 5, 4)

    assert near.congruent(gamma_p(Fraction(1, 4), 5, 4), 3)


def test_gamma_integers_match_the_product():
    ns = [0, 1, 2, 5, 6, 24, 25, 26, 124]

    assert gamma_integers(ns, 5, 5**4) == {n: gamma_integer(n, 5, 5**4) for n in ns}


def test_gamma_rejects_two():
    with pytest.raises(UnsupportedPrimeError, match="gamma_p is unsupported for p = 2"):
        gamma_p(Fraction(1, 3), 2, 3)


# ── identities ──


@pytest.mark.parametrize(("p", "precision"), [(3, 3), (5, 3), (7, 3), (13, 2)])
def test_identities_hold(p, precision):
    report = gamma_identities_check(p, precision, seed=7)

    assert report.passed, report.failures
    assert report.checks["functional"] == p * p
    assert report.checks["stability"] == 50
    assert report.checks["lipschitz"] == 3


def test_identity_counts():
    assert gamma_identities_check(5, 2).checks == {
        "functional": 25,
        "reflection": 51,
        "linearity": 30,
        "stability": 50,
        "lipschitz": 3,
    }
    assert gamma_identities_check(7, 2).checks["reflection"] == 50
    assert gamma_identities_check(3, 2).checks["linearity"] == 0


def test_identity_samples_are_seeded(rng):
    seed = rng.randint(0, 10**6)

    assert gamma_identities_check(5, 2, seed=seed) == gamma_identities_check(5, 2, seed=seed)


def test_identities_reject_two():
    with pytest.raises(UnsupportedPrimeError):
        gamma_identities_check(2, 3)


@pytest.mark.parametrize(("p", "precision"), [(3, 3), (5, 3), (7, 2), (13, 2)])
def test_gamma_is_stable_under_extra_precision(p, precision, rng):
    report = gamma_identities_check(p, precision, seed=rng.randint(0, 10**6), samples=50)

    assert report.checks["stability"] == 50
    assert not [failure for failure in report.failures if failure.startswith("stability")]


def test_stability_compares_against_the_finer_value():
    x = Fraction(-17, 6)
    finer = gamma_integers([representative(x, 7, 4)], 7, 7**4)

    assert gamma_p(x, 7, 2).congruent(finer[representative(x, 7, 4)], 2)
    assert gamma_p(x, 7, 4).residue() == finer[representative(x, 7, 4)]
