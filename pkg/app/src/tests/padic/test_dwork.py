from fractions import Fraction

import pytest

from apps.padic.dwork import DworkSeries, dwork_check
from apps.padic.exceptions import NotPadicIntegerError
from apps.summand.exceptions import UnknownFamilyError


@pytest.fixture
def h_series() -> DworkSeries:
    return DworkSeries.named("H")


def test_coefficients(h_series):
    assert h_series.coefficients(3, 5) == [1, Fraction(1, 8), Fraction(27, 512)]


def test_coefficients_must_be_padic_integers(h_series):
    with pytest.raises(NotPadicIntegerError, match="A_1 = 1/8"):
        h_series.coefficients(3, 2)


def test_unknown_family():
    with pytest.raises(UnknownFamilyError):
        DworkSeries.named("nope")


@pytest.mark.parametrize(("p", "r"), [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2)])
def test_hypergeometric_series(h_series, p, r):
    report = dwork_check(h_series, p, r)

    assert report.passed
    assert report.guard
    assert report.zdeg == p ** (r + 1) - 1
    assert report.achieved is None or report.achieved >= r
    assert report.notes == []


@pytest.mark.parametrize(("p", "r"), [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)])
def test_constant_series_is_exact(p, r):
    report = dwork_check(DworkSeries.named("ONE"), p, r)

    assert report.passed
    assert report.achieved is None
    assert report.worst_degree is None


def test_worst_degree_is_reported(h_series):
    # z³: A_3 − A_0·A_1 = 125/4096 − 1/8 = −387/4096 and 387 = 3²·43
    report = dwork_check(h_series, 3, 1)

    assert report.achieved == 2
    assert report.worst_degree == 3
    assert report.passed


def test_custom_degree(h_series):
    assert dwork_check(h_series, 5, 1, zdeg=4).zdeg == 4


def test_level_must_be_positive(h_series):
    with pytest.raises(ValueError, match="r must be positive"):
        dwork_check(h_series, 3, 0)


def test_report_json(h_series):
    data = dwork_check(h_series, 3, 1).model_dump(by_alias=True)

    assert data["kind"] == "dwork"
    assert data["family"] == "H"
    assert data["pass"] is True
