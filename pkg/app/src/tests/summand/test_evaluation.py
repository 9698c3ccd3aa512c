import pytest

from apps.localring.values import local_embed
from apps.summand.evaluation import degree_bound, denominator_valuation, sum_local, sum_q, term_local, term_q
from apps.summand.families import get_family


@pytest.mark.parametrize(
    ("name", "index", "upper", "scale"),
    [
        ("F1", 5, 4, 1),
        ("F2", 3, 2, 1),
        ("F3", 7, 6, 1),
        ("F4", 5, 4, 1),
        ("F5", 3, 5, 1),
        ("F6", 5, 4, 1),
        ("F7", 5, 4, 1),
        ("F8", 9, 6, 1),
        ("F9", 5, 4, 1),
        ("F10", 3, 5, 1),
        ("F3", 5, 4, 2),
        ("F7", 3, 4, 3),
    ],
)
def test_local_sum_matches_dense(name, index, upper, scale):
    spec = get_family(name)
    deficit = denominator_valuation(spec, upper, scale, index)
    working = 3 + deficit

    local = sum_local(spec, 0, upper, scale, index, working)
    exact = local_embed(sum_q(spec, 0, upper, scale), index, working)

    assert (local - exact).lower_bound >= working - deficit


@pytest.mark.parametrize(("name", "k", "index"), [("F1", 3, 5), ("F7", 2, 3), ("F5", 4, 7), ("F2", 3, 4)])
def test_local_term_matches_dense(name, k, index):
    spec = get_family(name)

    local = term_local(spec, k, 1, index, 3)
    exact = local_embed(term_q(spec, k), index, 3)

    assert (local - exact).lower_bound >= min(local.absolute_precision, exact.absolute_precision)


def test_denominator_valuation():
    # (q²;q²)_4² carries Φ_3 from 1 − q⁶ twice; (q⁴;q⁴)_4 once more from 1 − q¹².
    assert denominator_valuation(get_family("F1"), 4, 1, 3) == 3
    assert denominator_valuation(get_family("F1"), 1, 1, 3) == 0


@pytest.mark.parametrize("name", ("F1", "F2", "F5", "F7", "F9"))
def test_degree_bound(name):
    spec = get_family(name)
    total = sum_q(spec, 0, 5)

    assert total.num.degree + total.den.degree <= degree_bound(spec, 5)
