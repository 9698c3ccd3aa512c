"""The fixed catalog of summand families and their classical counterparts."""

from fractions import Fraction

from apps.qcomb.qseries import PochFactorSpec

from .exceptions import UnknownFamilyError
from .specs import Bracket, ClassicalTermSpec, CountedFactor, OnePlus, QSummandSpec, QuadraticExponent

HALF = Fraction(1, 2)


def _poch(offset: int, step: int, exponent: int = 1, *, sign: int = 1, multiplier: int = 1) -> CountedFactor:
    return CountedFactor(PochFactorSpec(sign, offset, step, exponent), multiplier)


Q_FAMILIES: dict[str, QSummandSpec] = {
    spec.name: spec
    for spec in (
        # (q;q²)_k²(q²;q⁴)_k q^{2k} / ((q²;q²)_k²(q⁴;q⁴)_k)
        QSummandSpec(
            "F1",
            factors=(_poch(1, 2, 2), _poch(2, 4), _poch(2, 2, -2), _poch(4, 4, -1)),
            qexp=QuadraticExponent(c1=2),
            classical="H",
        ),
        # (1 + q^{4k+1})(q²;q⁴)_k³ q^k / ((1 + q)(q⁴;q⁴)_k³)
        QSummandSpec(
            "F2",
            factors=(_poch(2, 4, 3), _poch(4, 4, -3)),
            one_plus=(OnePlus(4, 1), OnePlus(0, 1, -1)),
            qexp=QuadraticExponent(c1=1),
            classical="H",
        ),
        # (q;q²)_k² / (q²;q²)_k²
        QSummandSpec("F3", factors=(_poch(1, 2, 2), _poch(2, 2, -2)), classical="RV"),
        # (q;q²)_k² q^{2k} / ((q²;q²)_k(q⁴;q⁴)_k)
        QSummandSpec(
            "F4",
            factors=(_poch(1, 2, 2), _poch(2, 2, -1), _poch(4, 4, -1)),
            qexp=QuadraticExponent(c1=2),
            classical="RV2",
        ),
        # q^k [2k, k]_q / (−q;q)_k
        QSummandSpec(
            "F5",
            factors=(_poch(1, 1, multiplier=2), _poch(1, 1, -2), _poch(1, 1, -1, sign=-1)),
            qexp=QuadraticExponent(c1=1),
            classical="CB2",
        ),
        # q^k [2k, k]_q
        QSummandSpec(
            "F6",
            factors=(_poch(1, 1, multiplier=2), _poch(1, 1, -2)),
            qexp=QuadraticExponent(c1=1),
            classical="CB",
        ),
        # (−1)^k [4k+1] (q;q²)_k⁴(q²;q⁴)_k q^k / ((q²;q²)_k⁴(q⁴;q⁴)_k)
        QSummandSpec(
            "F7",
            alternating=True,
            bracket=Bracket(4, 1),
            factors=(_poch(1, 2, 4), _poch(2, 4), _poch(2, 2, -4), _poch(4, 4, -1)),
            qexp=QuadraticExponent(c1=1),
            classical="K5",
        ),
        # (−1)^k [4k+1] (q²;q⁴)_k³ q^k / (q⁴;q⁴)_k³
        QSummandSpec(
            "F8",
            alternating=True,
            bracket=Bracket(4, 1),
            factors=(_poch(2, 4, 3), _poch(4, 4, -3)),
            qexp=QuadraticExponent(c1=1),
            classical="K3",
        ),
        # (−1)^k [3k+1] (q;q²)_k³ / (q;q)_k³
        QSummandSpec(
            "F9",
            alternating=True,
            bracket=Bracket(3, 1),
            factors=(_poch(1, 2, 3), _poch(1, 1, -3)),
            classical="K8",
        ),
        # (−1)^k [4k+1] (q;q²)_k³ q^{k²} / (q²;q²)_k³
        QSummandSpec(
            "F10",
            alternating=True,
            bracket=Bracket(4, 1),
            factors=(_poch(1, 2, 3), _poch(2, 2, -3)),
            qexp=QuadraticExponent(c2=1),
            classical="K3",
        ),
    )
}


CLASSICAL_FAMILIES: dict[str, ClassicalTermSpec] = {
    spec.name: spec
    for spec in (
        ClassicalTermSpec("H", rising=((HALF, 3),), factorial_exponent=3),
        ClassicalTermSpec("J", linear=(6, 1), rising=((HALF, 3),), factorial_exponent=3, geometric=Fraction(1, 4)),
        ClassicalTermSpec("RV", rising=((HALF, 2),), factorial_exponent=2),
        ClassicalTermSpec("RV2", rising=((HALF, 2),), factorial_exponent=2, geometric=HALF),
        ClassicalTermSpec("CB2", rising=((HALF, 1),), factorial_exponent=1, geometric=Fraction(2)),
        ClassicalTermSpec("CB", rising=((HALF, 1),), factorial_exponent=1, geometric=Fraction(4)),
        ClassicalTermSpec("K5", alternating=True, linear=(4, 1), rising=((HALF, 5),), factorial_exponent=5),
        ClassicalTermSpec("K3", alternating=True, linear=(4, 1), rising=((HALF, 3),), factorial_exponent=3),
        ClassicalTermSpec(
            "K8", alternating=True, linear=(3, 1), rising=((HALF, 3),), factorial_exponent=3, geometric=Fraction(8)
        ),
        ClassicalTermSpec("ONE"),
    )
}


def get_family(name: str) -> QSummandSpec:
    try:
        return Q_FAMILIES[name]
    except KeyError:
        raise UnknownFamilyError(name) from None


def get_classical(name: str) -> ClassicalTermSpec:
    try:
        return CLASSICAL_FAMILIES[name]
    except KeyError:
        raise UnknownFamilyError(name) from None
