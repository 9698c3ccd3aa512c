from apps.polyring.cyclotomic import phi_valuation
from apps.polyring.modulus import CyclotomicModulus
from apps.polyring.ratpoly import RatPoly

from .reports import FactorRecord


def congruent(a: RatPoly, b: RatPoly, modulus: CyclotomicModulus) -> list[FactorRecord]:
    """Per-factor verdicts for ``a ≡ b (mod ∏ Φ_N^e)``.

    Valuations are taken over ℚ[q]; since every Φ_N is monic and primitive, Φ_N^e divides the numerator of
    ``a − b`` over ℚ[q] exactly when it does over ℤ[q].
    """
    difference = a - b
    records = []
    for index, exponent in modulus:
        achieved = None if difference.is_zero else phi_valuation(difference, index)[0]
        records.append(FactorRecord.judge(index, exponent, achieved))
    return records
