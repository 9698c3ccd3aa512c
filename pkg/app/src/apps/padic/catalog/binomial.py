from fractions import Fraction

from apps.padic.base import PParams, Sides, SuperStatement, Target, truncated
from apps.padic.registry import register
from apps.qcomb.kronecker import kronecker
from apps.statements.builders import parity_sign


@register
class SquaredCentralBinomial(SuperStatement):
    id = "P-RV"
    label = "Σ (1/2)_k²/k!² to (p−1)/2 against (−1)^{(p−1)/2}"
    constraint = "p odd prime"
    modulus_text = "p²"
    parameters = ("p",)

    def targets(self, params: PParams) -> list[Target]:
        return [Target(2)]

    def sides(self, params: PParams) -> Sides:
        half = (params.p - 1) // 2
        return Sides(truncated("RV", half), Fraction(parity_sign(half)))


@register
class HalvedCentralBinomial(SuperStatement):
    id = "P-SUN55"
    label = "Σ C(2k,k)/2^k, Dwork-type"
    constraint = "p odd prime"
    modulus_text = "p^{2r}"

    def targets(self, params: PParams) -> list[Target]:
        return [Target(2 * params.r)]

    def sides(self, params: PParams) -> Sides:
        p, r = params.p, params.r
        return Sides(truncated("CB2", p**r - 1), kronecker(-1, p) * truncated("CB2", p ** (r - 1) - 1))


@register
class CentralBinomial(SuperStatement):
    id = "P-SUN66"
    label = "Σ C(2k,k), Dwork-type"
    constraint = "any prime p"
    modulus_text = "p^{2r}"
    min_prime = 2

    def targets(self, params: PParams) -> list[Target]:
        return [Target(2 * params.r)]

    def sides(self, params: PParams) -> Sides:
        p, r = params.p, params.r
        return Sides(truncated("CB", p**r - 1), kronecker(-3, p) * truncated("CB", p ** (r - 1) - 1))
