"""Classical limits of the Dwork-type q-congruences, prime ``n = p`` and ``q → 1``."""

from fractions import Fraction

from apps.padic.base import PParams, Sides, SuperStatement, Target, rising, truncated
from apps.padic.registry import register
from apps.qcomb.kronecker import kronecker
from apps.statements.builders import parity_sign

ONE = Fraction(1)
HALF = Fraction(1, 2)


def quarter_prefactor(p: int, r: int) -> Fraction:
    """``p·(3/4)_L(5/4)_{L'} / ((5/4)_L(3/4)_{L'})`` with ``L = (p^r−1)/2`` and ``L' = (p^{r−1}−1)/2``."""
    upper, lower = (p**r - 1) // 2, (p ** (r - 1) - 1) // 2
    three, five = Fraction(3, 4), Fraction(5, 4)
    return p * rising(three, upper) * rising(five, lower) / (rising(five, upper) * rising(three, lower))


def gauss_prefactor(p: int, r: int) -> Fraction:
    """``(1/2)_A(1)_B / ((1)_A(1/2)_B)`` with ``A = (p^r−1)/4`` and ``B = (p^{r−1}−1)/4``."""
    upper, lower = (p**r - 1) // 4, (p ** (r - 1) - 1) // 4
    return rising(HALF, upper) * rising(ONE, lower) / (rising(ONE, upper) * rising(HALF, lower))


@register
class QuarterGammaPrefactor(SuperStatement):
    id = "P-T12"
    label = "Rising-factorial quotient against −Γ_p(1/4)⁴"
    constraint = "prime p≡1 (4)"
    modulus_text = "p^{2r}"
    residue = (1, 4)

    def targets(self, params: PParams) -> list[Target]:
        return [Target(2 * params.r)]

    def sides(self, params: PParams) -> Sides:
        return Sides(quarter_prefactor(params.p, params.r), ONE, gamma=True)


@register
class HalfTruncationH2(SuperStatement):
    id = "P-DIS1"
    label = "Dwork-type (H.2) truncated at (p^r−1)/2"
    constraint = "prime p≡1 (4)"
    modulus_text = "p^{r+1} [p^{2r}]"
    residue = (1, 4)

    def targets(self, params: PParams) -> list[Target]:
        r = params.r
        return [Target(r + 1), Target(2 * r, informational=True)]

    def sides(self, params: PParams) -> Sides:
        p, r = params.p, params.r
        return Sides(truncated("H", (p**r - 1) // 2), truncated("H", (p ** (r - 1) - 1) // 2), gamma=True)


@register
class FullTruncationH2(SuperStatement):
    id = "P-DIS2"
    label = "Dwork-type (H.2) truncated at p^r−1"
    constraint = "prime p≡1 (4)"
    modulus_text = "p^{r+1} [p^{3r}]"
    residue = (1, 4)

    def targets(self, params: PParams) -> list[Target]:
        r = params.r
        return [Target(r + 1), Target(3 * r, informational=True)]

    def sides(self, params: PParams) -> Sides:
        p, r = params.p, params.r
        return Sides(truncated("H", p**r - 1), truncated("H", p ** (r - 1) - 1), gamma=True)


@register
class DworkSquareSum(SuperStatement):
    id = "P-T51C"
    label = "Dwork-type Σ (1/2)_k²/k!²"
    constraint = "p odd prime"
    modulus_text = "p^{r+1} [p^{2r}]"
    parameters = ("p", "r", "d")

    def targets(self, params: PParams) -> list[Target]:
        r = params.r
        return [Target(r + 1), Target(2 * r, informational=True)]

    def sides(self, params: PParams) -> Sides:
        p, r, d = params.p, params.r, params.d
        rhs = parity_sign((p - 1) // 2) * truncated("RV", (p ** (r - 1) - 1) // d)
        return Sides(truncated("RV", (p**r - 1) // d), rhs)


@register
class DworkGaussSum(SuperStatement):
    id = "P-T52C"
    label = "Dwork-type Σ (1/2)_k²/(2^k k!²)"
    constraint = "prime p≡1 (4)"
    modulus_text = "p^{r+1} [p^{2r}]"
    parameters = ("p", "r", "d")
    residue = (1, 4)

    def targets(self, params: PParams) -> list[Target]:
        r = params.r
        return [Target(r + 1), Target(2 * r, informational=True)]

    def sides(self, params: PParams) -> Sides:
        p, r, d = params.p, params.r, params.d
        rhs = kronecker(-2, p) * gauss_prefactor(p, r) * truncated("RV2", (p ** (r - 1) - 1) // d)
        return Sides(truncated("RV2", (p**r - 1) // d), rhs)
