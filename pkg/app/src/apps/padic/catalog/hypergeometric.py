"""Truncated ₃F₂ sums of (1/2)_k³/k!³ type: Van Hamme's (H.2) and (J.2) and their Swisher-type lifts."""

from fractions import Fraction

from apps.padic.base import PParams, Sides, SuperStatement, Target, truncated
from apps.padic.registry import register
from apps.statements.builders import parity_sign


def _half(value: int) -> int:
    return (value - 1) // 2


@register
class VanHammeH2(SuperStatement):
    id = "P-H2"
    label = "Σ (1/2)_k³/k!³ to (p−1)/2 against −Γ_p(1/4)⁴"
    constraint = "p odd prime"
    modulus_text = "p²"
    parameters = ("p",)

    def targets(self, params: PParams) -> list[Target]:
        return [Target(2)]

    def sides(self, params: PParams) -> Sides:
        p = params.p
        lhs = truncated("H", _half(p))
        if p % 4 == 3:
            return Sides(lhs, Fraction(0))
        return Sides(lhs, Fraction(1), gamma=True)


@register
class VanHammeJ2(SuperStatement):
    id = "P-J2"
    label = "Σ (6k+1)(1/2)_k³/(k!³4^k) to (p−1)/2 against (−1)^{(p−1)/2}p"
    constraint = "prime p>3"
    modulus_text = "p⁴"
    parameters = ("p",)
    min_prime = 5

    def targets(self, params: PParams) -> list[Target]:
        return [Target(4)]

    def sides(self, params: PParams) -> Sides:
        p = params.p
        return Sides(truncated("J", _half(p)), Fraction(parity_sign(_half(p)) * p))


@register
class SwisherJ3(SuperStatement):
    id = "P-J3"
    label = "Dwork-type lift of (J.2)"
    constraint = "prime p>3"
    modulus_text = "p^{3r} [p^{4r}]"
    min_prime = 5

    def targets(self, params: PParams) -> list[Target]:
        r = params.r
        return [Target(3 * r), Target(4 * r, informational=True)]

    def sides(self, params: PParams) -> Sides:
        p, r = params.p, params.r
        rhs = parity_sign(_half(p)) * p * truncated("J", _half(p ** (r - 1)))
        return Sides(truncated("J", _half(p**r)), rhs)


@register
class SwisherH3First(SuperStatement):
    id = "P-H3a"
    label = "Dwork-type lift of (H.2), p≡1 (4)"
    constraint = "prime p≡1 (4)"
    modulus_text = "p^{r+1} [p^{3r}]"
    residue = (1, 4)

    def targets(self, params: PParams) -> list[Target]:
        r = params.r
        return [Target(r + 1), Target(3 * r, informational=True)]

    def sides(self, params: PParams) -> Sides:
        p, r = params.p, params.r
        return Sides(truncated("H", _half(p**r)), truncated("H", _half(p ** (r - 1))), gamma=True)


@register
class SwisherH3Second(SuperStatement):
    id = "P-H3b"
    label = "Dwork-type lift of (H.2), p≡3 (4)"
    constraint = "prime p≡3 (4), p>3, r≥2"
    modulus_text = "p^{2r+2} [p^{3r−1}]"
    residue = (3, 4)
    min_prime = 5
    min_r = 2

    def targets(self, params: PParams) -> list[Target]:
        r = params.r
        targets = [Target(2 * r + 2)]
        if 3 * r - 1 > 2 * r + 2:
            targets.append(Target(3 * r - 1, informational=True))
        return targets

    def sides(self, params: PParams) -> Sides:
        p, r = params.p, params.r
        return Sides(truncated("H", _half(p**r)), p * p * truncated("H", _half(p ** (r - 2))))


@register
class MultipleH2(SuperStatement):
    id = "P-H2LIU"
    label = "Σ (1/2)_k³/k!³ to mp−1 against −Γ_p(1/4)⁴·Σ to m−1"
    constraint = "p odd prime, m≥1"
    modulus_text = "p²"
    parameters = ("p", "m")

    def truncation(self, params: PParams) -> int:
        return params.m * params.p

    def targets(self, params: PParams) -> list[Target]:
        return [Target(2)]

    def sides(self, params: PParams) -> Sides:
        p, m = params.p, params.m
        lhs = truncated("H", m * p - 1)
        if p % 4 == 3:
            return Sides(lhs, Fraction(0))
        return Sides(lhs, truncated("H", m - 1), gamma=True)
