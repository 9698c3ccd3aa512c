"""Alternating sums with a ``[ak+1]`` bracket (families F7–F10) over mn terms, and their m = 1 cases."""

import abc
from typing import ClassVar

from apps.polyring.modulus import CyclotomicModulus
from apps.statements.base import CongruenceStatement, QParams, Status
from apps.statements.builders import (
    classical_sum,
    family_sum,
    gamma_square_prefactor,
    parity_sign,
    poch,
    sign,
    single_modulus,
)
from apps.statements.expressions import Atom, Monomial, QInt, Side
from apps.statements.registry import register


class _AlternatingSum(CongruenceStatement):
    """``Σ_{k=0}^{mn−1} family ≡ prefactor · Σ_{k<m} classical (mod Φ_n^e)``."""

    family: ClassVar[str]
    classical: ClassVar[str]
    exponent: ClassVar[int]
    parameters = ("n", "m")

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, self.exponent)

    @abc.abstractmethod
    def prefactor(self, n: int) -> list[Atom]: ...

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum(self.family, params.m * params.n - 1))

    def rhs(self, params: QParams) -> Side:
        return Side.of(*self.prefactor(params.n), classical_sum(self.classical, params.m))


class _FirstBlock(_AlternatingSum):
    """The ``m = 1`` case of an mn-term statement, which is known to a higher power of Φ_n."""

    parameters = ("n",)

    def admits(self, params: QParams) -> bool:
        return params.m == 1 and super().admits(params)


def _signed_bracket_prefactor(n: int) -> list[Atom]:
    """``(−1)^{(n−1)/2} q^{(n−1)²/4} [n]``."""
    return [sign(parity_sign((n - 1) // 2)), Monomial((n - 1) ** 2 // 4), QInt(n)]


# ── family F7 ──


@register
class QuinticAlternating(_AlternatingSum):
    id = "C-65"
    status = Status.CONJECTURE
    label = "(−1)^k[4k+1] sum of fourth powers over mn terms"
    constraint = "n≡1 (4), n>1, m≥1"
    modulus_text = "Φ_n³"
    residue = (1, 4)
    family = "F7"
    classical = "K5"
    exponent = 3

    def prefactor(self, n: int) -> list[Atom]:
        return [QInt(n), *gamma_square_prefactor(n)]


@register
class QuinticAlternatingFirst(_FirstBlock, QuinticAlternating):
    id = "Q-C65-M1"
    status = Status.PROVEN
    label = "(−1)^k[4k+1] sum of fourth powers over n terms"
    constraint = "n≡1 (4), n>1"


# ── family F8 ──


@register
class CubicAlternating(_AlternatingSum):
    id = "C-66"
    status = Status.CONJECTURE
    label = "(−1)^k[4k+1](q²;q⁴)_k³/(q⁴;q⁴)_k³ over mn terms"
    constraint = "n odd, n>1, m≥1"
    modulus_text = "Φ_n³"
    residue = (1, 2)
    family = "F8"
    classical = "K3"
    exponent = 3

    def prefactor(self, n: int) -> list[Atom]:
        """``[n]_{q²}(−q³;q⁴)_{(n−1)/2}/(−q⁵;q⁴)_{(n−1)/2} · (−q)^{(1−n)/2}``."""
        half = (n - 1) // 2
        return [
            sign(parity_sign(half)),
            Monomial(-half),
            QInt(n, 2),
            poch(3, 4, half, sign=-1),
            poch(5, 4, half, -1, sign=-1),
        ]


@register
class CubicAlternatingFirst(_FirstBlock, CubicAlternating):
    id = "Q-C66-M1"
    status = Status.PROVEN
    label = "(−1)^k[4k+1](q²;q⁴)_k³/(q⁴;q⁴)_k³ over n terms"
    constraint = "n odd, n>1"


# ── family F9 ──


@register
class CubicBracketThree(_AlternatingSum):
    id = "C-67"
    status = Status.CONJECTURE
    label = "(−1)^k[3k+1](q;q²)_k³/(q;q)_k³ over mn terms"
    constraint = "n odd, n>1, m≥1"
    modulus_text = "Φ_n²"
    residue = (1, 2)
    family = "F9"
    classical = "K8"
    exponent = 2

    def prefactor(self, n: int) -> list[Atom]:
        return _signed_bracket_prefactor(n)


@register
class CubicBracketThreeFirst(_FirstBlock, CubicBracketThree):
    id = "Q-C67-M1"
    status = Status.PROVEN
    label = "(−1)^k[3k+1](q;q²)_k³/(q;q)_k³ over n terms"
    constraint = "n odd, n>1"
    modulus_text = "Φ_n³"
    exponent = 3


# ── family F10 ──


@register
class CubicQuadraticExponent(_AlternatingSum):
    id = "C-68"
    status = Status.CONJECTURE
    label = "(−1)^k[4k+1](q;q²)_k³ q^{k²}/(q²;q²)_k³ over mn terms"
    constraint = "n odd, n>1, m≥1"
    modulus_text = "Φ_n²"
    residue = (1, 2)
    family = "F10"
    classical = "K3"
    exponent = 2

    def prefactor(self, n: int) -> list[Atom]:
        return _signed_bracket_prefactor(n)


@register
class CubicQuadraticExponentFirst(_FirstBlock, CubicQuadraticExponent):
    id = "Q-C68-M1"
    status = Status.PROVEN
    label = "(−1)^k[4k+1](q;q²)_k³ q^{k²}/(q²;q²)_k³ over n terms"
    constraint = "n odd, n>1"
    modulus_text = "Φ_n³"
    exponent = 3
