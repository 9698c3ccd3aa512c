"""Statements on squared central binomial sums (families F3–F6) and their Dwork-type extensions."""

import abc
from typing import ClassVar

from apps.polyring.modulus import CyclotomicModulus
from apps.qcomb.kronecker import kronecker
from apps.statements.base import CongruenceStatement, QParams, Status, integral
from apps.statements.builders import (
    classical_sum,
    dwork_ratio,
    dwork_upper,
    family_sum,
    main_modulus,
    parity_sign,
    poch,
    signed_side,
    single_modulus,
)
from apps.statements.expressions import Atom, Monomial, Side
from apps.statements.registry import register


def _rv_constant(n: int) -> tuple[int, int]:
    """Sign and q-exponent of ``(−1)^{(n−1)/2} q^{(1−n²)/4}``."""
    return parity_sign((n - 1) // 2), (1 - n * n) // 4


def _signed_binomial_constant(n: int) -> tuple[int, int]:
    """Sign and q-exponent of ``(−1)^{(n−1)/2} q^{(n²−1)/4}``."""
    return parity_sign((n - 1) // 2), (n * n - 1) // 4


def _gauss_factors(statement_id: str, n: int) -> list[Atom]:
    """``q^{(n−1)(n+3)/8}(q²;q⁴)_{(n−1)/4}/(q⁴;q⁴)_{(n−1)/4}``."""
    quarter = (n - 1) // 4
    exponent = integral(statement_id, (n - 1) * (n + 3), 8, "q-exponent")
    return [Monomial(exponent), poch(2, 4, quarter), poch(4, 4, quarter, -1)]


# ── squared half-integer rising factorials, family F3 ──


@register
class CentralSquares(CongruenceStatement):
    id = "Q-GPZ"
    status = Status.PROVEN
    label = "q-analogue of Σ (1/2)_k²/k!² ≡ (−1)^{(p−1)/2}"
    constraint = "n odd, n>1"
    modulus_text = "Φ_n²"
    residue = (1, 2)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, 2)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum("F3", (params.n - 1) // 2))

    def rhs(self, params: QParams) -> Side:
        symbol, exponent = _rv_constant(params.n)
        return signed_side(symbol, lambda: [Monomial(exponent)])


@register
class CentralSquaresMultiple(CongruenceStatement):
    id = "Q-GPZM"
    status = Status.PROVEN
    label = "F3 over mn terms against Σ_{k<m}(1/2)_k²/k!²"
    constraint = "n odd, n>1, m≥1"
    modulus_text = "Φ_n"
    parameters = ("n", "m")
    residue = (1, 2)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, 1)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum("F3", params.m * params.n - 1))

    def rhs(self, params: QParams) -> Side:
        symbol, exponent = _rv_constant(params.n)
        return signed_side(symbol, lambda: [Monomial(exponent), classical_sum("RV", params.m)])


@register
class DworkCentralSquares(CongruenceStatement):
    id = "Q-T51"
    status = Status.PROVEN
    label = "Dwork-type q-analogue of Σ (1/2)_k²/k!²"
    constraint = "n odd, n>1"
    modulus_text = "Φ_{n^r}²·∏_{j<r}Φ_{n^j}"
    parameters = ("n", "r", "d")
    residue = (1, 2)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return main_modulus(params.n, params.r)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum("F3", dwork_upper(params.n, params.r, params.d)))

    def rhs(self, params: QParams) -> Side:
        n, r, d = params.n, params.r, params.d
        exponent = integral(self.id, (1 - n) * (1 + n ** (2 * r - 1)), 4, "q-exponent")
        return signed_side(
            parity_sign((n - 1) // 2),
            lambda: [Monomial(exponent), family_sum("F3", dwork_upper(n, r - 1, d), scale=n)],
        )


# ── Gauss ₂F₁(−1) type, family F4 ──


@register
class GaussSum(CongruenceStatement):
    id = "Q-GAUSS"
    status = Status.PROVEN
    label = "q-analogue of Gauss' 2F1(−1) sum, both residue cases"
    constraint = "n odd, n>1"
    modulus_text = "Φ_n²"
    residue = (1, 2)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, 2)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum("F4", (params.n - 1) // 2))

    def rhs(self, params: QParams) -> Side:
        n = params.n
        if n % 4 == 3:
            return Side.zero()
        return signed_side(kronecker(-2, n), lambda: _gauss_factors(self.id, n))


@register
class GaussSumMultiple(CongruenceStatement):
    id = "Q-GAUSSM"
    status = Status.PROVEN
    label = "F4 over mn terms against Σ_{k<m}(1/2)_k²/(2^k k!²)"
    constraint = "n≡1 (4), n>1, m≥1"
    modulus_text = "Φ_n"
    parameters = ("n", "m")
    residue = (1, 4)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, 1)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum("F4", params.m * params.n - 1))

    def rhs(self, params: QParams) -> Side:
        n = params.n
        return signed_side(kronecker(-2, n), lambda: [*_gauss_factors(self.id, n), classical_sum("RV2", params.m)])


@register
class DworkGaussSum(CongruenceStatement):
    id = "Q-T52"
    status = Status.PROVEN
    label = "Dwork-type q-analogue of Gauss' 2F1(−1) sum"
    constraint = "n≡1 (4), n>1"
    modulus_text = "Φ_{n^r}²·∏_{j<r}Φ_{n^j}"
    parameters = ("n", "r", "d")
    residue = (1, 4)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return main_modulus(params.n, params.r)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum("F4", dwork_upper(params.n, params.r, params.d)))

    def rhs(self, params: QParams) -> Side:
        n, r, d = params.n, params.r, params.d

        def factors() -> list[Atom]:
            exponent = integral(self.id, (n - 1) * (n ** (2 * r - 1) + 3), 8, "q-exponent")
            return [
                Monomial(exponent),
                *dwork_ratio(n, r, (2, 4), (4, 4), 4),
                family_sum("F4", dwork_upper(n, r - 1, d), scale=n),
            ]

        return signed_side(kronecker(-2, n), factors)


# ── central binomial sums, families F5 and F6 ──


class _CentralBinomial(CongruenceStatement):
    """``Σ_{k=0}^{upper} family ≡ symbol · q^{exponent} [· Σ_{k<m} classical]`` modulo ``Φ_n^e``."""

    family: ClassVar[str]
    exponent: ClassVar[int]
    classical: ClassVar[str | None] = None

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, self.exponent)

    def upper(self, params: QParams) -> int:
        return params.n - 1

    def constant(self, n: int) -> tuple[int, int]:
        return _signed_binomial_constant(n)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum(self.family, self.upper(params)))

    def rhs(self, params: QParams) -> Side:
        symbol, exponent = self.constant(params.n)

        def factors() -> list[Atom]:
            atoms: list[Atom] = [Monomial(exponent)]
            if self.classical is not None:
                atoms.append(classical_sum(self.classical, params.m))
            return atoms

        return signed_side(symbol, factors)


class _SignedCentralBinomial(_CentralBinomial):
    family = "F5"
    residue = (1, 2)


class _PlainCentralBinomial(_CentralBinomial):
    """Sums of ``q^k[2k,k]``; the constant ``(−3/n) q^{(n²−1)/3}`` vanishes when ``3 | n``."""

    family = "F6"

    def constant(self, n: int) -> tuple[int, int]:
        symbol = kronecker(-3, n)
        if symbol == 0:
            return 0, 0
        return symbol, integral(self.id, n * n - 1, 3, "q-exponent")


@register
class CentralBinomialSigned(_SignedCentralBinomial):
    id = "Q-TAU"
    status = Status.PROVEN
    label = "Σ q^k[2k,k]/(−q;q)_k over n terms"
    constraint = "n odd, n>1"
    modulus_text = "Φ_n²"
    exponent = 2


@register
class CentralBinomial(_PlainCentralBinomial):
    id = "Q-LP"
    status = Status.PROVEN
    label = "Σ q^k[2k,k] over n terms"
    constraint = "n>1"
    modulus_text = "Φ_n²"
    exponent = 2


@register
class CentralBinomialSignedMultiple(_SignedCentralBinomial):
    id = "Q-PF11"
    status = Status.PROVEN
    label = "Σ q^k[2k,k]/(−q;q)_k over mn terms against Σ_{k<m} C(2k,k)/2^k"
    constraint = "n odd, n>1, m≥1"
    modulus_text = "Φ_n"
    parameters = ("n", "m")
    exponent = 1
    classical = "CB2"

    def upper(self, params: QParams) -> int:
        return params.m * params.n - 1


@register
class CentralBinomialMultiple(_PlainCentralBinomial):
    id = "Q-PF22"
    status = Status.PROVEN
    label = "Σ q^k[2k,k] over mn terms against Σ_{k<m} C(2k,k)"
    constraint = "n>1, m≥1"
    modulus_text = "Φ_n"
    parameters = ("n", "m")
    exponent = 1
    classical = "CB"

    def upper(self, params: QParams) -> int:
        return params.m * params.n - 1


@register
class CentralBinomialSignedHalf(_SignedCentralBinomial):
    id = "Q-PF33"
    status = Status.PROVEN
    label = "Σ q^k[2k,k]/(−q;q)_k truncated at (n−1)/2"
    constraint = "n odd, n>1"
    modulus_text = "Φ_n"
    exponent = 1

    def upper(self, params: QParams) -> int:
        return (params.n - 1) // 2


@register
class CentralBinomialHalf(_PlainCentralBinomial):
    id = "Q-PF44"
    status = Status.PROVEN
    label = "Σ q^k[2k,k] truncated at (n−1)/2"
    constraint = "n odd, n>1"
    modulus_text = "Φ_n"
    residue = (1, 2)
    exponent = 1

    def upper(self, params: QParams) -> int:
        return (params.n - 1) // 2


# ── Dwork-type central binomial sums ──


def _dwork_binomial_modulus(n: int, r: int, d: int) -> CyclotomicModulus:
    """``Φ_{n^r}^{2−d} · ∏_{j=1}^{r} Φ_{n^j}``."""
    return main_modulus(n, r) if d == 1 else CyclotomicModulus(tuple((n**j, 1) for j in range(1, r + 1)))


class _DworkCentralBinomial(CongruenceStatement):
    family: ClassVar[str]
    parameters = ("n", "r", "d")
    modulus_text = "Φ_{n^r}^{2−d}·∏_{j≤r}Φ_{n^j}"

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return _dwork_binomial_modulus(params.n, params.r, params.d)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum(self.family, dwork_upper(params.n, params.r, params.d)))

    @abc.abstractmethod
    def symbol(self, n: int) -> int: ...

    @abc.abstractmethod
    def exponent(self, n: int, r: int) -> int: ...

    def rhs(self, params: QParams) -> Side:
        n, r, d = params.n, params.r, params.d
        return signed_side(
            self.symbol(n),
            lambda: [Monomial(self.exponent(n, r)), family_sum(self.family, dwork_upper(n, r - 1, d), scale=n)],
        )


@register
class DworkCentralBinomialSigned(_DworkCentralBinomial):
    id = "Q-T53a"
    status = Status.PROVEN
    label = "Dwork-type Σ q^k[2k,k]/(−q;q)_k"
    constraint = "n odd, n>1"
    residue = (1, 2)
    family = "F5"

    def symbol(self, n: int) -> int:
        return parity_sign((n - 1) // 2)

    def exponent(self, n: int, r: int) -> int:
        return integral(self.id, (n - 1) * (1 + n ** (2 * r - 1)), 4, "q-exponent")


@register
class DworkCentralBinomial(_DworkCentralBinomial):
    id = "Q-T53b"
    status = Status.PROVEN
    label = "Dwork-type Σ q^k[2k,k]"
    constraint = "n>1; n odd unless d=1"
    family = "F6"

    def admits(self, params: QParams) -> bool:
        return super().admits(params) and (params.n % 2 == 1 or params.d == 1)

    def symbol(self, n: int) -> int:
        return kronecker(-3, n)

    def exponent(self, n: int, r: int) -> int:
        return integral(self.id, (n - 1) * (1 + n ** (2 * r - 1)), 3, "q-exponent")

    def notes(self, params: QParams) -> list[str]:
        if self.symbol(params.n) == 0:
            return ["(−3/n) = 0: right-hand side taken as 0"]
        return []
