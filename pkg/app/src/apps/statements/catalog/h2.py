"""Statements around the q-analogues of the ``Σ (1/2)_k³/k!³`` supercongruence (families F1 and F2)."""

from typing import ClassVar

from apps.polyring.modulus import CyclotomicModulus
from apps.statements.base import CongruenceStatement, QParams, Status
from apps.statements.builders import (
    classical_sum,
    dwork_ratio,
    dwork_upper,
    family_sum,
    gamma_square_prefactor,
    h2_prefactor,
    main_modulus,
    single_modulus,
    strong_modulus,
    q_square_prefactor,
)
from apps.statements.expressions import Atom, ClassicalSum, Monomial, QInt, QSum, Side
from apps.statements.registry import register
from apps.summand.families import get_classical, get_family

H2_RATIO = ((3, 4), (5, 4), 2)


def _h2_dwork_prefactor(n: int, r: int) -> list[Atom]:
    numerator, denominator, half = H2_RATIO
    return [QInt(n), *dwork_ratio(n, r, numerator, denominator, half)]


# ── base q-congruences modulo Φ_n² ──


@register
class H2Analogue(CongruenceStatement):
    id = "Q-H2A"
    status = Status.PROVEN
    label = "q-analogue of the (1/2)_k³/k!³ sum, both residue cases"
    constraint = "n odd, n>1"
    modulus_text = "Φ_n²"
    residue = (1, 2)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, 2)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum("F1", (params.n - 1) // 2))

    def rhs(self, params: QParams) -> Side:
        n = params.n
        if n % 4 == 3:
            return Side.zero()
        return Side.of(*gamma_square_prefactor(n), Monomial((n - 1) // 2))


@register
class H2SecondAnalogue(CongruenceStatement):
    id = "Q-H2B"
    status = Status.PROVEN
    label = "second q-analogue with the (1+q^{4k+1}) factor, both residue cases"
    constraint = "n odd, n>1"
    modulus_text = "Φ_n²"
    residue = (1, 2)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, 2)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum("F2", (params.n - 1) // 2))

    def rhs(self, params: QParams) -> Side:
        if params.n % 4 == 3:
            return Side.zero()
        return Side.of(*q_square_prefactor(params.n))


@register
class PrefactorEquivalence(CongruenceStatement):
    id = "Q-EQUIV"
    status = Status.PROVEN
    label = "Γ_p(1/4)⁴-type prefactor equals [n](q³;q⁴)/(q⁵;q⁴)"
    constraint = "n≡1 (4), n>1"
    modulus_text = "Φ_n²"
    residue = (1, 4)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, 2)

    def lhs(self, params: QParams) -> Side:
        n = params.n
        return Side.of(*gamma_square_prefactor(n), Monomial((n - 1) // 2))

    def rhs(self, params: QParams) -> Side:
        return Side.of(*h2_prefactor(params.n))


@register
class ReasonTermwise(CongruenceStatement):
    """Each classical term is congruent to the matching F1 term at ``q^n``."""

    id = "Q-REASON"
    status = Status.PROVEN
    label = "termwise (1/2)_k³/k!³ ≡ F1_k(q^n)"
    constraint = "n odd, n>1, k≥0"
    modulus_text = "Φ_n²"
    parameters = ("n", "k")
    residue = (1, 2)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, 2)

    def lhs(self, params: QParams) -> Side:
        k = params.k or 0
        return Side.of(ClassicalSum(get_classical("H"), k, k))

    def rhs(self, params: QParams) -> Side:
        k = params.k or 0
        return Side.of(QSum(get_family("F1"), k, params.n, k))


# ── Dwork-type theorems ──


@register
class DworkH2(CongruenceStatement):
    id = "Q-MAIN1"
    status = Status.PROVEN
    label = "Dwork-type q-analogue of the (1/2)_k³/k!³ sum"
    constraint = "n≡1 (4), n>1"
    modulus_text = "Φ_{n^r}²·∏_{j<r}Φ_{n^j}"
    parameters = ("n", "r", "d")
    residue = (1, 4)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return main_modulus(params.n, params.r)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum("F1", dwork_upper(params.n, params.r, params.d)))

    def rhs(self, params: QParams) -> Side:
        n, r, d = params.n, params.r, params.d
        return Side.of(*_h2_dwork_prefactor(n, r), family_sum("F1", dwork_upper(n, r - 1, d), scale=n))


@register
class DworkH2Strong(DworkH2):
    id = "C-MAIN1-STRONG"
    status = Status.CONJECTURE
    label = "Dwork-type F1 congruence with every Φ_{n^j} squared"
    modulus_text = "∏_{j≤r}Φ_{n^j}²"

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return strong_modulus(params.n, params.r)


@register
class DworkH2Second(CongruenceStatement):
    id = "Q-MAIN3"
    status = Status.PROVEN
    label = "Dwork-type q-analogue with the (1+q^{4k+1}) factor"
    constraint = "n≡1 (4), n>1"
    modulus_text = "Φ_{n^r}²·∏_{j<r}Φ_{n^j}"
    parameters = ("n", "r", "d")
    residue = (1, 4)

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return main_modulus(params.n, params.r)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum("F2", dwork_upper(params.n, params.r, params.d)))

    def rhs(self, params: QParams) -> Side:
        n, r, d = params.n, params.r, params.d
        numerator, denominator, half = H2_RATIO
        return Side.of(
            QInt(n, 2),
            *dwork_ratio(n, r, numerator, denominator, half),
            Monomial((1 - n) // 2),
            family_sum("F2", dwork_upper(n, r - 1, d), scale=n),
        )


@register
class DworkH2SecondStrong(DworkH2Second):
    id = "C-MAIN3-STRONG"
    status = Status.CONJECTURE
    label = "Dwork-type F2 congruence with every Φ_{n^j} squared"
    modulus_text = "∏_{j≤r}Φ_{n^j}²"

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return strong_modulus(params.n, params.r)


# ── sums over mn terms ──


class _MultipleSum(CongruenceStatement):
    """``Σ_{k=0}^{mn−1} family ≡ prefactor · Σ_{k<m} H_k``, or ≡ 0 when there is no prefactor."""

    family: ClassVar[str]
    parameters = ("n", "m")
    exponent: ClassVar[int]

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n, self.exponent)

    def lhs(self, params: QParams) -> Side:
        return Side.of(family_sum(self.family, params.m * params.n - 1))

    def prefactor(self, n: int) -> list[Atom] | None:
        return None

    def rhs(self, params: QParams) -> Side:
        prefactor = self.prefactor(params.n)
        if prefactor is None:
            return Side.zero()
        return Side.of(*prefactor, classical_sum("H", params.m))


@register
class H2Multiple(_MultipleSum):
    id = "Q-LEM22"
    status = Status.PROVEN
    label = "F1 summed over mn terms against the classical partial sum"
    constraint = "n≡1 (4), n>1, m≥1"
    modulus_text = "Φ_n"
    residue = (1, 4)
    family = "F1"
    exponent = 1

    def prefactor(self, n: int) -> list[Atom] | None:
        return h2_prefactor(n)


@register
class H2MultipleSquare(H2Multiple):
    id = "C-61"
    status = Status.CONJECTURE
    label = "F1 over mn terms, refined to Φ_n²"
    modulus_text = "Φ_n²"
    exponent = 2


@register
class H2MultipleVanishing(_MultipleSum):
    id = "Q-OLD1"
    status = Status.PROVEN
    label = "F1 over mn terms vanishes for n≡3 (4)"
    constraint = "n≡3 (4), m≥1"
    modulus_text = "Φ_n²"
    residue = (3, 4)
    family = "F1"
    exponent = 2


@register
class H2SecondMultiple(_MultipleSum):
    id = "Q-DIFF"
    status = Status.PROVEN
    label = "F2 summed over mn terms against the classical partial sum"
    constraint = "n≡1 (4), n>1, m≥1"
    modulus_text = "Φ_n"
    residue = (1, 4)
    family = "F2"
    exponent = 1

    def prefactor(self, n: int) -> list[Atom] | None:
        return q_square_prefactor(n)


@register
class H2SecondMultipleSquare(H2SecondMultiple):
    id = "C-62"
    status = Status.CONJECTURE
    label = "F2 over mn terms, refined to Φ_n²"
    modulus_text = "Φ_n²"
    exponent = 2


@register
class H2SecondMultipleVanishing(_MultipleSum):
    id = "Q-OLD2"
    status = Status.PROVEN
    label = "F2 over mn terms vanishes for n≡3 (4)"
    constraint = "n≡3 (4), m≥1"
    modulus_text = "Φ_n²"
    residue = (3, 4)
    family = "F2"
    exponent = 2


# ── stability of the Dwork prefactor in r ──


class _PrefactorStability(CongruenceStatement):
    """The same prefactor at level r and at level s < r agree modulo a power of Φ_{n^s}."""

    parameters = ("n", "r", "s")
    residue = (1, 4)
    constraint = "n≡1 (4), n>1, r>s≥1"
    exponent: ClassVar[int]

    def modulus(self, params: QParams) -> CyclotomicModulus:
        return single_modulus(params.n ** (params.s or 1), self.exponent)

    def prefactor(self, n: int, level: int) -> list[Atom]:
        return _h2_dwork_prefactor(n, level)

    def lhs(self, params: QParams) -> Side:
        return Side.of(*self.prefactor(params.n, params.r))

    def rhs(self, params: QParams) -> Side:
        return Side.of(*self.prefactor(params.n, params.s or 1))


@register
class PrefactorStability(_PrefactorStability):
    id = "Q-LEM23"
    status = Status.PROVEN
    label = "Dwork prefactor at level r agrees with level s"
    modulus_text = "Φ_{n^s}"
    exponent = 1


@register
class PrefactorStabilitySquare(_PrefactorStability):
    id = "C-63"
    status = Status.CONJECTURE
    label = "Dwork prefactor stability refined to Φ_{n^s}²"
    modulus_text = "Φ_{n^s}²"
    exponent = 2


@register
class HalfRatioStability(_PrefactorStability):
    id = "C-64"
    status = Status.CONJECTURE
    label = "(q;q²)/(q²;q²) ratio at level r agrees with level s"
    modulus_text = "Φ_{n^s}²"
    exponent = 2

    def prefactor(self, n: int, level: int) -> list[Atom]:
        return dwork_ratio(n, level, (1, 2), (2, 2), 4)
