"""Shared pieces of the catalog: truncation points, moduli and recurring prefactors."""

from collections.abc import Callable, Iterable
from fractions import Fraction

from apps.polyring.modulus import CyclotomicModulus
from apps.qcomb.qseries import PochFactorSpec
from apps.summand.families import get_classical, get_family

from .expressions import Atom, ClassicalSum, Constant, Monomial, Poch, QInt, QSum, Side


def dwork_upper(n: int, r: int, d: int) -> int:
    """``(n^r − 1)/d``; exact for odd n and ``d ∈ {1, 2}``, floored otherwise."""
    return (n**r - 1) // d


def family_sum(name: str, upper: int, scale: int = 1, lower: int = 0) -> QSum:
    return QSum(get_family(name), upper, scale, lower)


def classical_sum(name: str, count: int) -> ClassicalSum:
    """``Σ_{k<count}`` of a classical family."""
    return ClassicalSum(get_classical(name), count - 1)


def poch(offset: int, step: int, count: int, exponent: int = 1, sign: int = 1) -> Poch:
    return Poch(PochFactorSpec(sign, offset, step, exponent), count)


def sign(value: int) -> Constant:
    return Constant(Fraction(value))


# ── moduli ──


def single_modulus(n: int, exponent: int) -> CyclotomicModulus:
    return CyclotomicModulus(((n, exponent),))


def main_modulus(n: int, r: int) -> CyclotomicModulus:
    """``Φ_{n^r} · ∏_{j=1}^{r} Φ_{n^j}``."""
    return CyclotomicModulus(tuple((n**j, 2 if j == r else 1) for j in range(1, r + 1)))


def strong_modulus(n: int, r: int) -> CyclotomicModulus:
    """``∏_{j=1}^{r} Φ_{n^j}²``."""
    return CyclotomicModulus(tuple((n**j, 2) for j in range(1, r + 1)))


# ── prefactors ──


def dwork_ratio(n: int, r: int, numerator: tuple[int, int], denominator: tuple[int, int], half: int) -> list[Atom]:
    """``(q^a;q^c)_{L}(q^{b n};q^{c n})_{L'} / ((q^b;q^c)_{L}(q^{a n};q^{c n})_{L'})``.

    ``L = (n^r − 1)/half`` and ``L' = (n^{r−1} − 1)/half``, with ``numerator = (a, c)`` and
    ``denominator = (b, c)``; this is the ratio that makes the Dwork-type RHS telescope in r.
    """
    (a, c), (b, _) = numerator, denominator
    top = (n**r - 1) // half
    inner = (n ** (r - 1) - 1) // half
    return [
        poch(a, c, top),
        poch(b * n, c * n, inner),
        poch(b, c, top, -1),
        poch(a * n, c * n, inner, -1),
    ]


def h2_prefactor(n: int) -> list[Atom]:
    """``[n](q³;q⁴)_{(n−1)/2}/(q⁵;q⁴)_{(n−1)/2}``."""
    half = (n - 1) // 2
    return [QInt(n), poch(3, 4, half), poch(5, 4, half, -1)]


def q_square_prefactor(n: int) -> list[Atom]:
    """``[n]_{q²}(q³;q⁴)_{(n−1)/2}/(q⁵;q⁴)_{(n−1)/2} · q^{(1−n)/2}``."""
    half = (n - 1) // 2
    return [QInt(n, 2), poch(3, 4, half), poch(5, 4, half, -1), Monomial((1 - n) // 2)]


def gamma_square_prefactor(n: int) -> list[Atom]:
    """``(q²;q⁴)_{(n−1)/4}² / (q⁴;q⁴)_{(n−1)/4}²``."""
    quarter = (n - 1) // 4
    return [poch(2, 4, quarter, 2), poch(4, 4, quarter, -2)]


def signed_side(symbol: int, factors: Callable[[], Iterable[Atom]]) -> Side:
    """``symbol · ∏ factors()``; a vanishing symbol gives the zero side without building the factors."""
    if symbol == 0:
        return Side.zero()
    return Side.of(sign(symbol), *factors())


def parity_sign(exponent: int) -> int:
    """``(−1)^exponent``."""
    return -1 if exponent % 2 else 1
