"""Quotient rings ℚ[q]/(modulus) used by the localized arithmetic.

Two moduli are used. ``Φ_N^w`` is the canonical one: residues modulo it carry every ``LocalValue``.
``(q^N − 1)^w`` is a multiple of ``Φ_N^w`` with only ``w + 1`` nonzero coefficients, so long products
of binomials are reduced against it in linear time and projected onto ``Φ_N^w`` once at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, lcm

from apps.polyring.cyclotomic import cyclotomic
from apps.polyring.intpoly import IntPoly, mul_coeffs, reduce_monic
from apps.polyring.ratpoly import RatPoly

from .exceptions import NonUnitInversionError


@dataclass(frozen=True, slots=True)
class ResidueRing:
    """Residues modulo a monic ``modulus`` attached to the cyclotomic index ``index``."""

    index: int
    precision: int
    modulus: IntPoly

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def reduce(self, poly: IntPoly) -> IntPoly:
        if poly.degree < self.degree:
            return poly
        _, remainder = reduce_monic(list(poly.coeffs), self.modulus.coeffs)
        return IntPoly(tuple(remainder))

    def mul(self, a: IntPoly, b: IntPoly) -> IntPoly:
        if a.is_zero or b.is_zero:
            return IntPoly()
        return self.reduce(IntPoly(tuple(mul_coeffs(a.coeffs, b.coeffs))))

    def mul_binomial(self, a: IntPoly, sign: int, exponent: int) -> IntPoly:
        """``a·(1 − sign·q^exponent)`` reduced."""
        return self.reduce(a.mul_binomial(sign, exponent))

    def shift(self, a: IntPoly, exponent: int) -> IntPoly:
        return self.reduce(a.shift(exponent))

    def power(self, a: IntPoly, exponent: int) -> IntPoly:
        result, base = self.reduce(IntPoly.one()), self.reduce(a)
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            exponent >>= 1
            if exponent:
                base = self.mul(base, base)
        return result


@cache
def phi_power_ring(index: int, precision: int) -> ResidueRing:
    """ℚ[q]/Φ_N^w."""
    return ResidueRing(index, precision, cyclotomic(index) ** precision)


@cache
def cyclic_ring(index: int, precision: int) -> ResidueRing:
    """ℚ[q]/(q^N − 1)^w."""
    return ResidueRing(index, precision, (IntPoly.monomial(index) - 1) ** precision)


@cache
def cofactor(index: int) -> IntPoly:
    """``(q^N − 1)/Φ_N``, the product of the Φ_d with ``d | N``, ``d < N``."""
    return (IntPoly.monomial(index) - 1).exact_quotient(cyclotomic(index))


def is_unit(residue: IntPoly, index: int) -> bool:
    return not (residue % cyclotomic(index)).is_zero


def strip_residue(residue: IntPoly, index: int, limit: int) -> tuple[int, IntPoly]:
    """Divide out Φ_N up to ``limit`` times; returns the count and the quotient."""
    phi = cyclotomic(index)
    count = 0
    while count < limit and not residue.is_zero:
        quotient, remainder = residue.divrem(phi)
        if remainder:
            break
        residue = quotient
        count += 1
    return count, residue


# ── Extended Euclid over ℚ ────────────────────────────────────────────


def _fstrip(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _fsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _fstrip(out)


def _fmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fstrip(out)


def _fdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    if len(rem) <= db:
        return [], rem
    quotient = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        if c:
            quotient[i - db] = c
            for j, d in enumerate(b):
                rem[i - db + j] -= c * d
    return quotient, _fstrip(rem[:db])


def invert_residue(residue: IntPoly, ring: ResidueRing) -> RatPoly:
    """Inverse of a unit residue modulo the ring's modulus, with rational coefficients.

    The result is returned as an integer polynomial over a positive integer constant.
    """
    if not is_unit(residue, ring.index):
        raise NonUnitInversionError(ring.index)
    a = [Fraction(c) for c in ring.modulus.coeffs]
    b = [Fraction(c) for c in ring.reduce(residue).coeffs]
    s: list[Fraction] = []
    s1: list[Fraction] = [Fraction(1)]
    while len(b) > 1:
        quotient, remainder = _fdivmod(a, b)
        a, b = b, remainder
        s, s1 = s1, _fsub(s, _fmul(quotient, s1))
    if not b:
        raise NonUnitInversionError(ring.index)
    inverse = [c / b[0] for c in s1]
    denominator = lcm(*(c.denominator for c in inverse)) if inverse else 1
    numerator = IntPoly.of(int(c * denominator) for c in inverse)
    return RatPoly(ring.reduce(numerator), IntPoly.constant(denominator))


# ── Sparse residues ───────────────────────────────────────────────────


def _in_cyclic_powers(coefficients: list[int], index: int) -> IntPoly:
    """``Σ_t coefficients[t]·(q^N − 1)^t`` by Horner's rule."""
    acc = IntPoly()
    for c in reversed(coefficients):
        acc = -acc.mul_binomial(1, index) + c
    return acc


def monomial_residue(exponent: int, ring: ResidueRing) -> IntPoly:
    """``q^exponent`` reduced in ``ring``.

    Large exponents go through ``x^j ≡ Σ_{t<w} C(j, t)(x − 1)^t (mod (x − 1)^w)`` with ``x = q^N``.
    """
    index, precision = ring.index, ring.precision
    if exponent < index * precision:
        return ring.reduce(IntPoly.monomial(exponent))
    j, rest = divmod(exponent, index)
    expansion = _in_cyclic_powers([comb(j, t) for t in range(precision)], index)
    return ring.reduce(expansion.shift(rest))


def divisible_unit(exponent: int, ring: ResidueRing) -> IntPoly:
    """``(1 − q^exponent)/Φ_N`` reduced in ``ring``, for ``N | exponent``.

    Uses ``(1 − q^{jN})/Φ_N = −[j]_{q^N}·(q^N − 1)/Φ_N`` and
    ``[j]_x ≡ Σ_{t<w} C(j, t+1)(x − 1)^t (mod (x − 1)^w)``.
    """
    index, precision = ring.index, ring.precision
    j = exponent // index
    expansion = _in_cyclic_powers([comb(j, t + 1) for t in range(precision)], index)
    return -ring.mul(expansion, cofactor(index))


def binomial_parts(sign: int, exponent: int, ring: ResidueRing) -> tuple[int, IntPoly, IntPoly]:
    """``1 − sign·q^exponent`` as ``(valuation, unit numerator, unit denominator)`` residues in ``ring``.

    ``1 − q^m`` carries Φ_N exactly once when ``N | m``; ``1 + q^m = (1 − q^{2m})/(1 − q^m)`` carries it
    exactly when ``N | 2m`` and ``N ∤ m``.
    """
    index = ring.index
    one = IntPoly.one()
    if sign == 1:
        if exponent % index == 0:
            return 1, divisible_unit(exponent, ring), one
        return 0, one - monomial_residue(exponent, ring), one
    if (2 * exponent) % index == 0 and exponent % index:
        return 1, divisible_unit(2 * exponent, ring), one - monomial_residue(exponent, ring)
    return 0, one + monomial_residue(exponent, ring), one


def divides_binomial(sign: int, exponent: int, index: int) -> bool:
    """Whether Φ_N divides ``1 − sign·q^exponent``."""
    if sign == 1:
        return exponent % index == 0
    return (2 * exponent) % index == 0 and exponent % index != 0
