"""Single terms and partial sums of summand families, as rational functions, localized values and rationals.

Partial sums run over a single growing denominator: with ``N_k`` the numerator of term k and ``Q_k`` the
product of its denominator Pochhammers,

    Y_k = Y_{k−1}·(Q_k / Q_{k−1}) + N_k,    Σ_{j≤k} T_j = Y_k / Q_k,

so no division ever happens inside the loop. The same loop runs over ℤ[q] for the dense oracle and over
ℚ[q]/(q^N − 1)^w for the localized engine.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from fractions import Fraction
from typing import Protocol

from apps.localring.rings import cyclic_ring, divides_binomial
from apps.localring.values import (
    LocalValue,
    local_binomial,
    local_constant,
    local_monomial,
    local_pochhammer,
    pochhammer_valuation,
)
from apps.polyring.intpoly import IntPoly
from apps.polyring.ratpoly import RatPoly

from .specs import ClassicalTermSpec, CountedFactor, QSummandSpec


class PolynomialArithmetic(Protocol):
    def reduce(self, poly: IntPoly) -> IntPoly: ...

    def mul_binomial(self, a: IntPoly, sign: int, exponent: int) -> IntPoly: ...

    def shift(self, a: IntPoly, exponent: int) -> IntPoly: ...


class DenseArithmetic:
    """Plain ℤ[q] arithmetic with the ``ResidueRing`` interface."""

    def reduce(self, poly: IntPoly) -> IntPoly:
        return poly

    def mul_binomial(self, a: IntPoly, sign: int, exponent: int) -> IntPoly:
        return a.mul_binomial(sign, exponent)

    def shift(self, a: IntPoly, exponent: int) -> IntPoly:
        return a.shift(exponent)


DENSE = DenseArithmetic()


def _apply_factors(
    poly: IntPoly, factors: Iterable[CountedFactor], lo: int, hi: int, arith: PolynomialArithmetic
) -> IntPoly:
    # multiplies in the Pochhammer factors with indices in [μ·lo, μ·hi), |e| times each
    for factor in factors:
        spec = factor.spec
        for m in spec.exponents(factor.count(lo), factor.count(hi)):
            for _ in range(abs(spec.exponent)):
                poly = arith.mul_binomial(poly, spec.sign, m)
    return poly


def _numerator_term(spec: QSummandSpec, k: int, running: IntPoly, arith: PolynomialArithmetic) -> IntPoly:
    poly = arith.shift(running, spec.qexp.at(k))
    for sign, exponent in spec.varying_binomials(k):
        poly = arith.mul_binomial(poly, sign, exponent)
    return -poly if spec.sign(k) < 0 else poly


def _walk(
    spec: QSummandSpec, lower: int, upper: int, arith: PolynomialArithmetic, *, track_denominator: bool
) -> tuple[IntPoly, IntPoly]:
    one = arith.reduce(IntPoly.one())
    numerators, denominators = spec.numerator_factors, spec.denominator_factors
    running = _apply_factors(one, numerators, 0, lower, arith)
    denominator = _apply_factors(one, denominators, 0, lower, arith) if track_denominator else one
    acc = IntPoly()
    for k in range(lower, upper + 1):
        if k > lower:
            running = _apply_factors(running, numerators, k - 1, k, arith)
            acc = _apply_factors(acc, denominators, k - 1, k, arith)
            if track_denominator:
                denominator = _apply_factors(denominator, denominators, k - 1, k, arith)
        acc = arith.reduce(acc + _numerator_term(spec, k, running, arith))
    return acc, denominator


def _dense_constants(spec: QSummandSpec) -> tuple[IntPoly, IntPoly]:
    num, den = IntPoly.one(), IntPoly.one()
    for sign, exponent, power in spec.constant_binomials():
        for _ in range(abs(power)):
            if power > 0:
                num = num.mul_binomial(sign, exponent)
            else:
                den = den.mul_binomial(sign, exponent)
    return num, den


def _local_constants(spec: QSummandSpec, index: int, precision: int) -> LocalValue:
    value = local_constant(1, index, precision)
    for sign, exponent, power in spec.constant_binomials():
        value = value * local_binomial(sign, exponent, index, precision) ** power
    return value


# ── q-side ──


def sum_q(spec: QSummandSpec, lower: int, upper: int, scale: int = 1) -> RatPoly:
    """``Σ_{k=lower}^{upper} T_k(q^scale)`` as an unreduced rational function."""
    if upper < lower:
        return RatPoly(IntPoly())
    scaled = spec.scaled(scale)
    acc, denominator = _walk(scaled, lower, upper, DENSE, track_denominator=True)
    num, den = _dense_constants(scaled)
    return RatPoly(acc * num, denominator * den)


def term_q(spec: QSummandSpec, k: int, scale: int = 1) -> RatPoly:
    return sum_q(spec, k, k, scale)


def sum_local(spec: QSummandSpec, lower: int, upper: int, scale: int, index: int, working: int) -> LocalValue:
    """The localized partial sum at Φ_N, known modulo Φ_N^{working − B}.

    ``B`` is ``denominator_valuation(spec, upper, scale, index)``; the numerator is accumulated modulo
    ``(q^N − 1)^working`` and the denominator is divided out factor by factor.
    """
    if upper < lower:
        return LocalValue.zero(index, working)
    scaled = spec.scaled(scale)
    acc, _ = _walk(scaled, lower, upper, cyclic_ring(index, working), track_denominator=False)
    value = LocalValue.from_residue(acc, index, working)
    for factor in scaled.denominator_factors:
        value = value * local_pochhammer(factor.spec, factor.count(upper), index, working)
    return value * _local_constants(scaled, index, working)


def term_local(spec: QSummandSpec, k: int, scale: int, index: int, precision: int) -> LocalValue:
    """Localized term k, built from the local images of its factors."""
    scaled = spec.scaled(scale)
    value = local_monomial(scaled.qexp.at(k), index, precision) * scaled.sign(k)
    for factor in scaled.factors:
        value = value * local_pochhammer(factor.spec, factor.count(k), index, precision)
    for sign, exponent in scaled.varying_binomials(k):
        value = value * local_binomial(sign, exponent, index, precision)
    return value * _local_constants(scaled, index, precision)


def denominator_valuation(spec: QSummandSpec, upper: int, scale: int, index: int) -> int:
    """Φ_N-valuation of the running denominator at ``upper``, constants included."""
    scaled = spec.scaled(scale)
    v = -sum(pochhammer_valuation(f.spec, f.count(upper), index) for f in scaled.denominator_factors)
    for sign, exponent, power in scaled.constant_binomials():
        if power < 0 and divides_binomial(sign, exponent, index):
            v -= power
    return v


def _pochhammer_degree(factor: CountedFactor, k: int) -> int:
    return abs(factor.spec.exponent) * sum(factor.spec.exponents(0, factor.count(k)))


def degree_bound(spec: QSummandSpec, upper: int, scale: int = 1) -> int:
    """Upper bound on ``deg num + deg den`` of any partial sum ending at ``upper``."""
    scaled = spec.scaled(scale)
    den = sum(_pochhammer_degree(f, upper) for f in scaled.denominator_factors)
    num = scaled.qexp.at(upper) + sum(exponent for _, exponent in scaled.varying_binomials(upper))
    num += sum(_pochhammer_degree(f, upper) for f in scaled.numerator_factors) + den
    for _, exponent, power in scaled.constant_binomials():
        if power > 0:
            num += power * exponent
        else:
            den -= power * exponent
    return num + den


# ── classical side ──


def classical_terms(spec: ClassicalTermSpec, lower: int, upper: int) -> Iterator[Fraction]:
    """Terms ``lower..upper`` by the ratio walk from ``base_0 = 1``."""
    base = Fraction(1)
    for k in range(upper + 1):
        if k:
            base *= spec.ratio(k)
        if k >= lower:
            yield base * spec.linear_factor(k)


def term_classical(spec: ClassicalTermSpec, k: int) -> Fraction:
    return next(classical_terms(spec, k, k))


def sum_classical(spec: ClassicalTermSpec, lower: int, upper: int) -> Fraction:
    return sum(classical_terms(spec, lower, upper), Fraction(0))
