"""Declarative descriptions of the q-hypergeometric summands and of their classical q → 1 limits."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction

from apps.qcomb.qseries import PochFactorSpec

from .exceptions import InvalidSummandSpecError


@dataclass(frozen=True, slots=True)
class CountedFactor:
    """A Pochhammer factor evaluated at count ``multiplier·k``."""

    spec: PochFactorSpec
    multiplier: int = 1

    def count(self, k: int) -> int:
        return self.multiplier * k


@dataclass(frozen=True, slots=True)
class Bracket:
    """``[slope·k + offset]_{q^base}``."""

    slope: int
    offset: int
    base: int = 1


@dataclass(frozen=True, slots=True)
class OnePlus:
    """``(1 + q^{slope·k + offset})^exponent``."""

    slope: int
    offset: int
    exponent: int = 1


@dataclass(frozen=True, slots=True)
class QuadraticExponent:
    """``q^{c2·k² + c1·k + c0}``."""

    c2: int = 0
    c1: int = 0
    c0: int = 0

    def at(self, k: int) -> int:
        return self.c2 * k * k + self.c1 * k + self.c0


@dataclass(frozen=True, slots=True)
class QSummandSpec:
    name: str
    factors: tuple[CountedFactor, ...] = ()
    alternating: bool = False
    bracket: Bracket | None = None
    one_plus: tuple[OnePlus, ...] = ()
    qexp: QuadraticExponent = field(default_factory=QuadraticExponent)
    classical: str | None = None

    def __post_init__(self) -> None:
        for factor in self.factors:
            if factor.multiplier not in (1, 2):
                raise InvalidSummandSpecError(self.name, f"count multiplier must be 1 or 2, got {factor.multiplier}")
        if self.bracket is not None:
            b = self.bracket
            if b.slope < 0 or b.offset < 1 or b.base < 1:
                raise InvalidSummandSpecError(self.name, f"bracket {b} does not define a q-integer for every k")
        for factor in self.one_plus:
            if factor.slope < 0 or factor.offset < 0 or factor.exponent == 0:
                raise InvalidSummandSpecError(self.name, f"malformed (1 + q^(ak+b))^e factor {factor}")
            if factor.slope > 0 and factor.exponent < 0:
                raise InvalidSummandSpecError(self.name, "k-dependent (1 + q^(ak+b)) factors take positive exponents")
        if min(self.qexp.c2, self.qexp.c1, self.qexp.c0) < 0:
            raise InvalidSummandSpecError(self.name, "q-exponent coefficients must be nonnegative")

    def scaled(self, m: int) -> QSummandSpec:
        """The same family with q replaced by ``q^m``."""
        if m == 1:
            return self
        return QSummandSpec(
            name=self.name,
            factors=tuple(CountedFactor(f.spec.scaled(m), f.multiplier) for f in self.factors),
            alternating=self.alternating,
            bracket=None if self.bracket is None else Bracket(self.bracket.slope, self.bracket.offset, self.bracket.base * m),
            one_plus=tuple(OnePlus(f.slope * m, f.offset * m, f.exponent) for f in self.one_plus),
            qexp=QuadraticExponent(self.qexp.c2 * m, self.qexp.c1 * m, self.qexp.c0 * m),
            classical=self.classical,
        )

    @property
    def numerator_factors(self) -> tuple[CountedFactor, ...]:
        return tuple(f for f in self.factors if f.spec.exponent > 0)

    @property
    def denominator_factors(self) -> tuple[CountedFactor, ...]:
        return tuple(f for f in self.factors if f.spec.exponent < 0)

    def sign(self, k: int) -> int:
        return -1 if self.alternating and k % 2 else 1

    def varying_binomials(self, k: int) -> Iterator[tuple[int, int]]:
        """``(sign, exponent)`` of the binomials ``1 − sign·q^exponent`` that change with k, with multiplicity."""
        if self.bracket is not None and self.bracket.slope:
            b = self.bracket
            yield 1, b.base * (b.slope * k + b.offset)
        for factor in self.one_plus:
            if factor.slope:
                for _ in range(factor.exponent):
                    yield -1, factor.slope * k + factor.offset

    def constant_binomials(self) -> Iterator[tuple[int, int, int]]:
        """``(sign, exponent, power)`` of the k-independent binomial factors, the bracket denominator included."""
        if self.bracket is not None:
            b = self.bracket
            if b.slope == 0:
                yield 1, b.base * b.offset, 1
            yield 1, b.base, -1
        for factor in self.one_plus:
            if not factor.slope:
                yield -1, factor.offset, factor.exponent


@dataclass(frozen=True, slots=True)
class ClassicalTermSpec:
    """``(−1)^k·(αk+β)·∏(a)_k^e / k!^f · c^k`` over the rationals."""

    name: str
    alternating: bool = False
    linear: tuple[int, int] | None = None
    rising: tuple[tuple[Fraction, int], ...] = ()
    factorial_exponent: int = 0
    geometric: Fraction = Fraction(1)

    def ratio(self, k: int) -> Fraction:
        """``base_k / base_{k−1}`` for ``k ≥ 1``, where ``base`` is the term without its linear factor."""
        ratio = Fraction(self.geometric)
        for a, e in self.rising:
            ratio *= Fraction(a + k - 1) ** e
        ratio /= Fraction(k) ** self.factorial_exponent
        return -ratio if self.alternating else ratio

    def linear_factor(self, k: int) -> int:
        if self.linear is None:
            return 1
        alpha, beta = self.linear
        return alpha * k + beta
