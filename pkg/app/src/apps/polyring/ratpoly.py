"""Rational functions in q as a pair of integer polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import ZeroDivisorError
from .intpoly import IntPoly, poly_gcd

ONE = IntPoly.one()


@dataclass(frozen=True, slots=True, eq=False)
class RatPoly:
    """``num / den`` with integer-coefficient numerator and denominator.

    Rational constants are absorbed into the integer contents of ``num`` and ``den``. When ``reduced``
    is set the pair has no common factor over ℚ, the two contents are coprime and ``den`` has a
    positive leading coefficient.
    """

    num: IntPoly
    den: IntPoly = field(default=ONE)
    reduced: bool = False

    def __post_init__(self) -> None:
        if self.den.is_zero:
            raise ZeroDivisorError("RatPoly denominator")

    @classmethod
    def of(cls, value: RatPoly | IntPoly | int | Fraction) -> RatPoly:
        if isinstance(value, RatPoly):
            return value
        if isinstance(value, IntPoly):
            return cls(value)
        value = Fraction(value)
        return cls(IntPoly.constant(value.numerator), IntPoly.constant(value.denominator))

    @classmethod
    def monomial(cls, exponent: int) -> RatPoly:
        """``q^exponent``; negative exponents put ``q^{-exponent}`` in the denominator."""
        if exponent >= 0:
            return cls(IntPoly.monomial(exponent))
        return cls(ONE, IntPoly.monomial(-exponent))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __repr__(self) -> str:
        return f"RatPoly({self.num!r} / {self.den!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly | int | Fraction):
            other = RatPoly.of(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        r = self.reduce()
        return hash((r.num.coeffs, r.den.coeffs))

    def __add__(self, other: RatPoly | IntPoly | int | Fraction) -> RatPoly:
        other = RatPoly.of(other)
        if self.den == other.den:
            return RatPoly(self.num + other.num, self.den)
        return RatPoly(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly(-self.num, self.den, self.reduced)

    def __sub__(self, other: RatPoly | IntPoly | int | Fraction) -> RatPoly:
        return self + (-RatPoly.of(other))

    def __rsub__(self, other: RatPoly | IntPoly | int | Fraction) -> RatPoly:
        return RatPoly.of(other) - self

    def __mul__(self, other: RatPoly | IntPoly | int | Fraction) -> RatPoly:
        other = RatPoly.of(other)
        return RatPoly(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatPoly:
        if self.num.is_zero:
            raise ZeroDivisorError("RatPoly inverse")
        return RatPoly(self.den, self.num)

    def __truediv__(self, other: RatPoly | IntPoly | int | Fraction) -> RatPoly:
        return self * RatPoly.of(other).inverse()

    def __rtruediv__(self, other: RatPoly | IntPoly | int | Fraction) -> RatPoly:
        return RatPoly.of(other) * self.inverse()

    def __pow__(self, exponent: int) -> RatPoly:
        if exponent < 0:
            return self.inverse() ** -exponent
        return RatPoly(self.num**exponent, self.den**exponent)

    def subst_power(self, m: int) -> RatPoly:
        return RatPoly(self.num.subst_power(m), self.den.subst_power(m))

    def reduce(self) -> RatPoly:
        if self.reduced:
            return self
        if self.num.is_zero:
            return RatPoly(IntPoly(), ONE, reduced=True)
        g = poly_gcd(self.num, self.den)
        num = self.num.exact_quotient(g) if g.degree > 0 else self.num
        den = self.den.exact_quotient(g) if g.degree > 0 else self.den
        scale = Fraction(num.content(), den.content())
        if den.leading < 0:
            scale = -scale
        num = num.primitive_part() * (1 if num.leading > 0 else -1)
        den = den.primitive_part()
        return RatPoly(num * scale.numerator, den * scale.denominator, reduced=True)

    def evaluate(self, x: int | Fraction) -> Fraction:
        den = self.den.evaluate(x)
        if den == 0:
            raise ZeroDivisorError(f"evaluation at {x}")
        return Fraction(self.num.evaluate(x)) / den
