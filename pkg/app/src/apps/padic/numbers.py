"""p-adic integers at finite precision, carried as ``p^v · u`` with a unit residue ``u`` modulo ``p^s``.

The represented value is known modulo ``p^{v+s}``. A zero-flagged value (``valuation is None``) only says
the value is divisible by ``p^{precision}``. Quotients divide units only; a negative valuation means the
result left ℤ_p and raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import multiplicity

from .exceptions import NotPadicIntegerError, PadicPrecisionError

type Operand = PadicInt | int | Fraction


@dataclass(frozen=True, slots=True)
class PadicInt:
    p: int
    precision: int
    valuation: int | None = 0
    unit: int = 1

    def __post_init__(self) -> None:
        if self.valuation is not None and self.precision < 1:
            raise PadicPrecisionError(self.p, self.precision)

    @classmethod
    def zero(cls, p: int, precision: int) -> PadicInt:
        return cls(p, precision, None, 0)

    @classmethod
    def of_unit(cls, p: int, precision: int, unit: int, valuation: int = 0) -> PadicInt:
        if precision <= 0:
            return cls.zero(p, valuation + max(precision, 0))
        return cls(p, precision, valuation, unit % p**precision)

    # ── properties ──

    @property
    def is_zero(self) -> bool:
        return self.valuation is None

    @property
    def absolute_precision(self) -> int:
        if self.valuation is None:
            return self.precision
        return self.valuation + self.precision

    @property
    def lower_bound(self) -> int:
        return self.precision if self.valuation is None else self.valuation

    def residue(self) -> int:
        """The value as an integer in ``[0, p^{absolute_precision})``."""
        if self.valuation is None:
            return 0
        return self.p**self.valuation * self.unit % self.p**self.absolute_precision

    def __repr__(self) -> str:
        if self.valuation is None:
            return f"PadicInt(0 mod {self.p}^{self.precision})"
        return f"PadicInt({self.p}^{self.valuation}·{self.unit} mod {self.p}^{self.absolute_precision})"

    # ── arithmetic ──

    def _coerce(self, other: Operand) -> PadicInt:
        if isinstance(other, PadicInt):
            if other.p != self.p:
                raise ValueError(f"cannot combine {self.p}-adic and {other.p}-adic values")
            return other
        return padic_of_rational(other, self.p, max(self.absolute_precision, 1))

    def __neg__(self) -> PadicInt:
        if self.valuation is None:
            return self
        return PadicInt.of_unit(self.p, self.precision, -self.unit, self.valuation)

    def __mul__(self, other: Operand) -> PadicInt:
        other = self._coerce(other)
        if self.valuation is None or other.valuation is None:
            return PadicInt.zero(self.p, self.lower_bound + other.lower_bound)
        precision = min(self.precision, other.precision)
        return PadicInt.of_unit(self.p, precision, self.unit * other.unit, self.valuation + other.valuation)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> PadicInt:
        other = self._coerce(other)
        if other.valuation is None:
            raise ZeroDivisionError(f"division by a {self.p}-adic zero")
        if self.valuation is None:
            return PadicInt.zero(self.p, max(self.precision - other.valuation, 0))
        valuation = self.valuation - other.valuation
        if valuation < 0:
            raise NotPadicIntegerError(f"{self!r} / {other!r}", self.p)
        precision = min(self.precision, other.precision)
        modulus = self.p**precision
        return PadicInt.of_unit(self.p, precision, self.unit * pow(other.unit, -1, modulus), valuation)

    def __pow__(self, exponent: int) -> PadicInt:
        if exponent < 0:
            return padic_of_rational(1, self.p, self.precision) / self**-exponent
        if exponent == 0:
            return PadicInt(self.p, max(self.absolute_precision, 1))
        if self.valuation is None:
            return PadicInt.zero(self.p, self.precision * exponent)
        return PadicInt.of_unit(
            self.p, self.precision, pow(self.unit, exponent, self.p**self.precision), self.valuation * exponent
        )

    def __add__(self, other: Operand) -> PadicInt:
        other = self._coerce(other)
        absolute = min(self.absolute_precision, other.absolute_precision)
        if self.valuation is None or other.valuation is None:
            value = other if self.valuation is None else self
            if value.valuation is None or value.valuation >= absolute:
                return PadicInt.zero(self.p, absolute)
            return PadicInt.of_unit(self.p, absolute - value.valuation, value.unit, value.valuation)
        low = min(self.valuation, other.valuation)
        modulus = self.p ** (absolute - low)
        total = (self.p ** (self.valuation - low) * self.unit + self.p ** (other.valuation - low) * other.unit) % modulus
        if total == 0:
            return PadicInt.zero(self.p, absolute)
        shift = multiplicity(self.p, total)
        return PadicInt.of_unit(self.p, absolute - low - shift, total // self.p**shift, low + shift)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> PadicInt:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Operand) -> PadicInt:
        return self._coerce(other) - self

    def congruent(self, other: Operand, exponent: int) -> bool:
        """Whether ``self ≡ other (mod p^exponent)`` is established at the available precision."""
        return (self - other).lower_bound >= exponent


def padic_valuation(x: int | Fraction, p: int) -> int | None:
    """``v_p(x)`` of an exact rational, ``None`` for zero."""
    x = Fraction(x)
    if not x:
        return None
    return multiplicity(p, x.numerator) - multiplicity(p, x.denominator)


def padic_of_rational(x: int | Fraction, p: int, precision: int) -> PadicInt:
    """Canonical ``p^v · u`` form of an exact rational, with ``u`` known modulo ``p^precision``."""
    x = Fraction(x)
    if not x:
        return PadicInt.zero(p, precision)
    if x.denominator % p == 0:
        raise NotPadicIntegerError(x, p)
    valuation = multiplicity(p, x.numerator)
    modulus = p**precision
    unit = x.numerator // p**valuation * pow(x.denominator, -1, modulus)
    return PadicInt.of_unit(p, precision, unit, valuation)
