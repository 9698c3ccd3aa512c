"""Elements of ℚ[q] localized at Φ_N, carried as ``Φ_N^v · num/den`` with relative precision ``w``.

``num`` and ``den`` are residues modulo Φ_N^w that are both units, so products and quotients never invert
anything. The represented value is known modulo Φ_N^{v+w}. A zero-flagged value (``valuation is None``)
only says the value is divisible by Φ_N^{precision}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from apps.polyring.cyclotomic import strip_phi
from apps.polyring.intpoly import IntPoly
from apps.polyring.ratpoly import RatPoly
from apps.qcomb.qseries import PochFactorSpec

from .exceptions import IndexMismatchError, NonUnitInversionError, PrecisionExhaustedError
from .rings import (
    ResidueRing,
    binomial_parts,
    cyclic_ring,
    divides_binomial,
    invert_residue,
    monomial_residue,
    phi_power_ring,
    strip_residue,
)

ONE = IntPoly.one()

type Operand = LocalValue | int | Fraction


@dataclass(frozen=True, slots=True)
class LocalValue:
    index: int
    precision: int
    valuation: int | None = 0
    num: IntPoly = field(default=ONE)
    den: IntPoly = field(default=ONE)

    def __post_init__(self) -> None:
        if self.valuation is not None and self.precision < 1:
            raise PrecisionExhaustedError(self.index, self.valuation + self.precision, self.valuation + 1)

    # ── constructors ──

    @classmethod
    def zero(cls, index: int, precision: int) -> LocalValue:
        return cls(index, precision, None, IntPoly(), ONE)

    @classmethod
    def of_units(cls, index: int, precision: int, num: IntPoly, den: IntPoly = ONE, valuation: int = 0) -> LocalValue:
        """``Φ_N^valuation · num/den`` for unit ``num`` and ``den``, reduced modulo Φ_N^precision."""
        if precision == 0:
            return cls.zero(index, valuation)
        ring = phi_power_ring(index, precision)
        return cls(index, precision, valuation, ring.reduce(num), ring.reduce(den))

    @classmethod
    def from_residue(cls, residue: IntPoly, index: int, precision: int, den: IntPoly = ONE) -> LocalValue:
        """The value ``residue/den`` where ``residue`` is only known modulo Φ_N^precision."""
        residue = phi_power_ring(index, precision).reduce(residue) if precision else IntPoly()
        if residue.is_zero:
            return cls.zero(index, precision)
        v, unit = strip_residue(residue, index, precision)
        return cls.of_units(index, precision - v, unit, den, v)

    # ── properties ──

    @property
    def is_zero(self) -> bool:
        return self.valuation is None

    @property
    def absolute_precision(self) -> int:
        """Largest ``a`` such that the value is known modulo Φ_N^a."""
        if self.valuation is None:
            return self.precision
        return self.valuation + self.precision

    @property
    def lower_bound(self) -> int:
        """The valuation when nonzero, otherwise the proven lower bound."""
        return self.precision if self.valuation is None else self.valuation

    @property
    def ring(self) -> ResidueRing:
        return phi_power_ring(self.index, self.precision)

    @property
    def is_one(self) -> bool:
        if self.valuation != 0:
            return False
        return self.ring.reduce(self.num - self.den).is_zero

    def __repr__(self) -> str:
        if self.valuation is None:
            return f"LocalValue(0 mod Φ_{self.index}^{self.precision})"
        return f"LocalValue(Φ_{self.index}^{self.valuation}·{self.num!r}/{self.den!r}, w={self.precision})"

    def unit_part(self) -> RatPoly:
        """``num·den^{-1}`` modulo Φ_N^w as a polynomial over a constant denominator."""
        if self.valuation is None:
            raise NonUnitInversionError(self.index)
        ring = self.ring
        inverse = invert_residue(self.den, ring)
        return RatPoly(ring.mul(self.num, inverse.num), inverse.den)

    def ensure_precision(self, required: int) -> LocalValue:
        if self.absolute_precision < required:
            raise PrecisionExhaustedError(self.index, self.absolute_precision, required)
        return self

    # ── arithmetic ──

    def _coerce(self, other: Operand) -> LocalValue:
        if isinstance(other, LocalValue):
            if other.index != self.index:
                raise IndexMismatchError(self.index, other.index)
            return other
        return local_constant(other, self.index, max(self.precision, 1))

    def __neg__(self) -> LocalValue:
        if self.valuation is None:
            return self
        return LocalValue(self.index, self.precision, self.valuation, -self.num, self.den)

    def __mul__(self, other: Operand) -> LocalValue:
        other = self._coerce(other)
        if self.valuation is None or other.valuation is None:
            return LocalValue.zero(self.index, self.lower_bound + other.lower_bound)
        precision = min(self.precision, other.precision)
        ring = phi_power_ring(self.index, precision)
        return LocalValue(
            self.index,
            precision,
            self.valuation + other.valuation,
            ring.mul(self.num, other.num),
            ring.mul(self.den, other.den),
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> LocalValue:
        other = self._coerce(other)
        if other.valuation is None:
            raise NonUnitInversionError(self.index)
        if self.valuation is None:
            return LocalValue.zero(self.index, self.precision - other.valuation)
        precision = min(self.precision, other.precision)
        ring = phi_power_ring(self.index, precision)
        return LocalValue(
            self.index,
            precision,
            self.valuation - other.valuation,
            ring.mul(self.num, other.den),
            ring.mul(self.den, other.num),
        )

    def __pow__(self, exponent: int) -> LocalValue:
        if exponent < 0:
            return local_constant(1, self.index, self.precision) / self**-exponent
        if self.valuation is None:
            return LocalValue.zero(self.index, self.precision * exponent) if exponent else self._one()
        ring = self.ring
        return LocalValue(
            self.index,
            self.precision,
            self.valuation * exponent,
            ring.power(self.num, exponent),
            ring.power(self.den, exponent),
        )

    def _one(self) -> LocalValue:
        return LocalValue(self.index, max(self.precision, 1))

    def __add__(self, other: Operand) -> LocalValue:
        other = self._coerce(other)
        if self.valuation is None or other.valuation is None:
            return _add_with_zero(self, other)
        low, high = (self, other) if self.valuation <= other.valuation else (other, self)
        gap = high.valuation - low.valuation
        precision = min(low.precision, high.precision + gap)
        ring = phi_power_ring(self.index, precision)
        shifted = ring.mul(high.num, low.den)
        if gap:
            shifted = ring.mul(shifted, phi_power_ring(self.index, gap).modulus)
        residue = ring.reduce(ring.mul(low.num, high.den) + shifted)
        den = ring.mul(low.den, high.den)
        if residue.is_zero:
            return LocalValue.zero(self.index, low.valuation + precision)
        v, unit = strip_residue(residue, self.index, precision)
        return LocalValue.of_units(self.index, precision - v, unit, den, low.valuation + v)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> LocalValue:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Operand) -> LocalValue:
        return self._coerce(other) - self


def _add_with_zero(x: LocalValue, y: LocalValue) -> LocalValue:
    if x.valuation is None and y.valuation is None:
        return LocalValue.zero(x.index, min(x.precision, y.precision))
    value, zero = (y, x) if x.valuation is None else (x, y)
    assert value.valuation is not None
    if zero.precision <= value.valuation:
        return LocalValue.zero(x.index, zero.precision)
    return LocalValue.of_units(
        x.index, min(value.precision, zero.precision - value.valuation), value.num, value.den, value.valuation
    )


# ── embeddings ──


def local_embed(f: RatPoly | IntPoly | int | Fraction, index: int, precision: int) -> LocalValue:
    """Exact image of a rational function: Φ_N powers are stripped from both sides by exact division."""
    f = RatPoly.of(f)
    if f.is_zero:
        return LocalValue.zero(index, precision)
    v_num, num = strip_phi(f.num, index)
    v_den, den = strip_phi(f.den, index)
    return LocalValue.of_units(index, precision, num, den, v_num - v_den)


def local_constant(c: int | Fraction, index: int, precision: int) -> LocalValue:
    c = Fraction(c)
    if not c:
        return LocalValue.zero(index, precision)
    return LocalValue(index, precision, 0, IntPoly.constant(c.numerator), IntPoly.constant(c.denominator))


def local_monomial(exponent: int, index: int, precision: int) -> LocalValue:
    """``q^exponent``; q is a unit at every Φ_N with N ≥ 2."""
    ring = phi_power_ring(index, precision)
    if exponent >= 0:
        return LocalValue(index, precision, 0, monomial_residue(exponent, ring), ONE)
    return LocalValue(index, precision, 0, ONE, monomial_residue(-exponent, ring))


def local_binomial(sign: int, exponent: int, index: int, precision: int) -> LocalValue:
    """``1 − sign·q^exponent``."""
    if exponent == 0:
        return local_constant(1 - sign, index, precision)
    v, num, den = binomial_parts(sign, exponent, phi_power_ring(index, precision))
    return LocalValue(index, precision, v, num, den)


def local_q_integer(n: int, base: int, index: int, precision: int) -> LocalValue:
    """``[n]_{q^base} = (1 − q^{base·n})/(1 − q^base)``."""
    return local_binomial(1, base * n, index, precision) / local_binomial(1, base, index, precision)


def pochhammer_valuation(spec: PochFactorSpec, count: int, index: int) -> int:
    """Φ_N-valuation of ``q_pochhammer(spec, count)``, counted factor by factor."""
    hits = sum(1 for m in spec.exponents(0, count) if divides_binomial(spec.sign, m, index))
    return spec.exponent * hits


def pochhammer_parts(spec: PochFactorSpec, start: int, stop: int, ring: ResidueRing) -> tuple[int, IntPoly, IntPoly]:
    """Factors ``start ≤ j < stop`` of the base product as ``(valuation, unit num, unit den)`` in ``ring``."""
    v = 0
    num, den = ONE, ONE
    for m in spec.exponents(start, stop):
        if not divides_binomial(spec.sign, m, ring.index):
            num = ring.mul_binomial(num, spec.sign, m)
            continue
        hit, unit, extra = binomial_parts(spec.sign, m, ring)
        v += hit
        num = ring.mul(num, unit)
        if extra != ONE:
            den = ring.mul(den, extra)
    return v, num, den


def local_pochhammer(spec: PochFactorSpec, count: int, index: int, precision: int) -> LocalValue:
    """``(sign·q^a; q^c)_count^e`` accumulated in ℚ[q]/(q^N − 1)^w, then projected to Φ_N^w."""
    if count < 0:
        raise ValueError(f"Pochhammer count must be nonnegative, got {count}")
    if count == 0:
        return LocalValue(index, precision)
    v, num, den = pochhammer_parts(spec, 0, count, cyclic_ring(index, precision))
    phi = phi_power_ring(index, precision)
    base = LocalValue(index, precision, v, phi.reduce(num), phi.reduce(den))
    return base**spec.exponent
