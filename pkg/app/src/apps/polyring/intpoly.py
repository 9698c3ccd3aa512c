"""Dense univariate polynomials in q over arbitrary-precision integers."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InexactDivisionError, NonMonicDivisorError, ZeroDivisorError

# Below this length the schoolbook product beats the recursion overhead.
KARATSUBA_THRESHOLD = 40


def _strip(coeffs: list[int]) -> list[int]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _add_into(target: list[int], source: Sequence[int], offset: int = 0, sign: int = 1) -> None:
    need = offset + len(source)
    if len(target) < need:
        target.extend([0] * (need - len(target)))
    if sign == 1:
        for i, c in enumerate(source, offset):
            target[i] += c
    else:
        for i, c in enumerate(source, offset):
            target[i] -= c


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    sparse_b = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if x:
            for j, y in sparse_b:
                out[i + j] += x * y
    return out


def mul_coeffs(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of two coefficient lists, Karatsuba above ``KARATSUBA_THRESHOLD``."""
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    if len(b) < KARATSUBA_THRESHOLD:
        return _schoolbook(a, b)
    if len(a) >= 2 * len(b):
        # unbalanced operands: slice the long one into blocks of the short length
        out: list[int] = []
        step = len(b)
        for start in range(0, len(a), step):
            _add_into(out, mul_coeffs(a[start : start + step], b), start)
        return out

    half = len(a) // 2
    a0, a1 = a[:half], a[half:]
    b0, b1 = b[:half], b[half:]
    z0 = mul_coeffs(a0, b0)
    z2 = mul_coeffs(a1, b1)
    sa = list(a0)
    _add_into(sa, a1)
    sb = list(b0)
    _add_into(sb, b1)
    z1 = mul_coeffs(sa, sb)
    _add_into(z1, z0, sign=-1)
    _add_into(z1, z2, sign=-1)

    out = [0] * (len(a) + len(b) - 1)
    _add_into(out, z0)
    _add_into(out, z1, half)
    _add_into(out, z2, 2 * half)
    return out[: len(a) + len(b) - 1]


def reduce_monic(coeffs: list[int], divisor: Sequence[int]) -> tuple[list[int], list[int]]:
    """In-place long division by a monic divisor; returns (quotient, remainder)."""
    db = len(divisor) - 1
    if len(coeffs) <= db:
        return [], coeffs
    tail = [(j, c) for j, c in enumerate(divisor[:db]) if c]
    quotient = [0] * (len(coeffs) - db)
    for i in range(len(coeffs) - 1, db - 1, -1):
        c = coeffs[i]
        if c:
            quotient[i - db] = c
            base = i - db
            for j, d in tail:
                coeffs[base + j] -= c * d
            coeffs[i] = 0
    del coeffs[db:]
    return quotient, _strip(coeffs)


@dataclass(frozen=True, slots=True)
class IntPoly:
    """Polynomial ``coeffs[0] + coeffs[1]·q + …`` with the trailing zeros stripped."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        end = len(coeffs)
        while end and not coeffs[end - 1]:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> IntPoly:
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> IntPoly:
        return cls(())

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> IntPoly:
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent} needs a RatPoly")
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def binomial(cls, sign: int, exponent: int) -> IntPoly:
        """``1 − sign·q^exponent``."""
        return cls.one().mul_binomial(sign, exponent)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPoly(0)"
        terms = [f"{c}q^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"IntPoly({' + '.join(terms)})"

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _coerce(other)
        out = list(self.coeffs)
        _add_into(out, other.coeffs)
        return IntPoly(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        other = _coerce(other)
        out = list(self.coeffs)
        _add_into(out, other.coeffs, sign=-1)
        return IntPoly(tuple(out))

    def __rsub__(self, other: int) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs)) if other else IntPoly()
        return IntPoly(tuple(mul_coeffs(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPoly:
        if exponent < 0:
            raise ValueError("negative power of an IntPoly")
        result, base = IntPoly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def shift(self, t: int) -> IntPoly:
        """Multiply by ``q^t`` for ``t ≥ 0``."""
        if not self.coeffs or t == 0:
            return self
        return IntPoly((0,) * t + self.coeffs)

    def mul_binomial(self, sign: int, exponent: int) -> IntPoly:
        """Multiply by ``1 − sign·q^exponent`` in linear time."""
        out = list(self.coeffs)
        _add_into(out, self.coeffs, exponent, sign=-sign)
        return IntPoly(tuple(out))

    def divrem(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Division by a monic divisor: ``self = divisor·quotient + remainder``."""
        if divisor.is_zero:
            raise ZeroDivisorError("divrem")
        if divisor.leading != 1:
            raise NonMonicDivisorError(divisor.leading)
        quotient, remainder = reduce_monic(list(self.coeffs), divisor.coeffs)
        return IntPoly(tuple(quotient)), IntPoly(tuple(remainder))

    def __mod__(self, divisor: IntPoly) -> IntPoly:
        return self.divrem(divisor)[1]

    def exact_quotient(self, divisor: IntPoly) -> IntPoly:
        """Quotient over the integers; raises when ``divisor`` does not divide ``self`` in ℤ[q]."""
        if divisor.is_zero:
            raise ZeroDivisorError("exact_quotient")
        if divisor.leading == 1:
            quotient, remainder = self.divrem(divisor)
            if remainder:
                raise InexactDivisionError(f"{divisor!r} does not divide {self!r}")
            return quotient
        rem = list(self.coeffs)
        db = divisor.degree
        lc = divisor.leading
        if len(rem) <= db:
            if rem:
                raise InexactDivisionError(f"{divisor!r} does not divide {self!r}")
            return IntPoly()
        quotient = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            c, leftover = divmod(c, lc)
            if leftover:
                raise InexactDivisionError(f"{divisor!r} does not divide {self!r} over the integers")
            quotient[i - db] = c
            for j, d in enumerate(divisor.coeffs):
                if d:
                    rem[i - db + j] -= c * d
        if any(rem):
            raise InexactDivisionError(f"{divisor!r} does not divide {self!r}")
        return IntPoly(tuple(quotient))

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> IntPoly:
        """``self`` divided by its content, normalised to a positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return IntPoly(tuple(x // c for x in self.coeffs))

    def subst_power(self, m: int) -> IntPoly:
        """``f(q^m)``."""
        if m < 1:
            raise ValueError(f"substitution power must be positive, got {m}")
        if m == 1 or len(self.coeffs) <= 1:
            return self
        out = [0] * (m * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            out[m * i] = c
        return IntPoly(tuple(out))

    def evaluate(self, x: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _coerce(value: IntPoly | int) -> IntPoly:
    return value if isinstance(value, IntPoly) else IntPoly.constant(value)


def _pseudo_remainder(a: list[int], b: Sequence[int]) -> list[int]:
    rem = list(a)
    db = len(b) - 1
    lc = b[-1]
    while rem and len(rem) - 1 >= db:
        c = rem[-1]
        shift = len(rem) - 1 - db
        rem = [x * lc for x in rem]
        for j, d in enumerate(b):
            if d:
                rem[shift + j] -= c * d
        _strip(rem)
    return rem


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor over the rationals, returned primitive with positive leading coefficient.

    Uses the primitive pseudo-remainder sequence so intermediate coefficients stay small.
    """
    if a.is_zero and b.is_zero:
        raise ZeroDivisorError("gcd of two zero polynomials")
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        if b.degree == 0:
            return IntPoly.one()
        r = IntPoly(tuple(_pseudo_remainder(list(a.coeffs), b.coeffs)))
        a, b = b, r.primitive_part()
    return a.primitive_part()
