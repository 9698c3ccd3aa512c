"""q-integers, q-shifted factorials and Gaussian binomial coefficients."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache

from apps.polyring.intpoly import IntPoly
from apps.polyring.ratpoly import RatPoly

from .exceptions import InvalidFactorSpecError


def q_integer(n: int, base: int = 1) -> IntPoly:
    """``[n]_{q^base} = 1 + q^base + … + q^{base(n−1)}``."""
    if n < 1 or base < 1:
        raise ValueError(f"q_integer needs n ≥ 1 and base ≥ 1, got n={n}, base={base}")
    coeffs = [0] * (base * (n - 1) + 1)
    for i in range(n):
        coeffs[base * i] = 1
    return IntPoly.of(coeffs)


@dataclass(frozen=True, slots=True)
class PochFactorSpec:
    """``(sign·q^offset; q^step)_count^exponent`` with the count supplied at evaluation time."""

    sign: int
    offset: int
    step: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise InvalidFactorSpecError(self, "sign must be +1 or -1")
        if self.offset < 0:
            raise InvalidFactorSpecError(self, "offset must be nonnegative")
        if self.step < 1:
            raise InvalidFactorSpecError(self, "step must be positive")
        if self.exponent == 0:
            raise InvalidFactorSpecError(self, "exponent must be nonzero")
        if self.sign == 1 and self.offset == 0:
            raise InvalidFactorSpecError(self, "(1; q)_k vanishes for every k ≥ 1")

    def exponents(self, start: int, stop: int) -> Iterator[int]:
        """q-exponents ``offset + step·j`` of the factors ``j`` in ``[start, stop)``."""
        for j in range(start, stop):
            yield self.offset + self.step * j

    def scaled(self, m: int) -> PochFactorSpec:
        """The same factor with q replaced by ``q^m``."""
        return PochFactorSpec(self.sign, self.offset * m, self.step * m, self.exponent)

    def base_product(self, count: int) -> IntPoly:
        """``∏_{j<count} (1 − sign·q^{offset+step·j})`` before the exponent is applied."""
        product = IntPoly.one()
        for m in self.exponents(0, count):
            product = product.mul_binomial(self.sign, m)
        return product


def q_pochhammer(spec: PochFactorSpec, count: int) -> RatPoly:
    if count < 0:
        raise ValueError(f"Pochhammer count must be nonnegative, got {count}")
    product = spec.base_product(count)
    if spec.exponent > 0:
        return RatPoly(product**spec.exponent)
    return RatPoly(IntPoly.one(), product ** (-spec.exponent))


@cache
def _gaussian_row(total: int, width: int) -> tuple[IntPoly, ...]:
    # Row ``total`` of the q-Pascal triangle, truncated to the first ``width + 1`` entries.
    row: list[IntPoly] = [IntPoly.one()]
    for i in range(1, total + 1):
        upper = min(i, width)
        new_row = [IntPoly.one()]
        for j in range(1, upper + 1):
            left = row[j - 1]
            right = row[j].shift(j) if j < len(row) else IntPoly()
            new_row.append(left + right)
        row = new_row
    return tuple(row)


def q_binomial(total: int, choose: int, base: int = 1) -> IntPoly:
    """Gaussian binomial ``[total, choose]`` in ``q^base``; zero outside ``0 ≤ choose ≤ total``.

    Built with ``[M, K] = [M−1, K−1] + q^K·[M−1, K]`` so every entry stays an integer polynomial.
    """
    if base < 1:
        raise ValueError(f"base must be positive, got {base}")
    if total < 0 or choose < 0 or choose > total:
        return IntPoly()
    choose = min(choose, total - choose)
    return _gaussian_row(total, choose)[choose].subst_power(base)
