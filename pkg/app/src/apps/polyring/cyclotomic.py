from __future__ import annotations

from functools import cache

from sympy import divisors, factorint

from .exceptions import UndefinedIndexError, ZeroValuationError
from .intpoly import IntPoly
from .ratpoly import RatPoly


def mobius(n: int) -> int:
    exponents = factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


@cache
def cyclotomic(index: int) -> IntPoly:
    """Φ_N(q) as the Möbius product of ``q^d − 1`` over the divisors of N, using exact divisions only."""
    if index < 1:
        raise UndefinedIndexError(index)
    if index == 1:
        return IntPoly.of((-1, 1))

    # For N > 1 the Möbius exponents sum to zero, so the product of (1 − q^d) equals Φ_N up to sign.
    product = IntPoly.one()
    divided: list[int] = []
    for d in divisors(index):
        mu = mobius(index // d)
        if mu == 1:
            product = product.mul_binomial(1, d)
        elif mu == -1:
            divided.append(d)
    for d in divided:
        product = -product.exact_quotient(IntPoly.monomial(d) - 1)
    return product if product.leading > 0 else -product


def strip_phi(poly: IntPoly, index: int) -> tuple[int, IntPoly]:
    """Largest ``v`` with Φ_N^v dividing ``poly`` and the cofactor, by repeated trial division."""
    if poly.is_zero:
        raise ZeroValuationError(index)
    phi = cyclotomic(index)
    v = 0
    while poly.degree >= phi.degree:
        quotient, remainder = poly.divrem(phi)
        if remainder:
            break
        poly = quotient
        v += 1
    return v, poly


def phi_valuation(f: RatPoly | IntPoly, index: int) -> tuple[int, RatPoly]:
    """Φ_N-adic valuation ``v(num) − v(den)`` and the cofactor ``f / Φ_N^v``."""
    f = RatPoly.of(f)
    if f.is_zero:
        raise ZeroValuationError(index)
    v_num, num = strip_phi(f.num, index)
    v_den, den = strip_phi(f.den, index)
    return v_num - v_den, RatPoly(num, den)


def value_at_one(f: RatPoly) -> RatPoly | None:
    """Value at q = 1 after cancelling the removable factors ``q − 1``; ``None`` at a pole."""
    if f.is_zero:
        return f
    v, cofactor = phi_valuation(f, 1)
    if v < 0:
        return None
    if v > 0:
        return RatPoly(IntPoly())
    return RatPoly.of(cofactor.evaluate(1))
