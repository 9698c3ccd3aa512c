"""Executable forms of the q-Lucas theorem and of the ``(−q; q)`` reduction modulo Φ_n."""

from math import comb

from apps.polyring.cyclotomic import cyclotomic

from .exceptions import CombinatoricsError, DigitsOutOfRangeError
from .qseries import PochFactorSpec, q_binomial

NEG_Q = PochFactorSpec(sign=-1, offset=1, step=1)


def q_lucas_check(a: int, b: int, r: int, s: int, n: int) -> bool:
    """Whether ``[an+b, rn+s] ≡ C(a, r)·[b, s] (mod Φ_n)``; always true for digits ``b, s ≤ n−1``."""
    if n < 1:
        raise CombinatoricsError(f"q-Lucas base must be positive, got {n}")
    if min(a, b, r, s) < 0 or b > n - 1 or s > n - 1:
        raise DigitsOutOfRangeError({"a": a, "b": b, "r": r, "s": s}, n)
    lhs = q_binomial(a * n + b, r * n + s)
    rhs = q_binomial(b, s) * comb(a, r)
    return ((lhs - rhs) % cyclotomic(n)).is_zero


def neg_q_reduction_check(r: int, s: int, n: int) -> bool:
    """Whether ``(−q; q)_{rn+s} ≡ 2^r·(−q; q)_s (mod Φ_n)`` for odd ``n`` and ``s ≤ n−1``."""
    if n < 1 or n % 2 == 0:
        raise CombinatoricsError(f"the (−q; q) reduction needs an odd positive modulus index, got {n}")
    if r < 0 or s < 0 or s > n - 1:
        raise DigitsOutOfRangeError({"r": r, "s": s}, n)
    phi = cyclotomic(n)
    lhs = NEG_Q.base_product(r * n + s) % phi
    rhs = (NEG_Q.base_product(s) * 2**r) % phi
    return lhs == rhs
