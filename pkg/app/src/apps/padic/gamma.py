"""Morita's p-adic Gamma function by the defining product, and a self-check of its standard identities."""

import random
from collections.abc import Iterable
from fractions import Fraction
from functools import cache
from itertools import product

import structlog

from .exceptions import NotPadicIntegerError, UnsupportedPrimeError
from .numbers import PadicInt, padic_of_rational
from .reports import GammaIdentityReport

logger = structlog.get_logger()

QUARTER = Fraction(1, 4)


@cache
def gamma_integer(n: int, p: int, modulus: int) -> int:
    """``Γ_p(n) = (−1)^n ∏_{0<k<n, p∤k} k`` reduced modulo ``modulus``."""
    value = 1
    for k in range(1, n):
        if k % p:
            value = value * k % modulus
    return (-value if n % 2 else value) % modulus


def gamma_integers(ns: Iterable[int], p: int, modulus: int) -> dict[int, int]:
    """``Γ_p(n)`` modulo ``modulus`` for every ``n`` in ``ns``, in one pass of the running product."""
    values: dict[int, int] = {}
    running, k = 1, 1
    for n in sorted(set(ns)):
        while k < n:
            if k % p:
                running = running * k % modulus
            k += 1
        values[n] = (-running if n % 2 else running) % modulus
    return values


def representative(x: int | Fraction, p: int, precision: int) -> int:
    """The integer in ``[0, p^precision)`` congruent to ``x``."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPadicIntegerError(x, p)
    modulus = p**precision
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def gamma_p(x: int | Fraction, p: int, precision: int) -> PadicInt:
    """``Γ_p(x)`` modulo ``p^precision``.

    Γ_p is 1-Lipschitz, so its value at any ``x ∈ ℤ_p`` agrees modulo ``p^s`` with the value at the integer
    representative of ``x`` in ``[0, p^s)``, where the defining product applies.
    """
    if p == 2:
        raise UnsupportedPrimeError(p, "gamma_p")
    modulus = p**precision
    value = gamma_integer(representative(x, p, precision), p, modulus)
    return padic_of_rational(value, p, precision)


def quarter_gamma_fourth(p: int, precision: int) -> PadicInt:
    """``−Γ_p(1/4)⁴``, the recurring right-hand side of the (1/2)_k³/k!³ supercongruences."""
    return -(gamma_p(QUARTER, p, precision) ** 4)


# ── identities ──


def _first_digit(x: Fraction, p: int) -> int:
    """``a_0(x) ∈ {1, …, p}`` with ``a_0 ≡ x (mod p)``."""
    return representative(x, p, 1) or p


def _random_padic_rationals(p: int, count: int, rng: random.Random) -> list[Fraction]:
    values = [QUARTER, Fraction(3, 4), Fraction(1, 2)]
    while len(values) < count:
        den = rng.randint(1, 50)
        if den % p:
            values.append(Fraction(rng.randint(-200, 200), den))
    return values


def gamma_identities_check(p: int, precision: int, *, seed: int = 0, samples: int = 50) -> GammaIdentityReport:
    """Check the functional equation, the reflection formula, m-linearity and Lipschitz stability of Γ_p.

    The functional equation ``Γ_p(x+1) = −x Γ_p(x)`` (``−Γ_p(x)`` when ``p | x``) runs over integers
    ``1 ≤ x ≤ p²``. The reflection ``Γ_p(x)Γ_p(1−x) = (−1)^{a_0(x)}`` runs over ``samples`` rationals in ℤ_p,
    including 1/4, and on the same sample a value computed at precision ``s+2`` must reduce to the value at
    ``s``. The derivative-free form ``Γ_p(a + m p^r) − Γ_p(a) ≡ m(Γ_p(a + p^r) − Γ_p(a)) (mod p^{2r})``
    runs over ``a ∈ {1/4, 3/4, 1/2}``, ``1 ≤ m ≤ 5`` and ``r ∈ {1, 2}`` for ``p ≥ 5``.
    """
    if p == 2:
        raise UnsupportedPrimeError(p, "gamma_identities_check")
    rng = random.Random(seed)
    modulus = p**precision
    checks = {"functional": 0, "reflection": 0, "linearity": 0, "stability": 0, "lipschitz": 0}
    failures: list[str] = []

    for x in range(1, p * p + 1):
        expected = -1 if x % p == 0 else -x
        if gamma_integer(x + 1, p, modulus) != expected * gamma_integer(x, p, modulus) % modulus:
            failures.append(f"functional equation at x={x}")
        checks["functional"] += 1

    sample = _random_padic_rationals(p, samples, rng)
    finer = precision + 2
    lifted = gamma_integers((representative(x, p, finer) for x in sample), p, p**finer)
    for x in sample:
        value = gamma_p(x, p, precision)
        sign = -1 if _first_digit(x, p) % 2 else 1
        if not (value * gamma_p(1 - x, p, precision)).congruent(sign, precision):
            failures.append(f"reflection at x={x}")
        checks["reflection"] += 1
        if not value.congruent(lifted[representative(x, p, finer)], precision):
            failures.append(f"stability at x={x}")
        checks["stability"] += 1

    if p % 4 == 1:
        pair = gamma_p(QUARTER, p, precision) * gamma_p(Fraction(3, 4), p, precision)
        if not pair.congruent(-1 if (p + 3) // 4 % 2 else 1, precision):
            failures.append("Γ_p(1/4)Γ_p(3/4) = (−1)^{(p+3)/4}")
        checks["reflection"] += 1

    for a, r in product((QUARTER, Fraction(3, 4), Fraction(1, 2)), (1, 2)) if p >= 5 else ():
        target = 2 * r
        base = gamma_p(a, p, target)
        step = gamma_p(a + p**r, p, target) - base
        for m in range(1, 6):
            shifted = gamma_p(a + m * p**r, p, target) - base
            if not shifted.congruent(step * m, target):
                failures.append(f"linearity at a={a}, m={m}, r={r}")
            checks["linearity"] += 1

    for t in (1, 2, 3):
        shifted = gamma_p(QUARTER + t * modulus, p, precision + 2)
        if not shifted.congruent(gamma_p(QUARTER, p, precision + 2), precision):
            failures.append(f"Lipschitz shift at t={t}")
        checks["lipschitz"] += 1

    logger.info("Γ_p identities checked", p=p, precision=precision, checks=sum(checks.values()), failures=len(failures))
    return GammaIdentityReport(p=p, precision=precision, checks=checks, failures=failures, passed=not failures)
