"""Verification of the classical supercongruences.

Both sides are exact rationals; a right-hand side carrying ``−Γ_p(1/4)⁴`` is compared in ℤ_p at the largest
target plus ``QDWORK_PADIC_MARGIN``, capped where ``p^s`` would exceed ``QDWORK_GAMMA_MAX_MODULUS``. Without Γ_p
the difference is an exact rational and its valuation is exact.
"""

import time

import structlog
from django.conf import settings

from .base import PParams, Sides, SuperStatement, Target
from .exceptions import GammaPrecisionCapError
from .gamma import quarter_gamma_fourth
from .numbers import padic_of_rational, padic_valuation
from .registry import get_statement
from .reports import PFactorRecord, PReport

logger = structlog.get_logger()


def gamma_precision_cap(p: int) -> int:
    """Largest ``s`` with ``p^s ≤ QDWORK_GAMMA_MAX_MODULUS``, at least 1."""
    limit = settings.QDWORK_GAMMA_MAX_MODULUS
    s = 1
    while p ** (s + 1) <= limit:
        s += 1
    return s


def _gamma_difference(p: int, sides: Sides, targets: list[Target], margin: int) -> tuple[int | None, bool, int]:
    """Valuation of ``lhs + rhs·Γ_p(1/4)⁴``, whether it is exact, and the working precision."""
    cap = gamma_precision_cap(p)
    gating = max((t.exponent for t in targets if not t.informational), default=0)
    if gating > cap:
        raise GammaPrecisionCapError(p, gating, cap)
    precision = min(max(t.exponent for t in targets) + margin, cap)
    rhs = padic_of_rational(sides.rhs, p, precision) * quarter_gamma_fourth(p, precision)
    difference = padic_of_rational(sides.lhs, p, precision) - rhs
    if difference.is_zero:
        return difference.lower_bound, False, precision
    return difference.valuation, True, precision


def verify_super(statement: SuperStatement, params: PParams, *, margin: int | None = None) -> PReport:
    """Check one instance of ``statement`` at each of its targets."""
    started = time.perf_counter()
    margin = settings.QDWORK_PADIC_MARGIN if margin is None else margin
    sides = statement.evaluate(params)
    targets = statement.targets(params)
    notes = statement.notes(params)

    precision: int | None = None
    if sides.gamma:
        achieved, exact, precision = _gamma_difference(params.p, sides, targets, margin)
        if not exact:
            notes.append(f"difference vanishes to the working precision p^{precision}; valuation is a lower bound")
    else:
        achieved, exact = padic_valuation(sides.lhs - sides.rhs, params.p), True

    factors = [
        PFactorRecord.judge(params.p, t.exponent, achieved, exact=exact, informational=t.informational)
        for t in targets
    ]
    notes.extend(
        f"p^{f.target_exponent} is undetermined: the difference vanishes to the capped precision p^{precision}"
        for f in factors
        if f.undetermined
    )
    report = PReport(
        id=statement.id,
        status=statement.status,
        label=statement.label,
        params=params.as_dict(),
        factors=factors,
        passed=all(f.passed is True for f in factors if not f.informational),
        ms=round((time.perf_counter() - started) * 1000, 3),
        precision=precision,
        notes=notes,
    )
    logger.info(
        "Supercongruence verified",
        statement=statement.id,
        params=str(params),
        achieved=achieved,
        passed=report.passed,
        ms=report.ms,
    )
    return report


def theorem12_check(p: int, r: int) -> PReport:
    """``p·(3/4)_L(5/4)_{L'} / ((5/4)_L(3/4)_{L'}) ≡ −Γ_p(1/4)⁴ (mod p^{2r})`` for ``p ≡ 1 (mod 4)``."""
    return verify_super(get_statement("P-T12"), PParams(p=p, r=r))
