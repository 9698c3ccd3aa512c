"""The two verification engines.

The dense engine builds both sides as exact rational functions and factors the difference; it is the
oracle and refuses instances beyond ``QDWORK_DENSE_DEGREE_BUDGET``. The local engine evaluates both sides
in the localization at each Φ_N, working modulo Φ_N^w with ``w`` from the precision plan plus a padding
that doubles whenever the comparison cannot be decided.
"""

import time
from enum import StrEnum

import structlog
from django.conf import settings
from sympy import totient

from apps.localring.exceptions import PrecisionExhaustedError
from apps.localring.precision import precision_plan
from apps.polyring.modulus import CyclotomicModulus

from .base import CongruenceStatement, QParams
from .congruence import congruent
from .exceptions import DegreeBudgetExceededError
from .expressions import Side
from .reports import FactorRecord, QReport

logger = structlog.get_logger()


class Engine(StrEnum):
    DENSE = "dense"
    LOCAL = "local"


def verify_q(
    statement: CongruenceStatement,
    params: QParams,
    engine: Engine | str = Engine.LOCAL,
    *,
    budget: int | None = None,
    padding: int | None = None,
) -> QReport:
    """Check one instance of ``statement`` and report the verdict at every modulus factor."""
    engine = Engine(engine)
    started = time.perf_counter()
    lhs, rhs = statement.build(params)
    modulus = statement.modulus_of(params)

    used_padding: int | None = None
    retries = 0
    if engine is Engine.DENSE:
        factors = _verify_dense(statement, params, lhs, rhs, modulus, budget)
    else:
        factors = []
        used_padding = 0
        for index, exponent in modulus:
            record, final_padding, factor_retries = verify_factor_local(lhs, rhs, index, exponent, padding)
            factors.append(record)
            used_padding = max(used_padding, final_padding)
            retries += factor_retries

    report = QReport(
        id=statement.id,
        status=statement.status,
        label=statement.label,
        params=params.as_dict(),
        engine=engine.value,
        factors=factors,
        passed=all(f.passed for f in factors),
        ms=round((time.perf_counter() - started) * 1000, 3),
        padding=used_padding,
        retries=retries,
        notes=statement.notes(params),
    )
    logger.info(
        "Statement verified",
        statement=statement.id,
        params=str(params),
        engine=engine.value,
        passed=report.passed,
        ms=report.ms,
    )
    return report


def _verify_dense(
    statement: CongruenceStatement,
    params: QParams,
    lhs: Side,
    rhs: Side,
    modulus: CyclotomicModulus,
    budget: int | None,
) -> list[FactorRecord]:
    budget = settings.QDWORK_DENSE_DEGREE_BUDGET if budget is None else budget
    predicted = lhs.degree() + rhs.degree()
    if predicted > budget:
        raise DegreeBudgetExceededError(statement.id, predicted, budget)
    logger.debug("Dense evaluation", statement=statement.id, params=str(params), predicted_degree=predicted)
    return congruent(lhs.dense(), rhs.dense(), modulus)


def verify_factor_local(
    lhs: Side, rhs: Side, index: int, exponent: int, padding: int | None = None
) -> tuple[FactorRecord, int, int]:
    """Verdict at ``Φ_index^exponent`` in the localization, with the final padding and the number of retries.

    A nonzero difference carries its exact valuation. A difference that vanishes to absolute precision ``a``
    is exactly zero once ``a·φ(N)`` exceeds the degree bound of its numerator; until then the padding
    doubles. At the padding ceiling the known lower bound is reported as inexact, or precision is
    exhausted if that bound is below ``exponent``.
    """
    padding = settings.QDWORK_LOCAL_PADDING if padding is None else padding
    ceiling = max(settings.QDWORK_LOCAL_MAX_PADDING, padding)
    plan = precision_plan(lhs, rhs, index, exponent)
    degree_bound = lhs.degree() + rhs.degree()
    phi_degree = int(totient(index))
    retries = 0
    while True:
        working = plan + padding
        available = 0
        try:
            difference = lhs.local(index, working) - rhs.local(index, working)
        except PrecisionExhaustedError as exc:
            logger.debug("Local evaluation ran out of precision", index=index, working=working, error=str(exc))
        else:
            if not difference.is_zero:
                return FactorRecord.judge(index, exponent, difference.valuation), padding, retries
            available = difference.absolute_precision
            if available * phi_degree > degree_bound:
                return FactorRecord.judge(index, exponent, None), padding, retries

        if padding >= ceiling:
            if available < exponent:
                raise PrecisionExhaustedError(index, available, exponent)
            logger.warning("Difference vanishes to the padding ceiling", index=index, lower_bound=available)
            return FactorRecord.judge(index, exponent, available, exact=False), padding, retries
        padding = min(max(2 * padding, 1), ceiling)
        retries += 1
        logger.debug("Retrying with doubled padding", index=index, padding=padding)
