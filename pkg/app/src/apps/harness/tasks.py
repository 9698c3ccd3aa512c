from typing import Any, Literal

import structlog
from pydantic import BaseModel, ConfigDict

from apps.padic import registry as p_registry
from apps.padic.base import PParams
from apps.padic.dwork import DworkSeries, dwork_check
from apps.padic.exceptions import PadicError
from apps.padic.gamma import gamma_identities_check
from apps.padic.reports import PReport
from apps.padic.verification import verify_super
from apps.statements import registry as q_registry
from apps.statements.base import QParams
from apps.statements.engines import verify_q
from apps.statements.exceptions import DegreeBudgetExceededError

from .config import SweepConfig
from .exceptions import SweepConfigError
from .lookup import resolve
from .reports import Report

logger = structlog.get_logger()

ENGINES: dict[str, tuple[Literal["dense", "local"], ...]] = {
    "local": ("local",),
    "dense": ("dense",),
    "both": ("dense", "local"),
}


class VerificationTask(BaseModel):
    """One picklable unit of sweep work; ``target`` is a statement id or a Dwork family."""

    model_config = ConfigDict(frozen=True)

    index: int
    kind: Literal["q", "p", "dwork", "gamma-identities"]
    target: str
    params: dict[str, int]
    engine: Literal["dense", "local"] = "local"
    budget: int | None = None

    def run(self) -> Report | None:
        """The report, or ``None`` when the dense oracle declines an instance beyond its budget.

        A p-side instance that cannot be evaluated, such as one beyond the Γ_p cap, gives an undecided report.
        """
        match self.kind:
            case "q":
                statement = q_registry.get_statement(self.target)
                try:
                    return verify_q(statement, QParams(**self.params), self.engine, budget=self.budget)
                except DegreeBudgetExceededError as exc:
                    logger.info("Dense oracle skipped", statement=self.target, params=self.params, error=str(exc))
                    return None
            case "p":
                super_statement = p_registry.get_statement(self.target)
                p_params = PParams(**self.params)
                try:
                    return verify_super(super_statement, p_params)
                except PadicError as exc:
                    logger.warning(
                        "Supercongruence undecided", statement=self.target, params=self.params, error=str(exc)
                    )
                    return PReport.undecided(
                        super_statement.id, super_statement.status, p_params.as_dict(), str(exc)
                    )
            case "dwork":
                return dwork_check(DworkSeries.named(self.target), self.params["p"], self.params["r"])
            case "gamma-identities":
                return gamma_identities_check(self.params["p"], self.params["precision"], seed=self.params["seed"])


def plan(config: SweepConfig, *, seed: int = 0, source: str = "<config>") -> list[VerificationTask]:
    """Every task a config describes, in a deterministic order."""
    q_statements, p_statements = resolve(config.statements)
    engines = ENGINES[config.engine]
    specs: list[dict[str, Any]] = []

    q_grid = config.q_grid()
    for statement in q_statements:
        for q_params in statement.instances(q_grid):
            params = q_params.as_dict()
            specs.extend(
                {"kind": "q", "target": statement.id, "params": params, "engine": engine, "budget": config.budget}
                for engine in engines
            )
    p_grid = config.p_grid()
    for super_statement in p_statements:
        specs.extend(
            {"kind": "p", "target": super_statement.id, "params": p_params.as_dict()}
            for p_params in super_statement.instances(p_grid)
        )
    for family in config.dwork_families:
        specs.extend(
            {"kind": "dwork", "target": family, "params": {"p": p, "r": r}}
            for p in config.dwork_p
            for r in range(1, config.dwork_r_max + 1)
        )
    for p in config.gamma_p:
        params = {"p": p, "precision": config.gamma_precision, "seed": seed}
        specs.append({"kind": "gamma-identities", "target": "gamma", "params": params})

    if not specs:
        raise SweepConfigError(source, "the grid plans no instances")
    return [VerificationTask(index=index, **spec) for index, spec in enumerate(specs)]
