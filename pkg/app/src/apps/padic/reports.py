"""Reports of the p-adic side; the JSON shape mirrors the q-side with p-adic factor records."""

from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class PFactorRecord(BaseModel):
    """Verdict at one modulus ``p^target_exponent``; ``achieved_valuation`` is ``None`` for an exact zero.

    An inexact valuation is only a lower bound: below the target it leaves the verdict undetermined (``None``).
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    p: int
    target_exponent: int
    achieved_valuation: int | None
    passed: bool | None = Field(alias="pass")
    exact: bool = True
    informational: bool = False

    @classmethod
    def judge(
        cls, p: int, exponent: int, achieved: int | None, *, exact: bool = True, informational: bool = False
    ) -> Self:
        passed: bool | None = achieved is None or achieved >= exponent
        if not passed and not exact:
            passed = None
        return cls(
            p=p,
            target_exponent=exponent,
            achieved_valuation=achieved,
            passed=passed,
            exact=exact,
            informational=informational,
        )

    @property
    def undetermined(self) -> bool:
        return self.passed is None


class PReport(BaseModel):
    """Verdict of one instance; ``error`` marks an instance that could not be decided at all."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: Literal["p"] = "p"
    id: str
    status: str
    label: str = ""
    params: dict[str, int]
    factors: list[PFactorRecord]
    passed: bool = Field(alias="pass")
    ms: float
    precision: int | None = None
    notes: list[str] = []
    error: str | None = None

    @classmethod
    def undecided(cls, statement_id: str, status: str, params: dict[str, int], error: str) -> Self:
        return cls(
            id=statement_id, status=status, params=params, factors=[], passed=False, ms=0.0, notes=[error], error=error
        )

    @model_validator(mode="after")
    def _overall_matches_factors(self) -> Self:
        gating = all(f.passed is True for f in self.factors if not f.informational)
        if self.passed != (self.error is None and gating):
            raise ValueError("overall pass must equal the conjunction of the gating factor verdicts")
        return self

    @property
    def fails_run(self) -> bool:
        return self.status == "PROVEN" and not self.passed


class DworkReport(BaseModel):
    """Outcome of the cross-multiplied Dwork congruence ``f_{r+1}(z)f_{r−1}(z^p) ≡ f_r(z)f_r(z^p) (mod p^r)``."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: Literal["dwork"] = "dwork"
    family: str
    p: int
    r: int
    zdeg: int
    achieved: int | None
    worst_degree: int | None = None
    guard: bool
    passed: bool = Field(alias="pass")
    ms: float
    notes: list[str] = []

    @property
    def fails_run(self) -> bool:
        return not self.passed


class GammaReport(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: Literal["gamma"] = "gamma"
    p: int
    x: str
    precision: int
    value: int
    ms: float

    @property
    def fails_run(self) -> bool:
        return False


class GammaIdentityReport(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: Literal["gamma-identities"] = "gamma-identities"
    p: int
    precision: int
    checks: dict[str, int]
    failures: list[str]
    passed: bool = Field(alias="pass")

    @property
    def fails_run(self) -> bool:
        return not self.passed
