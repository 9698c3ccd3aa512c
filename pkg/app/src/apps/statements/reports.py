"""Verification reports for q-statements, serialized with their JSON field names (``N``, ``e``, ``pass``)."""

from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class FactorRecord(BaseModel):
    """Verdict at one modulus factor ``Φ_N^e``.

    ``achieved`` is the Φ_N-valuation of LHS − RHS; ``None`` stands for +∞ (the difference is exactly 0).
    ``exact`` is false when only a lower bound could be established.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    index: int = Field(alias="N")
    exponent: int = Field(alias="e")
    achieved: int | None
    passed: bool = Field(alias="pass")
    exact: bool = True

    @classmethod
    def judge(cls, index: int, exponent: int, achieved: int | None, *, exact: bool = True) -> Self:
        passed = achieved is None or achieved >= exponent
        return cls(index=index, exponent=exponent, achieved=achieved, passed=passed, exact=exact)


class QReport(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: Literal["q"] = "q"
    id: str
    status: str
    label: str = ""
    params: dict[str, int]
    engine: Literal["dense", "local"]
    factors: list[FactorRecord]
    passed: bool = Field(alias="pass")
    ms: float
    padding: int | None = None
    retries: int = 0
    notes: list[str] = []

    @model_validator(mode="after")
    def _overall_matches_factors(self) -> Self:
        if self.passed != all(f.passed for f in self.factors):
            raise ValueError("overall pass must equal the conjunction of the per-factor verdicts")
        return self

    @property
    def fails_run(self) -> bool:
        """A failing PROVEN instance fails the run; conjectures are only recorded."""
        return self.status == "PROVEN" and not self.passed
